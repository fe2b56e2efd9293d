#include "atomic/atomic.hpp"

#include <iostream>

int main()
{
    using namespace atomic;
    // 3-cores are the (n+1)-cores for n = 2
    for (const auto& [size, cores] : orbit_cores(2, 12)) {
        std::cout << size << ":";
        for (const auto& p : cores) {
            std::cout << " (";
            for (std::size_t k = 0; k < p.parts().size(); ++k) std::cout << (k ? "," : "") << p.parts()[k];
            std::cout << ")";
        }
        std::cout << "\n";
    }
}
