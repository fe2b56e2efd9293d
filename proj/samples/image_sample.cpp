#include "atomic/atomic.hpp"

#include <iostream>

int main()
{
    using namespace atomic;
    for (const char* t : {"A2", "B2", "G2", "A4", "D4"}) {
        const auto sys = build_root_system(t);
        const auto rep = image_set(sys, WeightVec::rho(*sys));
        std::cout << t << ": max " << rep.max_value << ", " << rep.values.size() << " values, "
                  << (rep.surjective() ? "surjective" : "gaps") << "\n";
        for (long long m : rep.missing) std::cout << "  missing " << m << "\n";
    }
}
