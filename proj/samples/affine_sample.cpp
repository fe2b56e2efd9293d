#include "atomic/atomic.hpp"

#include <iostream>

int main()
{
    using namespace atomic;
    const auto sys = build_root_system("A2~");
    const auto lambda = AffineWeight::lambda0(*sys);
    for (const AffineWord& word : {AffineWord{}, AffineWord{0}, AffineWord{0, 1, 2, 0}, AffineWord{2, 0, 1, 2, 0}}) {
        const auto w = affine_from_word(sys, word);
        std::cout << "word [";
        for (std::size_t k = 0; k < word.size(); ++k) std::cout << (k ? "," : "") << word[k];
        std::cout << "] beta (";
        for (std::size_t k = 0; k < w.beta().size(); ++k) std::cout << (k ? "," : "") << w.beta()[k];
        std::cout << ") L = " << affine_atomic_length(sys, word, lambda) << "\n";
    }
}
