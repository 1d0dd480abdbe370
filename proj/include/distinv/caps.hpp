#ifndef DISTINV_CAPS_HPP
#define DISTINV_CAPS_HPP

#include <cstdint>

namespace distinv {

// Work and size limits shared across the solvers. Conservative desk-scale
// defaults; every overflow surfaces as a cap_error.
struct Caps {
    std::uint64_t group_order = 1'000'000;      // stored automorphisms
    std::uint64_t labeling_space = 100'000'000; // m^n candidates per enumeration
    std::uint64_t product_space = 10'000'000;   // list-product leaves per selection
    std::uint64_t sequence_space = 10'000'000;  // C(m,d)^n sequences per sweep
    int subset_terms = 20;                      // family size t for 2^t expansions
    int recurrence_domain = 16;                 // domain points for the subset recurrence
    int jobs = 0;                               // 0 = library default thread count
};

} // namespace distinv

#endif
