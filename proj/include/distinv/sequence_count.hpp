#ifndef DISTINV_SEQUENCE_COUNT_HPP
#define DISTINV_SEQUENCE_COUNT_HPP

#include <span>
#include <vector>

#include "distinv/bigcount.hpp"
#include "distinv/caps.hpp"
#include "distinv/labeling.hpp"

namespace distinv {

// A family of t label functions over a common domain of n points, together
// with the list parameters (m, d): lists are d-subsets of {1..m}.
struct FunctionFamily {
    std::vector<Labeling> functions;
    int domain_size = 0; // n
    int universe = 0;    // m
    int list_size = 0;   // d

    int t() const { return static_cast<int>(functions.size()); }
    void validate() const;
};

// counts[p-1]: number of domain points on which the chosen sub-family takes
// exactly p distinct values.
struct OverlapProfile {
    std::vector<int> counts;
};

// One candidate list per domain point; each list a sorted d-subset of {1..m}.
using RelatedSequence = std::vector<std::vector<int>>;

// Number of sequences of d-lists covering one fixed function: C(m-1,d-1)^n.
Count related_sequence_count(int n, int m, int d);

// Total number of sequences of d-subsets of {1..m}: C(m,d)^n.
Count total_sequences(int n, int m, int d);

OverlapProfile overlap_profile(const FunctionFamily& fam, std::span<const int> subset);

// Number of sequences covering every function of the profiled sub-family
// simultaneously: prod_p C(m-p, d-p)^{n^(p)}, zero as soon as p > d.
Count intersection_count(const OverlapProfile& profile, int m, int d);

// Union count, telescoped: S_1 plus, for each later function, its count of
// sequences not shared with any earlier function (inclusion-exclusion over
// earlier sub-families).
Count union_count_paper(const FunctionFamily& fam, const Caps& caps = {});

// Independent referee: plain inclusion-exclusion over all non-empty
// sub-families.
Count union_count_subsets(const FunctionFamily& fam, const Caps& caps = {});

// Union count by recursion on the universe size: expand the union over
// witness sub-families, then evaluate each intersection term by splitting on
// the set of points whose lists contain the top label (those recurse at
// (m-1, d-1) with the forced value dropped; the rest at (m-1, d)). Memoized
// on (domain mask, m, d). Collapses to the plain partition recursion when
// t = 1.
Count union_count_recurrence(const FunctionFamily& fam, const Caps& caps = {});

// Ground-truth oracle: the explicit union, deduplicated, lexicographically
// sorted.
std::vector<RelatedSequence> enumerate_B(const FunctionFamily& fam,
                                         std::uint64_t space_cap = 10'000'000);

} // namespace distinv

#endif
