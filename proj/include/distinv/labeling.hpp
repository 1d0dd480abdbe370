#ifndef DISTINV_LABELING_HPP
#define DISTINV_LABELING_HPP

#include <string_view>
#include <vector>

#include "distinv/automorphism.hpp"
#include "distinv/graph.hpp"

namespace distinv {

// Total assignment of positive integer labels to vertices 0..n-1.
struct Labeling {
    std::vector<int> labels;

    int size() const { return static_cast<int>(labels.size()); }
    int operator[](int v) const { return labels[v]; }

    auto operator<=>(const Labeling&) const = default;
};

enum class Predicate {
    distinguishing,        // only the identity automorphism preserves all labels
    proper,                // adjacent vertices get distinct labels
    proper_distinguishing, // both
};

Predicate predicate_from_string(std::string_view name);
std::string_view predicate_name(Predicate p);

bool is_proper(const Graph& g, const std::vector<int>& labels);

// True iff no non-identity group element preserves every label. Assumes
// elements[0] is the identity.
bool stabilizer_is_trivial(const AutomorphismGroup& aut, const std::vector<int>& labels);

// Predicate dispatch. Throws truncated_group_error when the predicate needs
// the group and it is incomplete.
bool satisfies(Predicate pred, const Graph& g, const AutomorphismGroup& aut, const Labeling& c);

} // namespace distinv

#endif
