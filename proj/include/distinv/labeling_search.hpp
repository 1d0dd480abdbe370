#ifndef DISTINV_LABELING_SEARCH_HPP
#define DISTINV_LABELING_SEARCH_HPP

#include <cstdint>

#include "distinv/caps.hpp"
#include "distinv/labeling.hpp"

namespace distinv {

struct MinLabelsResult {
    int count = 0;
    Labeling witness; // lexicographically least satisfying label vector
};

// Least r >= 1 admitting a labeling from {1..r} that satisfies pred.
// Backtracks over label vectors in lexicographic order with canonical label
// introduction (a new label may only be 1 + the largest label used so far),
// maintaining the set of automorphisms still consistent with the assigned
// prefix so the leaf stabilizer test is incremental. Returns 0 for the empty
// graph.
MinLabelsResult min_labels(Predicate pred, const Graph& g, const AutomorphismGroup& aut);
MinLabelsResult min_labels(Predicate pred, const Graph& g, const Caps& caps = {});

// The literal set of satisfying labelings V -> {1..m}: all m^n candidates are
// tested, no symmetry quotient. Members come back in lexicographic order.
struct LabelingSet {
    std::vector<Labeling> members;
    int graph_order = 0;
    int label_bound = 0;
    Predicate predicate = Predicate::distinguishing;

    std::size_t count() const { return members.size(); }
};

LabelingSet enumerate_labelings(Predicate pred, const Graph& g, const AutomorphismGroup& aut,
                                int m, std::uint64_t space_cap, int jobs = 0);

namespace serial {
// Reference implementation: plain odometer loop, no worker partitioning.
LabelingSet enumerate_labelings(Predicate pred, const Graph& g, const AutomorphismGroup& aut,
                                int m, std::uint64_t space_cap);
} // namespace serial

} // namespace distinv

#endif
