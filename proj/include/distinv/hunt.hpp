#ifndef DISTINV_HUNT_HPP
#define DISTINV_HUNT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distinv/caps.hpp"
#include "distinv/list_assignment.hpp"

namespace distinv {

struct HuntHit {
    std::size_t index = 0; // position in the input stream
    Graph graph;
    int base = 0; // list size that was defeated
    ListAssignment violating;
    bool reverified = false;
};

struct HuntSkip {
    std::size_t index = 0;
    std::string reason;
};

struct HuntReport {
    std::vector<HuntHit> hits;
    std::vector<HuntSkip> skips;
    std::size_t scanned = 0;
};

// For each graph, computes base = min_labels(pred, G) (or uses fixed_k) and
// sweeps every canonical list assignment of that size; any assignment with no
// satisfying selection is a hit, re-verified by an exhaustive product scan
// before being reported. Graphs that blow a cap are skipped and logged, never
// silently dropped.
HuntReport hunt(Predicate pred, std::span<const Graph> graphs,
                std::optional<int> fixed_k = std::nullopt, const Caps& caps = {});

// Independent confirmation that no selection from `a` satisfies pred: plain
// odometer over the full product space, no backtracking shortcuts.
bool confirm_no_selection(Predicate pred, const Graph& g, const AutomorphismGroup& aut,
                          const ListAssignment& a, std::uint64_t product_cap);

} // namespace distinv

#endif
