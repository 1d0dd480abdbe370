#ifndef DISTINV_SUITES_HPP
#define DISTINV_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "distinv/caps.hpp"
#include "distinv/graph.hpp"

namespace distinv {

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
};

// Randomized four-way counting equality (closed forms, both inclusion-
// exclusion paths, the universe recurrence, the enumeration oracle) plus the
// structural counting properties.
SuiteResult run_counting_suite(std::uint64_t seed, int instances, const Caps& caps = {});

// Exhaustive labeling-engine properties over every graph with at most five
// vertices.
SuiteResult run_labeling_suite(const Caps& caps = {});

// Constructive friendship labeling under random list assignments.
SuiteResult run_friendship_suite(std::uint64_t seed, int trials_per_n, const Caps& caps = {});

// Constructive book labeling under random list assignments.
SuiteResult run_book_suite(std::uint64_t seed, int trials_per_n, const Caps& caps = {});

// Characterization-vs-direct equality on the desk suite, plus strategy
// agreement and canonicalization soundness spot checks.
SuiteResult run_listnum_suite(std::uint64_t seed, const Caps& caps = {});

std::vector<SuiteResult> run_suites(const std::string& selector, std::uint64_t seed, int count,
                                    const Caps& caps = {});

// Helpers shared with the acceptance tests.
Graph graph_from_edge_mask(int n, std::uint32_t mask);
bool is_connected(const Graph& g);
// One representative per isomorphism class of connected graphs on exactly n
// vertices, by minimum relabeled edge mask. Intended for n <= 6.
std::vector<Graph> connected_graphs_up_to_iso(int n);
// The fixed desk-scale comparison suite.
std::vector<Graph> desk_suite(bool include_larger);

} // namespace distinv

#endif
