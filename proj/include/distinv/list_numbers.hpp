#ifndef DISTINV_LIST_NUMBERS_HPP
#define DISTINV_LIST_NUMBERS_HPP

#include <optional>
#include <vector>

#include "distinv/bigcount.hpp"
#include "distinv/caps.hpp"
#include "distinv/labeling_search.hpp"
#include "distinv/list_assignment.hpp"

namespace distinv {

enum class CharStrategy {
    membership, // sweep canonical sequences, test selectability (default)
    counting,   // union count of the satisfying labelings vs C(m,d)^n
};

struct CharAtResult {
    bool holds = false;
    Count b_count; // sequences admitting a satisfying selection
    Count a_count; // all sequences of d-subsets of {1..m}
    std::optional<ListAssignment> witness; // canonical non-selectable sequence
};

// Decides whether every sequence of d-subsets of {1..m} admits a satisfying
// selection, reporting exact counts. The membership strategy sweeps canonical
// representatives (renaming-orbit reduction) and accumulates orbit sizes; the
// counting strategy compares the union count of the satisfying-labeling
// family against C(m,d)^n.
CharAtResult characterization_holds_at(Predicate pred, const Graph& g,
                                       const AutomorphismGroup& aut, int d, int m,
                                       CharStrategy strategy = CharStrategy::membership,
                                       const Caps& caps = {});

struct CharacterizationEntry {
    int m = 0;
    Count b_count;
    Count a_count;
    bool equal = false;
};

struct CharacterizationReport {
    int d = 0;
    int m_max = 0;
    std::vector<CharacterizationEntry> per_m;
    bool verdict = false;
    std::optional<ListAssignment> witness;
};

struct ListNumberResult {
    int value = 0;
    std::vector<CharacterizationReport> reports; // one per tried d, ascending
};

// Least d such that the characterization holds for every m in [d, m_max],
// where m_max defaults to n*d (a violating size-d assignment has at most n*d
// distinct labels after renaming, which makes the universal quantifier
// finite). d starts at min_labels(pred, g).
ListNumberResult list_number_characterization(Predicate pred, const Graph& g,
                                              std::optional<int> m_max_override = std::nullopt,
                                              const Caps& caps = {});

struct DirectKResult {
    int k = 0;
    bool passes = false;
    std::optional<ListAssignment> witness; // first canonical assignment that fails
    std::uint64_t representatives = 0;
};

struct ListNumberDirectResult {
    std::optional<int> value; // least passing k, if any within k_max
    std::vector<DirectKResult> per_k;
};

// Definition-level oracle: k passes iff every canonical list assignment of
// size k over {1..n*k} admits a satisfying selection. Each k is evaluated
// independently.
ListNumberDirectResult list_number_direct(Predicate pred, const Graph& g, int k_max,
                                          const Caps& caps = {});

} // namespace distinv

#endif
