#ifndef DISTINV_LIST_ASSIGNMENT_HPP
#define DISTINV_LIST_ASSIGNMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "distinv/bigcount.hpp"
#include "distinv/labeling.hpp"

namespace distinv {

// Per-vertex label lists of uniform size k.
struct ListAssignment {
    std::vector<std::vector<int>> lists; // each sorted ascending
    int list_size = 0;
    int universe_bound = 0;

    int order() const { return static_cast<int>(lists.size()); }

    auto operator<=>(const ListAssignment&) const = default;
};

// Validates uniformity, sorts lists, fills in k and the universe bound.
ListAssignment make_assignment(std::vector<std::vector<int>> lists);

// Every list equal to {1..d}.
ListAssignment uniform_assignment(int n, int d);

// Renaming normal form: labels are renumbered in order of first appearance,
// scanning lists in vertex order with each list sorted. The result lies in the
// same renaming orbit; enumerating fixed points of this map covers every
// orbit.
ListAssignment canonical_form(const ListAssignment& a);
bool is_canonical(const ListAssignment& a);

// Number of assignments over universe {1..m} whose renaming normal form is
// exactly `a` (which must be canonical). These preimage counts partition the
// full assignment space, so weighting canonical representatives by them gives
// exact space-level counts.
Count canonical_preimage_count(const ListAssignment& a, int m);

// Some labeling selecting each vertex's label from its list and satisfying
// pred, or nullopt. Backtracking over the product of lists; proper predicates
// prune adjacent conflicts; distinguishing is verified at leaves. Unused
// labels are tried first so injective selections are found without search.
std::optional<Labeling> select_satisfying(Predicate pred, const Graph& g,
                                          const AutomorphismGroup& aut, const ListAssignment& a,
                                          std::uint64_t product_cap = 10'000'000);

// Whether the lists admit a system of distinct representatives (an injective
// selection). Such an assignment always admits a proper and distinguishing
// selection, so only deficient assignments can defeat any predicate here.
bool has_sdr(const ListAssignment& a);

enum class StreamMode {
    all,            // every canonical assignment
    deficient_only, // only assignments violating Hall's condition
};

// Enumerates canonical assignments of n sorted size-k lists over labels
// {1..max_labels}, in a fixed deterministic order. Blocks feed the parallel
// sweep kernels. In deficient_only mode, prefixes that cannot extend to a
// Hall-violating assignment are pruned: with r lists still open, a violator
// through a chosen prefix subset W needs |W| + r > |union of W's lists|, and
// a violator avoiding the prefix entirely needs r > k.
class CanonicalAssignmentStream {
public:
    CanonicalAssignmentStream(int n, int k, int max_labels,
                              StreamMode mode = StreamMode::all);

    bool next(ListAssignment& out);
    std::size_t next_block(std::vector<ListAssignment>& out, std::size_t max_items);

private:
    const std::vector<std::vector<int>>& choices_for(int used);
    bool viable(int depth) const;
    bool accept_choice(int level);

    int n_, k_, max_labels_;
    StreamMode mode_;
    std::vector<int> choice_;      // per-level index into choices_for(used_[level])
    std::vector<int> used_;        // distinct labels before each level
    std::vector<std::uint64_t> list_mask_; // label bitmask per chosen level
    std::map<int, std::vector<std::vector<int>>> cache_;
    mutable std::vector<std::uint64_t> scratch_;
    bool started_ = false;
    bool done_ = false;
};

// Total number of canonical assignments the stream will produce.
Count canonical_assignment_count(int n, int k, int max_labels);

} // namespace distinv

#endif
