#include "distinv/list_assignment.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

#include "distinv/errors.hpp"

namespace distinv {

ListAssignment make_assignment(std::vector<std::vector<int>> lists) {
    ListAssignment a;
    a.lists = std::move(lists);
    for (auto& list : a.lists) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw std::invalid_argument("list assignment: duplicate label in a list");
        }
        if (!list.empty() && list.front() < 1) {
            throw std::invalid_argument("list assignment: labels must be positive");
        }
    }
    if (!a.lists.empty()) {
        a.list_size = static_cast<int>(a.lists.front().size());
        for (const auto& list : a.lists) {
            if (static_cast<int>(list.size()) != a.list_size) {
                throw std::invalid_argument("list assignment: lists must have uniform size");
            }
            if (a.list_size == 0) throw std::invalid_argument("list assignment: empty list");
            a.universe_bound = std::max(a.universe_bound, list.back());
        }
    }
    return a;
}

ListAssignment uniform_assignment(int n, int d) {
    std::vector<int> base(d);
    for (int i = 0; i < d; ++i) base[i] = i + 1;
    return make_assignment(std::vector<std::vector<int>>(n, base));
}

ListAssignment canonical_form(const ListAssignment& a) {
    std::map<int, int> rename;
    int next = 1;
    for (const auto& list : a.lists) {
        for (int label : list) {
            if (rename.emplace(label, next).second) ++next;
        }
    }
    ListAssignment out;
    out.lists.reserve(a.lists.size());
    for (const auto& list : a.lists) {
        std::vector<int> renamed;
        renamed.reserve(list.size());
        for (int label : list) renamed.push_back(rename.at(label));
        std::sort(renamed.begin(), renamed.end());
        out.lists.push_back(std::move(renamed));
    }
    out.list_size = a.list_size;
    out.universe_bound = next - 1;
    return out;
}

bool is_canonical(const ListAssignment& a) { return canonical_form(a) == a; }

Count canonical_preimage_count(const ListAssignment& a, int m) {
    if (a.universe_bound > m) {
        throw std::invalid_argument("canonical_preimage_count: assignment exceeds universe");
    }
    // An injection phi of the u used labels into {1..m} yields an assignment
    // whose normal form is `a` exactly when phi is increasing within each
    // vertex's block of fresh labels (the scan renumbers each block in the
    // numeric order of its phi-images). So: P(m,u) / prod_v fresh_v!.
    int used = 0;
    Count numerator = 1;
    Count denominator = 1;
    for (const auto& list : a.lists) {
        int fresh = 0;
        for (int label : list) {
            if (label > used) ++fresh;
        }
        used += fresh;
        for (int i = 2; i <= fresh; ++i) denominator *= i;
    }
    for (int i = 0; i < used; ++i) numerator *= m - i;
    return numerator / denominator;
}

namespace {

struct SelectSearch {
    const Graph& g;
    const AutomorphismGroup& aut;
    Predicate pred;
    const ListAssignment& a;
    std::vector<int> labels;
    std::vector<int> used_count; // per label, among assigned vertices
    std::vector<int> order_buf;

    SelectSearch(const Graph& graph, const AutomorphismGroup& group, Predicate p,
                 const ListAssignment& assignment)
        : g(graph), aut(group), pred(p), a(assignment) {
        labels.assign(g.order(), 0);
        used_count.assign(assignment.universe_bound + 1, 0);
    }

    bool proper_ok(int v, int label) const {
        for (int u : g.neighbors(v)) {
            if (u < v && labels[u] == label) return false;
        }
        return true;
    }

    bool search(int v) {
        if (v == g.order()) {
            if (pred == Predicate::proper) return true;
            return stabilizer_is_trivial(aut, labels);
        }
        order_buf.clear();
        for (int label : a.lists[v]) {
            if (used_count[label] == 0) order_buf.push_back(label);
        }
        for (int label : a.lists[v]) {
            if (used_count[label] != 0) order_buf.push_back(label);
        }
        // order_buf mutates across recursion; iterate a copy by index depth
        const std::vector<int> candidates = order_buf;
        for (int label : candidates) {
            if (pred != Predicate::distinguishing && !proper_ok(v, label)) continue;
            labels[v] = label;
            ++used_count[label];
            if (search(v + 1)) return true;
            --used_count[label];
            labels[v] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<Labeling> select_satisfying(Predicate pred, const Graph& g,
                                          const AutomorphismGroup& aut, const ListAssignment& a,
                                          std::uint64_t product_cap) {
    if (a.order() != g.order()) {
        throw std::invalid_argument("list assignment order does not match graph");
    }
    for (const auto& list : a.lists) {
        if (list.empty()) throw std::invalid_argument("select_satisfying: empty list");
    }
    if (pred != Predicate::proper && !aut.complete) {
        throw truncated_group_error("select_satisfying requires a complete automorphism group");
    }
    std::uint64_t product = 1;
    for (const auto& list : a.lists) {
        if (product > product_cap / list.size()) {
            throw cap_error("list product space exceeds cap");
        }
        product *= list.size();
    }
    SelectSearch search(g, aut, pred, a);
    if (search.search(0)) return Labeling{search.labels};
    return std::nullopt;
}

bool has_sdr(const ListAssignment& a) {
    const int n = a.order();
    std::map<int, int> matched_label_to_vertex;
    std::vector<int> match_of(n, 0);
    // Kuhn's augmenting paths on the vertex/label incidence.
    for (int v = 0; v < n; ++v) {
        std::map<int, bool> visited;
        auto augment = [&](auto&& self, int vertex) -> bool {
            for (int label : a.lists[vertex]) {
                if (visited[label]) continue;
                visited[label] = true;
                auto it = matched_label_to_vertex.find(label);
                if (it == matched_label_to_vertex.end() || self(self, it->second)) {
                    matched_label_to_vertex[label] = vertex;
                    match_of[vertex] = label;
                    return true;
                }
            }
            return false;
        };
        if (!augment(augment, v)) return false;
    }
    return true;
}

namespace {

// max over non-empty subsets W of (|W| - |union of masks in W|); by Hall,
// >= 1 exactly when no SDR exists.
int max_deficiency(const std::vector<std::uint64_t>& masks, int count,
                   std::vector<std::uint64_t>& scratch) {
    scratch.assign(std::size_t{1} << count, 0);
    int best = std::numeric_limits<int>::min();
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << count); ++sub) {
        const int low = std::countr_zero(sub);
        scratch[sub] = scratch[sub & (sub - 1)] | masks[low];
        const int deficiency = std::popcount(sub) - std::popcount(scratch[sub]);
        best = std::max(best, deficiency);
    }
    return best;
}

} // namespace

CanonicalAssignmentStream::CanonicalAssignmentStream(int n, int k, int max_labels,
                                                     StreamMode mode)
    : n_(n), k_(k), max_labels_(max_labels), mode_(mode) {
    if (n < 1 || k < 1) throw std::invalid_argument("canonical stream: n and k must be >= 1");
    if (max_labels < k) throw std::invalid_argument("canonical stream: need at least k labels");
    if (max_labels > 62) throw cap_error("canonical stream: universe too large");
    if (mode == StreamMode::deficient_only && n > 16) {
        throw cap_error("deficient-only stream: too many vertices for subset scans");
    }
    choice_.assign(n_, 0);
    used_.assign(n_ + 1, 0);
    list_mask_.assign(n_, 0);
}

// Lists available at a level that has seen `used` distinct labels so far:
// any (k-f)-subset of the seen labels plus the next f fresh labels, fresh
// count ascending, old part in lexicographic order.
const std::vector<std::vector<int>>& CanonicalAssignmentStream::choices_for(int used) {
    auto it = cache_.find(used);
    if (it != cache_.end()) return it->second;
    std::vector<std::vector<int>> out;
    const int f_min = std::max(0, k_ - used);
    const int f_max = std::min(k_, max_labels_ - used);
    for (int f = f_min; f <= f_max; ++f) {
        const int old_count = k_ - f;
        std::vector<int> comb(old_count);
        for (int i = 0; i < old_count; ++i) comb[i] = i + 1;
        while (true) {
            std::vector<int> list = comb;
            for (int i = 0; i < f; ++i) list.push_back(used + 1 + i);
            out.push_back(std::move(list));
            if (old_count == 0) break;
            int i = old_count - 1;
            while (i >= 0 && comb[i] == used - (old_count - 1 - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < old_count; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return cache_.emplace(used, std::move(out)).first->second;
}

// With r lists still open, a Hall violator through a non-empty prefix subset
// W needs |W| + r > |union of W's lists|; one avoiding the prefix needs
// r >= k + 1 over a fresh support, and funneling r lists onto one existing
// list already works at r >= k. So the prune can only fire once r < k.
bool CanonicalAssignmentStream::viable(int depth) const {
    if (mode_ == StreamMode::all) return true;
    const int remaining = n_ - depth;
    if (remaining >= k_) return true;
    return max_deficiency(list_mask_, depth, scratch_) >= 1 - remaining;
}

bool CanonicalAssignmentStream::accept_choice(int level) {
    const auto& list = choices_for(used_[level])[choice_[level]];
    used_[level + 1] = used_[level] + std::max(0, list.back() - used_[level]);
    std::uint64_t mask = 0;
    for (int label : list) mask |= std::uint64_t{1} << label;
    list_mask_[level] = mask;
    return viable(level + 1);
}

bool CanonicalAssignmentStream::next(ListAssignment& out) {
    if (done_) return false;
    int level;
    if (!started_) {
        started_ = true;
        level = 0;
        choice_[0] = -1;
    } else {
        level = n_ - 1;
    }
    while (true) {
        if (level < 0) {
            done_ = true;
            return false;
        }
        const auto& opts = choices_for(used_[level]);
        ++choice_[level];
        if (choice_[level] >= static_cast<int>(opts.size())) {
            --level;
            continue;
        }
        if (!accept_choice(level)) continue;
        if (level == n_ - 1) break;
        ++level;
        choice_[level] = -1;
    }
    out.lists.clear();
    out.lists.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        out.lists.push_back(choices_for(used_[i])[choice_[i]]);
    }
    out.list_size = k_;
    out.universe_bound = used_[n_];
    return true;
}

std::size_t CanonicalAssignmentStream::next_block(std::vector<ListAssignment>& out,
                                                  std::size_t max_items) {
    out.clear();
    ListAssignment a;
    while (out.size() < max_items && next(a)) {
        out.push_back(a);
    }
    return out.size();
}

Count canonical_assignment_count(int n, int k, int max_labels) {
    // count(level i, used u) via the per-level choice structure
    std::map<std::pair<int, int>, Count> memo;
    auto count = [&](auto&& self, int level, int used) -> Count {
        if (level == n) return 1;
        auto key = std::make_pair(level, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Count total = 0;
        const int f_min = std::max(0, k - used);
        const int f_max = std::min(k, max_labels - used);
        for (int f = f_min; f <= f_max; ++f) {
            total += binomial(used, k - f) * self(self, level + 1, used + f);
        }
        memo.emplace(key, total);
        return total;
    };
    return count(count, 0, 0);
}

} // namespace distinv
