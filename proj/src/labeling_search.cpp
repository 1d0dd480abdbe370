#include "distinv/labeling_search.hpp"

#include <algorithm>

#include "distinv/errors.hpp"
#include "distinv/scan.hpp"

namespace distinv {

namespace {

// DFS for the least satisfying label vector with labels in {1..r}.
struct MinLabelSearch {
    const Graph& g;
    const AutomorphismGroup& aut;
    Predicate pred;
    int r;
    bool needs_group;

    std::vector<int> labels;
    std::vector<std::vector<int>> inverse; // inverse images of non-identity elements
    // consistent[v]: indices (into inverse/aut order) of elements not yet ruled
    // out after assigning labels[0..v-1].
    std::vector<std::vector<int>> consistent;

    MinLabelSearch(const Graph& graph, const AutomorphismGroup& group, Predicate p, int bound)
        : g(graph), aut(group), pred(p), r(bound) {
        needs_group = pred != Predicate::proper;
        labels.assign(g.order(), 0);
        if (needs_group) {
            inverse.reserve(aut.elements.size() - 1);
            for (std::size_t i = 1; i < aut.elements.size(); ++i) {
                inverse.push_back(aut.elements[i].inverse().image);
            }
            consistent.assign(g.order() + 1, {});
            auto& root = consistent[0];
            root.resize(inverse.size());
            for (std::size_t i = 0; i < inverse.size(); ++i) root[i] = static_cast<int>(i);
        }
    }

    bool proper_ok(int v, int label) const {
        for (int u : g.neighbors(v)) {
            if (u < v && labels[u] == label) return false;
        }
        return true;
    }

    // Drop elements contradicted by labels[v]; checkable pairs are (v, sigma(v))
    // with sigma(v) <= v and (sigma^-1(v), v) with sigma^-1(v) < v.
    void filter(int v) {
        const auto& prev = consistent[v];
        auto& next = consistent[v + 1];
        next.clear();
        for (int idx : prev) {
            const int w = aut.elements[idx + 1].image[v];
            if (w <= v && labels[w] != labels[v]) continue;
            const int u = inverse[idx][v];
            if (u < v && labels[u] != labels[v]) continue;
            next.push_back(idx);
        }
    }

    bool search(int v, int max_used) {
        if (v == g.order()) {
            return !needs_group || consistent[v].empty();
        }
        const int limit = std::min(r, max_used + 1);
        for (int label = 1; label <= limit; ++label) {
            if (pred != Predicate::distinguishing && !proper_ok(v, label)) continue;
            labels[v] = label;
            if (needs_group) filter(v);
            if (search(v + 1, std::max(max_used, label))) return true;
        }
        labels[v] = 0;
        return false;
    }
};

} // namespace

MinLabelsResult min_labels(Predicate pred, const Graph& g, const AutomorphismGroup& aut) {
    if (g.order() == 0) return {0, Labeling{}};
    if (pred != Predicate::proper && !aut.complete) {
        throw truncated_group_error("min_labels requires a complete automorphism group");
    }
    for (int r = 1; r <= g.order(); ++r) {
        MinLabelSearch search(g, aut, pred, r);
        if (search.search(0, 0)) {
            return {r, Labeling{search.labels}};
        }
    }
    // Unreachable: the injective labeling satisfies every predicate.
    throw std::logic_error("min_labels found no labeling with n labels");
}

MinLabelsResult min_labels(Predicate pred, const Graph& g, const Caps& caps) {
    return min_labels(pred, g, automorphisms(g, caps.group_order));
}

namespace {

std::uint64_t checked_pow(int m, int n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / static_cast<std::uint64_t>(m) + 1) {
            throw cap_error("labeling space m^n exceeds cap");
        }
        total *= static_cast<std::uint64_t>(m);
    }
    if (total > cap) throw cap_error("labeling space m^n exceeds cap");
    return total;
}

void decode_labels(std::uint64_t idx, int m, std::vector<int>& out) {
    for (int v = static_cast<int>(out.size()) - 1; v >= 0; --v) {
        out[v] = static_cast<int>(idx % m) + 1;
        idx /= m;
    }
}

LabelingSet build_set(Predicate pred, const Graph& g, int m,
                      const std::vector<std::uint64_t>& passing) {
    LabelingSet set;
    set.graph_order = g.order();
    set.label_bound = m;
    set.predicate = pred;
    set.members.reserve(passing.size());
    for (std::uint64_t idx : passing) {
        Labeling c;
        c.labels.resize(g.order());
        decode_labels(idx, m, c.labels);
        set.members.push_back(std::move(c));
    }
    return set;
}

void check_enum_inputs(Predicate pred, const Graph& g, const AutomorphismGroup& aut, int m) {
    if (m < 1) throw std::invalid_argument("enumerate_labelings: m must be >= 1");
    if (pred != Predicate::proper && !aut.complete) {
        throw truncated_group_error("enumerate_labelings requires a complete automorphism group");
    }
    (void)g;
}

} // namespace

LabelingSet enumerate_labelings(Predicate pred, const Graph& g, const AutomorphismGroup& aut,
                                int m, std::uint64_t space_cap, int jobs) {
    check_enum_inputs(pred, g, aut, m);
    const std::uint64_t total = checked_pow(m, g.order(), space_cap);
    auto make_worker = [&] {
        Labeling scratch;
        scratch.labels.assign(g.order(), 1);
        return [&g, &aut, pred, m, c = std::move(scratch)](std::uint64_t idx) mutable {
            decode_labels(idx, m, c.labels);
            return satisfies(pred, g, aut, c);
        };
    };
    const auto passing = collect_passing(total, jobs, make_worker);
    return build_set(pred, g, m, passing);
}

namespace serial {

LabelingSet enumerate_labelings(Predicate pred, const Graph& g, const AutomorphismGroup& aut,
                                int m, std::uint64_t space_cap) {
    check_enum_inputs(pred, g, aut, m);
    const std::uint64_t total = checked_pow(m, g.order(), space_cap);
    LabelingSet set;
    set.graph_order = g.order();
    set.label_bound = m;
    set.predicate = pred;
    Labeling c;
    c.labels.assign(g.order(), 1);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode_labels(idx, m, c.labels);
        if (satisfies(pred, g, aut, c)) set.members.push_back(c);
    }
    return set;
}

} // namespace serial

} // namespace distinv
