#include "distinv/automorphism.hpp"

#include <algorithm>

namespace distinv {

bool Permutation::is_valid() const {
    std::vector<bool> hit(image.size(), false);
    for (int v : image) {
        if (v < 0 || v >= size() || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool Permutation::preserves(const Graph& g) const {
    if (size() != g.order()) return false;
    for (const auto& [u, v] : g.edges()) {
        if (!g.adjacent(image[u], image[v])) return false;
    }
    // Edge count is fixed, so mapping edges onto edges injectively also
    // forces non-edges onto non-edges.
    return true;
}

namespace {

struct AutSearch {
    const Graph& g;
    std::uint64_t cap;
    std::vector<int> image;
    std::vector<bool> used;
    AutomorphismGroup out;

    explicit AutSearch(const Graph& graph, std::uint64_t c) : g(graph), cap(c) {
        image.assign(g.order(), -1);
        used.assign(g.order(), false);
    }

    bool consistent(int v, int w) const {
        if (g.degree(v) != g.degree(w)) return false;
        for (int u = 0; u < v; ++u) {
            if (g.adjacent(u, v) != g.adjacent(image[u], w)) return false;
        }
        return true;
    }

    // Returns false once the cap is hit.
    bool extend(int v) {
        if (v == g.order()) {
            if (out.elements.size() >= cap) return false;
            out.elements.push_back(Permutation{image});
            return true;
        }
        for (int w = 0; w < g.order(); ++w) {
            if (used[w] || !consistent(v, w)) continue;
            image[v] = w;
            used[w] = true;
            const bool ok = extend(v + 1);
            used[w] = false;
            image[v] = -1;
            if (!ok) return false;
        }
        return true;
    }
};

} // namespace

AutomorphismGroup automorphisms(const Graph& g, std::uint64_t cap) {
    AutSearch search(g, cap);
    search.out.order_cap = cap;
    search.out.complete = search.extend(0);
    auto& els = search.out.elements;
    // Identity first, rest in image-lex order.
    std::sort(els.begin(), els.end());
    return search.out;
}

} // namespace distinv
