#ifndef DISTINV_AUTOMORPHISM_HPP
#define DISTINV_AUTOMORPHISM_HPP

#include <cstdint>
#include <vector>

#include "distinv/graph.hpp"

namespace distinv {

// Vertex permutation stored as an image array: image[v] is where v goes.
struct Permutation {
    std::vector<int> image;

    static Permutation identity(int n) {
        Permutation p;
        p.image.resize(n);
        for (int i = 0; i < n; ++i) p.image[i] = i;
        return p;
    }

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[v]; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (image[i] != i) return false;
        return true;
    }

    // (this ∘ other)(v) = this(other(v))
    Permutation compose(const Permutation& other) const {
        Permutation r;
        r.image.resize(size());
        for (int v = 0; v < size(); ++v) r.image[v] = image[other.image[v]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.image.resize(size());
        for (int v = 0; v < size(); ++v) r.image[image[v]] = v;
        return r;
    }

    bool is_valid() const;
    bool preserves(const Graph& g) const;

    auto operator<=>(const Permutation&) const = default;
};

// The full automorphism group, stored element by element. Identity is always
// elements[0]; `complete` is false only when the search hit order_cap, in
// which case soundness-critical callers must refuse the group.
struct AutomorphismGroup {
    std::vector<Permutation> elements;
    std::uint64_t order_cap = 0;
    bool complete = true;

    std::size_t order() const { return elements.size(); }
};

// Exhaustive backtracking over degree-compatible candidate images, pruned by
// adjacency consistency with the assigned prefix. Intended scale is n <= ~14.
AutomorphismGroup automorphisms(const Graph& g, std::uint64_t cap = 1'000'000);

} // namespace distinv

#endif
