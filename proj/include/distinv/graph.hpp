#ifndef DISTINV_GRAPH_HPP
#define DISTINV_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distinv {

// Immutable simple undirected graph on vertices 0..n-1. Equality is literal
// (same order, same edge set), not isomorphism. Orders above 64 are rejected;
// everything here targets exhaustive work on small graphs.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    Graph(int order, std::vector<std::pair<int, int>> edges, std::string name = "");

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const { return (adj_bits_[u] >> v) & 1u; }
    std::uint64_t row_bits(int v) const { return adj_bits_[v]; }
    const std::string& name() const { return name_; }

    Graph with_name(std::string name) const;
    // Image of this graph under a vertex relabeling v -> image[v].
    Graph relabeled(const std::vector<int>& image) const;

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_; // normalized u < v, sorted
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> adj_bits_;
    std::string name_;
};

// graph6, standard printable-ASCII encoding, single-byte header (n <= 62).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// "n" followed by "u v" pairs, whitespace separated. Duplicate edges and
// self-loops are rejected.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

enum class Family {
    friendship,
    book,
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
};

Family family_from_string(std::string_view name);
std::string_view family_name(Family f);
// Whether the family takes a second size parameter (complete_bipartite only).
bool family_takes_two_params(Family f);

// Deterministic vertex numbering: friendship(n) puts the center at 0 and page
// i on {2i-1, 2i}; book(n) puts the spine on {0, 1} and page i on {2i, 2i+1}.
Graph generate_family(Family f, int a, int b = 0);

} // namespace distinv

#endif
