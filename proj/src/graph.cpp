#include "distinv/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "distinv/errors.hpp"

namespace distinv {

Graph::Graph(int order, std::vector<std::pair<int, int>> edges, std::string name)
    : order_(order), edges_(std::move(edges)), name_(std::move(name)) {
    if (order < 0) throw parse_error("graph order must be non-negative");
    if (order > kMaxOrder) {
        throw parse_error("graph order " + std::to_string(order) + " exceeds supported maximum " +
                          std::to_string(kMaxOrder));
    }
    for (auto& [u, v] : edges_) {
        if (u == v) {
            throw parse_error("self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= order_ || v >= order_) {
            throw parse_error("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw parse_error("duplicate edge");
    }
    adj_.assign(order_, {});
    adj_bits_.assign(order_, 0);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        adj_bits_[u] |= std::uint64_t{1} << v;
        adj_bits_[v] |= std::uint64_t{1} << u;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

Graph Graph::relabeled(const std::vector<int>& image) const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (const auto& [u, v] : edges_) es.emplace_back(image[u], image[v]);
    return Graph(order_, std::move(es), name_);
}

namespace {

constexpr int kG6Offset = 63;

std::string_view strip_g6_line(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    return text;
}

} // namespace

Graph parse_graph6(std::string_view raw) {
    const std::string_view text = strip_g6_line(raw);
    if (text.empty()) throw parse_error("graph6: empty input");
    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == '~') {
        throw parse_error("graph6: multi-byte order header not supported (n > 62)");
    }
    if (head < kG6Offset || head > kG6Offset + 62) {
        throw parse_error("graph6: byte 0 out of range");
    }
    const int n = head - kG6Offset;
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes) {
        if (text.size() < 1 + nbytes) {
            throw parse_error("graph6: truncated, expected " + std::to_string(1 + nbytes) +
                              " bytes for n=" + std::to_string(n));
        }
        throw parse_error("graph6: trailing garbage at byte " + std::to_string(1 + nbytes));
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte_idx = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(text[byte_idx]);
            if (c < kG6Offset || c > 126) {
                throw parse_error("graph6: byte " + std::to_string(byte_idx) + " out of range");
            }
            const int val = c - kG6Offset;
            if ((val >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw parse_error("graph6: encoding limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Offset));
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> bytes((nbits + 5) / 6, 0);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.adjacent(u, v)) bytes[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    for (int b : bytes) out.push_back(static_cast<char>(b + kG6Offset));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = -1;
    if (!(in >> n) || n < 0) throw parse_error("edge list: missing or invalid vertex count");
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    long u, v;
    while (in >> u) {
        if (!(in >> v)) throw parse_error("edge list: odd token count");
        if (u == v) throw parse_error("edge list: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw parse_error("edge list: endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        }
        auto e = std::minmax(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert({e.first, e.second}).second) {
            throw parse_error("edge list: duplicate edge " + std::to_string(e.first) + " " +
                              std::to_string(e.second));
        }
        edges.emplace_back(e.first, e.second);
    }
    if (!in.eof()) throw parse_error("edge list: invalid token");
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Family family_from_string(std::string_view name) {
    if (name == "friendship") return Family::friendship;
    if (name == "book") return Family::book;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "star") return Family::star;
    throw parse_error("unknown family: " + std::string(name));
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::friendship: return "friendship";
        case Family::book: return "book";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::star: return "star";
    }
    return "?";
}

bool family_takes_two_params(Family f) { return f == Family::complete_bipartite; }

Graph generate_family(Family f, int a, int b) {
    std::vector<std::pair<int, int>> edges;
    switch (f) {
        case Family::friendship: {
            if (a < 2) throw parse_error("friendship: n must be >= 2");
            for (int i = 1; i <= a; ++i) {
                edges.push_back({0, 2 * i - 1});
                edges.push_back({0, 2 * i});
                edges.push_back({2 * i - 1, 2 * i});
            }
            return Graph(2 * a + 1, std::move(edges), "F_" + std::to_string(a));
        }
        case Family::book: {
            if (a < 2) throw parse_error("book: n must be >= 2");
            edges.push_back({0, 1});
            for (int i = 1; i <= a; ++i) {
                edges.push_back({0, 2 * i});
                edges.push_back({1, 2 * i + 1});
                edges.push_back({2 * i, 2 * i + 1});
            }
            return Graph(2 * a + 2, std::move(edges), "B_" + std::to_string(a));
        }
        case Family::path: {
            if (a < 1) throw parse_error("path: n must be >= 1");
            for (int i = 0; i + 1 < a; ++i) edges.push_back({i, i + 1});
            return Graph(a, std::move(edges), "P_" + std::to_string(a));
        }
        case Family::cycle: {
            if (a < 3) throw parse_error("cycle: n must be >= 3");
            for (int i = 0; i < a; ++i) edges.push_back({i, (i + 1) % a});
            return Graph(a, std::move(edges), "C_" + std::to_string(a));
        }
        case Family::complete: {
            if (a < 1) throw parse_error("complete: n must be >= 1");
            for (int i = 0; i < a; ++i)
                for (int j = i + 1; j < a; ++j) edges.push_back({i, j});
            return Graph(a, std::move(edges), "K_" + std::to_string(a));
        }
        case Family::complete_bipartite: {
            if (a < 1 || b < 1) throw parse_error("complete_bipartite: both parts must be >= 1");
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
            return Graph(a + b, std::move(edges),
                         "K_" + std::to_string(a) + "," + std::to_string(b));
        }
        case Family::star: {
            if (a < 1) throw parse_error("star: n must be >= 1");
            for (int i = 1; i <= a; ++i) edges.push_back({0, i});
            return Graph(a + 1, std::move(edges), "K_1," + std::to_string(a));
        }
    }
    throw parse_error("unknown family");
}

} // namespace distinv
