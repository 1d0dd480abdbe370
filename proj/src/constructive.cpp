#include "distinv/constructive.hpp"

#include <algorithm>
#include <set>

#include "distinv/errors.hpp"
#include "distinv/graph.hpp"

namespace distinv {

int friendship_required_labels(int n) {
    int d = 2;
    while (d * (d - 1) / 2 < n) ++d;
    return d;
}

int book_required_labels(int n) {
    int d = 2;
    while (d * d < n) ++d;
    return d;
}

namespace {

void check_lists(const ListAssignment& lists, int expected_order, int required_size,
                 const char* what) {
    if (lists.order() != expected_order) {
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(expected_order) + " lists");
    }
    if (lists.list_size < required_size) {
        throw std::invalid_argument(std::string(what) + ": lists must have size >= " +
                                    std::to_string(required_size));
    }
}

} // namespace

Labeling friendship_list_labeling(int n, const ListAssignment& lists,
                                  const AutomorphismGroup& aut) {
    if (n < 2) throw std::invalid_argument("friendship labeling: n must be >= 2");
    check_lists(lists, 2 * n + 1, friendship_required_labels(n), "friendship labeling");

    Labeling out;
    out.labels.assign(2 * n + 1, 0);
    std::set<std::pair<int, int>> used_sets;
    for (int page = 1; page <= n; ++page) {
        const auto& left = lists.lists[2 * page - 1];
        const auto& right = lists.lists[2 * page];
        // least unused {a,b} with one endpoint from each list, in either order
        std::pair<int, int> best{0, 0};
        bool have = false;
        for (int x : left) {
            for (int y : right) {
                if (x == y) continue;
                const auto cand = std::minmax(x, y);
                const std::pair<int, int> set{cand.first, cand.second};
                if (used_sets.count(set)) continue;
                if (!have || set < best) {
                    best = set;
                    have = true;
                }
            }
        }
        if (!have) {
            throw std::logic_error("friendship labeling: no unused pair set available");
        }
        used_sets.insert(best);
        const auto in = [](const std::vector<int>& list, int v) {
            return std::binary_search(list.begin(), list.end(), v);
        };
        if (in(left, best.first) && in(right, best.second)) {
            out.labels[2 * page - 1] = best.first;
            out.labels[2 * page] = best.second;
        } else {
            out.labels[2 * page - 1] = best.second;
            out.labels[2 * page] = best.first;
        }
    }
    out.labels[0] = lists.lists[0].front();

    const Graph g = generate_family(Family::friendship, n);
    if (!satisfies(Predicate::distinguishing, g, aut, out)) {
        throw std::logic_error("friendship labeling failed post-verification");
    }
    return out;
}

Labeling friendship_list_labeling(int n, const ListAssignment& lists) {
    const Graph g = generate_family(Family::friendship, n);
    return friendship_list_labeling(n, lists, automorphisms(g));
}

Labeling book_list_labeling(int n, const ListAssignment& lists, const AutomorphismGroup& aut) {
    if (n < 2) throw std::invalid_argument("book labeling: n must be >= 2");
    check_lists(lists, 2 * n + 2, book_required_labels(n), "book labeling");

    Labeling out;
    out.labels.assign(2 * n + 2, 0);
    std::set<std::pair<int, int>> used_pairs;
    for (int page = 1; page <= n; ++page) {
        const auto& vs = lists.lists[2 * page];
        const auto& ws = lists.lists[2 * page + 1];
        std::pair<int, int> best{0, 0};
        bool have = false;
        for (int a : vs) {
            for (int b : ws) {
                const std::pair<int, int> pair{a, b};
                if (used_pairs.count(pair)) continue;
                if (!have || pair < best) {
                    best = pair;
                    have = true;
                }
            }
        }
        if (!have) {
            throw std::logic_error("book labeling: no unused ordered pair available");
        }
        used_pairs.insert(best);
        out.labels[2 * page] = best.first;
        out.labels[2 * page + 1] = best.second;
    }
    out.labels[0] = lists.lists[0].front();
    for (int label : lists.lists[1]) {
        if (label != out.labels[0]) {
            out.labels[1] = label;
            break;
        }
    }
    if (out.labels[1] == 0) {
        throw std::logic_error("book labeling: spine lists admit no distinct labels");
    }

    const Graph g = generate_family(Family::book, n);
    if (!satisfies(Predicate::distinguishing, g, aut, out)) {
        throw std::logic_error("book labeling failed post-verification");
    }
    return out;
}

Labeling book_list_labeling(int n, const ListAssignment& lists) {
    const Graph g = generate_family(Family::book, n);
    return book_list_labeling(n, lists, automorphisms(g));
}

} // namespace distinv
