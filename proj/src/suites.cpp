#include "distinv/suites.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "distinv/constructive.hpp"
#include "distinv/errors.hpp"
#include "distinv/labeling_search.hpp"
#include "distinv/list_numbers.hpp"
#include "distinv/rng.hpp"
#include "distinv/scan.hpp"
#include "distinv/sequence_count.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace distinv {

namespace {

void record_failure(SuiteResult& result, const std::string& description) {
    ++result.failures;
    if (result.first_counterexample.empty()) result.first_counterexample = description;
}

std::string describe_family(const FunctionFamily& fam) {
    std::ostringstream out;
    out << "n=" << fam.domain_size << " m=" << fam.universe << " d=" << fam.list_size << " f=[";
    for (int j = 0; j < fam.t(); ++j) {
        if (j) out << ";";
        for (int a = 0; a < fam.domain_size; ++a) {
            if (a) out << ",";
            out << fam.functions[j].labels[a];
        }
    }
    out << "]";
    return out.str();
}

FunctionFamily random_family(Rng& rng, int n, int m, int d, int t) {
    FunctionFamily fam;
    fam.domain_size = n;
    fam.universe = m;
    fam.list_size = d;
    for (int j = 0; j < t; ++j) {
        Labeling f;
        for (int a = 0; a < n; ++a) f.labels.push_back(rng.int_in(1, m));
        fam.functions.push_back(std::move(f));
    }
    return fam;
}

} // namespace

SuiteResult run_counting_suite(std::uint64_t seed, int instances, const Caps& caps) {
    SuiteResult result{"counting"};
    Rng rng(derive_seed(seed, 1, 0));
    for (int trial = 0; trial < instances; ++trial) {
        const int n = rng.int_in(1, 4);
        const int d = rng.int_in(1, 3);
        const int m = rng.int_in(d, 5);
        const int t = rng.int_in(1, 4);
        FunctionFamily fam = random_family(rng, n, m, d, t);

        const Count truth = static_cast<Count>(enumerate_B(fam).size());
        const Count paper = union_count_paper(fam, caps);
        const Count subsets = union_count_subsets(fam, caps);
        const Count recurrence = union_count_recurrence(fam, caps);
        ++result.checks;
        if (paper != truth || subsets != truth || recurrence != truth) {
            std::ostringstream why;
            why << "four-way mismatch at " << describe_family(fam) << ": enum=" << truth
                << " paper=" << paper << " subsets=" << subsets << " rec=" << recurrence;
            record_failure(result, why.str());
            continue;
        }

        const Count total = total_sequences(n, m, d);
        ++result.checks;
        if (paper > total || (paper == total) != (truth == total)) {
            record_failure(result, "bound violated at " + describe_family(fam));
        }

        // order invariance of the telescoped sum
        FunctionFamily reversed = fam;
        std::reverse(reversed.functions.begin(), reversed.functions.end());
        ++result.checks;
        if (union_count_paper(reversed, caps) != paper) {
            record_failure(result, "order dependence at " + describe_family(fam));
        }

        // duplicates contribute nothing
        FunctionFamily duplicated = fam;
        duplicated.functions.push_back(fam.functions[0]);
        ++result.checks;
        if (union_count_subsets(duplicated, caps) != paper) {
            record_failure(result, "duplicate changed union at " + describe_family(fam));
        }

        // adding a function never shrinks the union
        FunctionFamily extended = fam;
        {
            Labeling f;
            for (int a = 0; a < n; ++a) f.labels.push_back(rng.int_in(1, m));
            extended.functions.push_back(std::move(f));
        }
        ++result.checks;
        if (union_count_paper(extended, caps) < paper) {
            record_failure(result, "monotonicity violated at " + describe_family(fam));
        }

        // m = d collapses to the single full-universe sequence
        FunctionFamily tight = random_family(rng, n, d, d, t);
        ++result.checks;
        if (union_count_paper(tight, caps) != 1 || union_count_recurrence(tight, caps) != 1 ||
            static_cast<Count>(enumerate_B(tight).size()) != 1) {
            record_failure(result, "B_(d,d) != 1 at " + describe_family(tight));
        }
    }

    // single-function closed form, exhaustively small
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 5; ++m) {
            for (int d = 1; d <= m; ++d) {
                for (int rep = 0; rep < 3; ++rep) {
                    FunctionFamily fam = random_family(rng, n, m, d, 1);
                    ++result.checks;
                    if (static_cast<Count>(enumerate_B(fam).size()) !=
                        related_sequence_count(n, m, d)) {
                        record_failure(result,
                                       "closed form mismatch at " + describe_family(fam));
                    }
                }
            }
        }
    }
    return result;
}

Graph graph_from_edge_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1u) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == n;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto pair_index = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        // index of (u,v), u<v, in row-major upper triangle order
        return u * n - u * (u + 1) / 2 + (v - u - 1);
    };

    std::vector<Graph> out;
    std::vector<char> seen(std::size_t{1} << pairs, 0);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        if (seen[mask]) continue;
        std::uint32_t canon = mask;
        for (const auto& p : perms) {
            std::uint32_t relabeled = 0;
            int bit = 0;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v, ++bit) {
                    if ((mask >> bit) & 1u) relabeled |= std::uint32_t{1} << pair_index(p[u], p[v]);
                }
            }
            seen[relabeled] = 1;
            canon = std::min(canon, relabeled);
        }
        const Graph g = graph_from_edge_mask(n, canon);
        if (is_connected(g)) out.push_back(g);
    }
    return out;
}

std::vector<Graph> desk_suite(bool include_larger) {
    std::vector<Graph> graphs{
        generate_family(Family::complete, 2),
        generate_family(Family::path, 3),
        generate_family(Family::path, 4),
        generate_family(Family::complete, 3),
        generate_family(Family::star, 3),
        generate_family(Family::cycle, 4),
        Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, "paw"),
    };
    if (include_larger) {
        graphs.push_back(generate_family(Family::cycle, 5));
        graphs.push_back(generate_family(Family::complete, 4));
    }
    return graphs;
}

SuiteResult run_labeling_suite(const Caps& caps) {
    SuiteResult result{"labeling"};
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            const auto aut = automorphisms(g, caps.group_order);
            const std::string tag = "graph n=" + std::to_string(n) + " mask=" +
                                    std::to_string(mask);

            // injective labelings are always distinguishing
            Labeling injective;
            for (int v = 0; v < n; ++v) injective.labels.push_back(v + 1);
            ++result.checks;
            if (!satisfies(Predicate::distinguishing, g, aut, injective)) {
                record_failure(result, "injective labeling not distinguishing on " + tag);
            }

            const auto dist = min_labels(Predicate::distinguishing, g, aut);
            const auto proper = min_labels(Predicate::proper, g, aut);
            const auto both = min_labels(Predicate::proper_distinguishing, g, aut);
            ++result.checks;
            if (dist.count > both.count || proper.count > both.count) {
                record_failure(result, "min label chain violated on " + tag);
            }
            ++result.checks;
            if (!satisfies(Predicate::distinguishing, g, aut, dist.witness) ||
                !satisfies(Predicate::proper, g, aut, proper.witness) ||
                !satisfies(Predicate::proper_distinguishing, g, aut, both.witness)) {
                record_failure(result, "witness does not re-verify on " + tag);
            }

            // cross-oracle: min_labels = least m with a non-empty literal set,
            // and the sets nest as the label bound grows
            for (Predicate pred :
                 {Predicate::distinguishing, Predicate::proper,
                  Predicate::proper_distinguishing}) {
                const int expected = min_labels(pred, g, aut).count;
                int least_nonempty = -1;
                LabelingSet prev;
                for (int m = 1; m <= expected; ++m) {
                    LabelingSet cur =
                        enumerate_labelings(pred, g, aut, m, caps.labeling_space, caps.jobs);
                    if (least_nonempty < 0 && cur.count() > 0) least_nonempty = m;
                    if (m > 1) {
                        std::vector<Labeling> filtered;
                        for (const auto& c : cur.members) {
                            if (*std::max_element(c.labels.begin(), c.labels.end()) < m) {
                                filtered.push_back(c);
                            }
                        }
                        ++result.checks;
                        if (filtered != prev.members) {
                            record_failure(result, "nesting violated on " + tag);
                        }
                    }
                    prev = std::move(cur);
                }
                ++result.checks;
                if (least_nonempty != expected) {
                    record_failure(result, "cross-oracle mismatch on " + tag);
                }
            }
        }
    }

    // t_m is isomorphism-invariant: relabel and compare counts
    Rng rng(20240);
    for (int n = 2; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (int rep = 0; rep < 12; ++rep) {
            const auto mask = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << pairs));
            const Graph g = graph_from_edge_mask(n, mask);
            std::vector<int> image(n);
            std::iota(image.begin(), image.end(), 0);
            for (int i = n - 1; i > 0; --i) {
                std::swap(image[i], image[rng.below(static_cast<std::uint64_t>(i + 1))]);
            }
            const Graph h = g.relabeled(image);
            const auto aut_g = automorphisms(g, caps.group_order);
            const auto aut_h = automorphisms(h, caps.group_order);
            for (int m = 1; m <= 4; ++m) {
                ++result.checks;
                const auto tg = enumerate_labelings(Predicate::distinguishing, g, aut_g, m,
                                                    caps.labeling_space, caps.jobs);
                const auto th = enumerate_labelings(Predicate::distinguishing, h, aut_h, m,
                                                    caps.labeling_space, caps.jobs);
                if (tg.count() != th.count()) {
                    record_failure(result, "t_m not isomorphism-invariant, n=" +
                                               std::to_string(n) + " mask=" +
                                               std::to_string(mask) + " m=" + std::to_string(m));
                }
            }
        }
    }
    return result;
}

namespace {

ListAssignment random_assignment(Rng& rng, int order, int k, int universe) {
    std::vector<std::vector<int>> lists;
    lists.reserve(order);
    for (int v = 0; v < order; ++v) lists.push_back(rng.subset(k, universe));
    return make_assignment(std::move(lists));
}

SuiteResult run_constructive_suite(bool book_family, std::uint64_t seed, int trials_per_n,
                                   const Caps& caps) {
    SuiteResult result{book_family ? "book" : "friendship"};
    for (int n = 2; n <= 6; ++n) {
        const Graph g = generate_family(book_family ? Family::book : Family::friendship, n);
        const auto aut = automorphisms(g, caps.group_order);
        const int d = book_family ? book_required_labels(n) : friendship_required_labels(n);
        const int universe = 3 * d;
        std::vector<std::string> trial_failure(trials_per_n);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_jobs(caps.jobs))
#endif
        for (int trial = 0; trial < trials_per_n; ++trial) {
            Rng rng(derive_seed(seed, book_family ? 3 : 2, static_cast<std::uint64_t>(n) * 100000 +
                                                               static_cast<std::uint64_t>(trial)));
            try {
                const ListAssignment lists = random_assignment(rng, g.order(), d, universe);
                const Labeling out = book_family ? book_list_labeling(n, lists, aut)
                                                 : friendship_list_labeling(n, lists, aut);
                std::string why;
                for (int v = 0; v < g.order(); ++v) {
                    if (!std::binary_search(lists.lists[v].begin(), lists.lists[v].end(),
                                            out.labels[v])) {
                        why = "label outside list at vertex " + std::to_string(v);
                    }
                }
                if (why.empty() && !satisfies(Predicate::distinguishing, g, aut, out)) {
                    why = "output not distinguishing";
                }
                if (why.empty()) {
                    std::vector<std::pair<int, int>> pages;
                    if (book_family) {
                        for (int i = 1; i <= n; ++i)
                            pages.push_back({out.labels[2 * i], out.labels[2 * i + 1]});
                        if (out.labels[0] == out.labels[1]) why = "spine labels equal";
                    } else {
                        for (int i = 1; i <= n; ++i) {
                            auto p = std::minmax(out.labels[2 * i - 1], out.labels[2 * i]);
                            pages.push_back({p.first, p.second});
                        }
                    }
                    std::sort(pages.begin(), pages.end());
                    if (std::adjacent_find(pages.begin(), pages.end()) != pages.end()) {
                        why = "page labels collide";
                    }
                }
                trial_failure[trial] = why;
            } catch (const std::exception& e) {
                trial_failure[trial] = e.what();
            }
        }
        for (int trial = 0; trial < trials_per_n; ++trial) {
            ++result.checks;
            if (!trial_failure[trial].empty()) {
                record_failure(result, "n=" + std::to_string(n) + " trial=" +
                                           std::to_string(trial) + ": " + trial_failure[trial]);
            }
        }
    }
    return result;
}

} // namespace

SuiteResult run_friendship_suite(std::uint64_t seed, int trials_per_n, const Caps& caps) {
    return run_constructive_suite(false, seed, trials_per_n, caps);
}

SuiteResult run_book_suite(std::uint64_t seed, int trials_per_n, const Caps& caps) {
    return run_constructive_suite(true, seed, trials_per_n, caps);
}

SuiteResult run_listnum_suite(std::uint64_t seed, const Caps& caps) {
    SuiteResult result{"listnum"};
    for (const Graph& g : desk_suite(/*include_larger=*/true)) {
        const auto aut = automorphisms(g, caps.group_order);
        for (Predicate pred : {Predicate::distinguishing, Predicate::proper}) {
            const std::string tag =
                g.name() + "/" + std::string(predicate_name(pred));
            const auto characterization = list_number_characterization(pred, g, std::nullopt,
                                                                       caps);
            const auto direct = list_number_direct(pred, g, characterization.value, caps);
            ++result.checks;
            if (!direct.value || *direct.value != characterization.value) {
                record_failure(result, "characterization/direct mismatch on " + tag);
                continue;
            }
            const int base = min_labels(pred, g, aut).count;
            ++result.checks;
            if (base > characterization.value) {
                record_failure(result, "base exceeds list number on " + tag);
            }
            ++result.checks;
            if (!select_satisfying(pred, g, aut, uniform_assignment(g.order(), base),
                                   caps.product_space)) {
                record_failure(result, "identical lists defeat base labels on " + tag);
            }

            // strategy agreement where the counting path is feasible
            for (int m = characterization.value;
                 m <= std::min(characterization.value + 1, g.order() * characterization.value);
                 ++m) {
                const auto t_m = enumerate_labelings(pred, g, aut, m, caps.labeling_space,
                                                     caps.jobs);
                if (static_cast<int>(t_m.count()) > caps.subset_terms) continue;
                const auto via_membership = characterization_holds_at(
                    pred, g, aut, characterization.value, m, CharStrategy::membership, caps);
                const auto via_counting = characterization_holds_at(
                    pred, g, aut, characterization.value, m, CharStrategy::counting, caps);
                ++result.checks;
                if (via_membership.holds != via_counting.holds ||
                    via_membership.b_count != via_counting.b_count) {
                    record_failure(result, "strategy disagreement on " + tag + " at m=" +
                                               std::to_string(m));
                }
            }
        }
    }

    // canonicalization soundness: a canonical assignment fails exactly when
    // its whole renaming orbit fails
    {
        const Graph g = generate_family(Family::path, 3);
        const auto aut = automorphisms(g, caps.group_order);
        Rng rng(derive_seed(seed, 4, 0));
        const int universe = 4;
        std::vector<int> perm(universe);
        for (int rep = 0; rep < 40; ++rep) {
            const ListAssignment a = random_assignment(rng, g.order(), 2, universe);
            const bool canonical_fails =
                !select_satisfying(Predicate::distinguishing, g, aut, canonical_form(a),
                                   caps.product_space)
                     .has_value();
            bool any_orbit_passes = false;
            std::iota(perm.begin(), perm.end(), 1);
            do {
                std::vector<std::vector<int>> lists = a.lists;
                for (auto& list : lists)
                    for (auto& label : list) label = perm[label - 1];
                if (select_satisfying(Predicate::distinguishing, g, aut,
                                      make_assignment(lists), caps.product_space)) {
                    any_orbit_passes = true;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            ++result.checks;
            if (canonical_fails != !any_orbit_passes) {
                record_failure(result, "canonical form not orbit-sound, rep " +
                                           std::to_string(rep));
            }
        }
    }
    return result;
}

std::vector<SuiteResult> run_suites(const std::string& selector, std::uint64_t seed, int count,
                                    const Caps& caps) {
    std::vector<SuiteResult> results;
    const bool all = selector == "all";
    bool matched = false;
    if (all || selector == "counting") {
        results.push_back(run_counting_suite(seed, count > 0 ? count : 120, caps));
        matched = true;
    }
    if (all || selector == "labeling") {
        results.push_back(run_labeling_suite(caps));
        matched = true;
    }
    if (all || selector == "friendship") {
        results.push_back(run_friendship_suite(seed, count > 0 ? count : 1000, caps));
        matched = true;
    }
    if (all || selector == "book") {
        results.push_back(run_book_suite(seed, count > 0 ? count : 1000, caps));
        matched = true;
    }
    if (all || selector == "listnum") {
        results.push_back(run_listnum_suite(seed, caps));
        matched = true;
    }
    if (!matched) throw parse_error("unknown suite: " + selector);
    return results;
}

} // namespace distinv
