#include "distinv/list_numbers.hpp"

#include <algorithm>

#include "distinv/errors.hpp"
#include "distinv/scan.hpp"
#include "distinv/sequence_count.hpp"

namespace distinv {

namespace {

constexpr std::size_t kSweepBlock = 4096;

struct FailingRep {
    ListAssignment rep;
    int used_labels = 0;
};

struct DeficientSweep {
    std::vector<FailingRep> failures; // in stream order
    std::uint64_t candidates = 0;     // deficient representatives tested
    bool stopped_early = false;
};

// Sweeps the Hall-deficient canonical assignments of size k over
// {1..max_labels} and records the ones with no satisfying selection. Only
// those can fail: an assignment with a system of distinct representatives
// admits an injective selection, which is proper and distinguishing.
DeficientSweep sweep_deficient(Predicate pred, const Graph& g, const AutomorphismGroup& aut,
                               int k, int max_labels, bool stop_at_failure, const Caps& caps) {
    DeficientSweep sweep;
    CanonicalAssignmentStream stream(g.order(), k, max_labels, StreamMode::deficient_only);
    std::vector<ListAssignment> block;
    while (stream.next_block(block, kSweepBlock) > 0) {
        sweep.candidates += block.size();
        if (sweep.candidates > caps.sequence_space) {
            throw cap_error("deficient assignment sweep exceeds cap");
        }
        const auto selectable = map_block(block, caps.jobs, [&](const ListAssignment& a) {
            return static_cast<char>(
                select_satisfying(pred, g, aut, a, caps.product_space).has_value());
        });
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (!selectable[i]) {
                sweep.failures.push_back({block[i], block[i].universe_bound});
            }
        }
        if (stop_at_failure && !sweep.failures.empty()) {
            sweep.stopped_early = true;
            break;
        }
    }
    return sweep;
}

// Full unpruned sweep; the definition-level oracle for list_number_direct.
struct FullSweep {
    std::optional<ListAssignment> first_failure;
    std::uint64_t representatives = 0;
};

FullSweep sweep_all(Predicate pred, const Graph& g, const AutomorphismGroup& aut, int k,
                    int max_labels, const Caps& caps) {
    const Count space = canonical_assignment_count(g.order(), k, max_labels);
    if (space > Count(caps.sequence_space)) {
        throw cap_error("canonical assignment space " + space.str() + " exceeds cap");
    }
    FullSweep sweep;
    CanonicalAssignmentStream stream(g.order(), k, max_labels);
    std::vector<ListAssignment> block;
    while (!sweep.first_failure && stream.next_block(block, kSweepBlock) > 0) {
        sweep.representatives += block.size();
        const auto fail = first_failure_in_block(block, caps.jobs, [&](const ListAssignment& a) {
            return select_satisfying(pred, g, aut, a, caps.product_space).has_value();
        });
        if (fail) sweep.first_failure = block[*fail];
    }
    return sweep;
}

Count failing_weight(const std::vector<FailingRep>& failures, int m) {
    Count weight = 0;
    for (const auto& failure : failures) {
        if (failure.used_labels <= m) {
            weight += canonical_preimage_count(failure.rep, m);
        }
    }
    return weight;
}

CharAtResult characterize_counting(Predicate pred, const Graph& g, const AutomorphismGroup& aut,
                                   int d, int m, const Caps& caps) {
    CharAtResult res;
    res.a_count = total_sequences(g.order(), m, d);
    const LabelingSet satisfying =
        enumerate_labelings(pred, g, aut, m, caps.labeling_space, caps.jobs);
    if (satisfying.members.empty()) {
        res.b_count = 0;
    } else {
        FunctionFamily fam;
        fam.functions = satisfying.members;
        fam.domain_size = g.order();
        fam.universe = m;
        fam.list_size = d;
        res.b_count = union_count_paper(fam, caps);
    }
    res.holds = res.b_count == res.a_count;
    if (!res.holds) {
        const auto sweep =
            sweep_deficient(pred, g, aut, d, m, /*stop_at_failure=*/true, caps);
        if (sweep.failures.empty()) {
            throw std::logic_error("counting strategy found a gap the sweep cannot locate");
        }
        res.witness = sweep.failures.front().rep;
    }
    return res;
}

} // namespace

CharAtResult characterization_holds_at(Predicate pred, const Graph& g,
                                       const AutomorphismGroup& aut, int d, int m,
                                       CharStrategy strategy, const Caps& caps) {
    if (d < 1 || d > m) throw std::invalid_argument("characterization requires 1 <= d <= m");
    if (g.order() == 0) throw std::invalid_argument("characterization requires a non-empty graph");
    if (strategy == CharStrategy::counting) {
        return characterize_counting(pred, g, aut, d, m, caps);
    }
    CharAtResult res;
    res.a_count = total_sequences(g.order(), m, d);
    const auto sweep = sweep_deficient(pred, g, aut, d, m, /*stop_at_failure=*/false, caps);
    res.b_count = res.a_count - failing_weight(sweep.failures, m);
    res.holds = sweep.failures.empty();
    if (!sweep.failures.empty()) res.witness = sweep.failures.front().rep;
    return res;
}

ListNumberResult list_number_characterization(Predicate pred, const Graph& g,
                                              std::optional<int> m_max_override,
                                              const Caps& caps) {
    const int n = g.order();
    if (n == 0) return {0, {}};
    const auto aut = automorphisms(g, caps.group_order);
    if (!aut.complete) {
        throw truncated_group_error("list_number_characterization needs the full group");
    }
    const int start = min_labels(pred, g, aut).count;
    ListNumberResult result;
    for (int d = std::max(1, start); d <= n; ++d) {
        CharacterizationReport report;
        report.d = d;
        report.m_max = m_max_override.value_or(n * d);
        if (report.m_max < d) {
            throw std::invalid_argument("m_max must be at least d");
        }
        // One sweep at the top of the m-range covers every m: a canonical
        // representative lies in the size-m space exactly when it uses at
        // most m labels, and its selectability does not depend on m.
        const auto sweep =
            sweep_deficient(pred, g, aut, d, report.m_max, /*stop_at_failure=*/false, caps);
        int first_failing_m = report.m_max + 1;
        for (const auto& failure : sweep.failures) {
            first_failing_m = std::min(first_failing_m, std::max(d, failure.used_labels));
        }
        for (int m = d; m <= std::min(report.m_max, first_failing_m); ++m) {
            const Count a = total_sequences(n, m, d);
            const Count b = a - failing_weight(sweep.failures, m);
            report.per_m.push_back({m, b, a, b == a});
        }
        report.verdict = sweep.failures.empty();
        if (!report.verdict) {
            for (const auto& failure : sweep.failures) {
                if (std::max(d, failure.used_labels) == first_failing_m) {
                    report.witness = failure.rep;
                    break;
                }
            }
        }
        const bool found = report.verdict;
        result.reports.push_back(std::move(report));
        if (found) {
            result.value = d;
            return result;
        }
    }
    // Unreachable: at d = n every assignment admits an injective (hence
    // proper and distinguishing) selection by Hall's theorem.
    throw std::logic_error("characterization exceeded d = n without success");
}

ListNumberDirectResult list_number_direct(Predicate pred, const Graph& g, int k_max,
                                          const Caps& caps) {
    const int n = g.order();
    if (n == 0) return {0, {}};
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    const auto aut = automorphisms(g, caps.group_order);
    if (!aut.complete) {
        throw truncated_group_error("list_number_direct needs the full group");
    }
    ListNumberDirectResult result;
    for (int k = 1; k <= k_max; ++k) {
        const auto sweep = sweep_all(pred, g, aut, k, n * k, caps);
        DirectKResult entry;
        entry.k = k;
        entry.passes = !sweep.first_failure.has_value();
        entry.witness = sweep.first_failure;
        entry.representatives = sweep.representatives;
        if (entry.passes && !result.value) result.value = k;
        result.per_k.push_back(std::move(entry));
    }
    return result;
}

} // namespace distinv
