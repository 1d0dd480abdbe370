#include "distinv/hunt.hpp"

#include "distinv/errors.hpp"
#include "distinv/labeling_search.hpp"
#include "distinv/scan.hpp"

namespace distinv {

bool confirm_no_selection(Predicate pred, const Graph& g, const AutomorphismGroup& aut,
                          const ListAssignment& a, std::uint64_t product_cap) {
    const int n = g.order();
    std::uint64_t product = 1;
    for (const auto& list : a.lists) {
        if (product > product_cap / list.size()) {
            throw cap_error("product space exceeds cap during re-verification");
        }
        product *= list.size();
    }
    Labeling c;
    c.labels.assign(n, 0);
    for (std::uint64_t idx = 0; idx < product; ++idx) {
        std::uint64_t rest = idx;
        for (int v = n - 1; v >= 0; --v) {
            const auto& list = a.lists[v];
            c.labels[v] = list[rest % list.size()];
            rest /= list.size();
        }
        if (satisfies(pred, g, aut, c)) return false;
    }
    return true;
}

HuntReport hunt(Predicate pred, std::span<const Graph> graphs, std::optional<int> fixed_k,
                const Caps& caps) {
    HuntReport report;
    constexpr std::size_t kBlock = 4096;
    for (std::size_t index = 0; index < graphs.size(); ++index) {
        const Graph& g = graphs[index];
        try {
            if (g.order() == 0) {
                ++report.scanned;
                continue;
            }
            const auto aut = automorphisms(g, caps.group_order);
            if (!aut.complete) {
                throw truncated_group_error("automorphism group truncated");
            }
            const int base = fixed_k ? *fixed_k : min_labels(pred, g, aut).count;
            const int max_labels = g.order() * base;
            // Only Hall-deficient assignments can defeat the predicate (an SDR
            // yields an injective, hence satisfying, selection).
            CanonicalAssignmentStream stream(g.order(), base, max_labels,
                                             StreamMode::deficient_only);
            std::vector<ListAssignment> block;
            std::optional<ListAssignment> failure;
            std::uint64_t tested = 0;
            while (!failure && stream.next_block(block, kBlock) > 0) {
                tested += block.size();
                if (tested > caps.sequence_space) {
                    throw cap_error("assignment sweep exceeds cap");
                }
                const auto fail_at =
                    first_failure_in_block(block, caps.jobs, [&](const ListAssignment& a) {
                        return select_satisfying(pred, g, aut, a, caps.product_space)
                            .has_value();
                    });
                if (fail_at) failure = block[*fail_at];
            }
            ++report.scanned;
            if (failure) {
                HuntHit hit;
                hit.index = index;
                hit.graph = g;
                hit.base = base;
                hit.violating = *failure;
                hit.reverified =
                    confirm_no_selection(pred, g, aut, *failure, caps.product_space);
                report.hits.push_back(std::move(hit));
            }
        } catch (const cap_error& e) {
            report.skips.push_back({index, e.what()});
        }
    }
    return report;
}

} // namespace distinv
