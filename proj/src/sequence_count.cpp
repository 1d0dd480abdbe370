#include "distinv/sequence_count.hpp"

#include <algorithm>
#include <unordered_map>

#include "distinv/errors.hpp"

namespace distinv {

void FunctionFamily::validate() const {
    if (list_size < 1) throw std::invalid_argument("list size d must be >= 1");
    if (list_size > universe) {
        throw std::invalid_argument("list size d exceeds universe size m");
    }
    for (const auto& f : functions) {
        if (f.size() != domain_size) {
            throw std::invalid_argument("function domain size mismatch");
        }
        for (int value : f.labels) {
            if (value < 1 || value > universe) {
                throw std::invalid_argument("function value outside {1..m}");
            }
        }
    }
}

Count related_sequence_count(int n, int m, int d) {
    if (d < 1 || d > m) throw std::invalid_argument("related_sequence_count requires 1 <= d <= m");
    if (n < 0) throw std::invalid_argument("domain size must be non-negative");
    return ipow(binomial(m - 1, d - 1), static_cast<unsigned long>(n));
}

Count total_sequences(int n, int m, int d) {
    if (d < 0 || d > m) throw std::invalid_argument("total_sequences requires 0 <= d <= m");
    if (n < 0) throw std::invalid_argument("domain size must be non-negative");
    return ipow(binomial(m, d), static_cast<unsigned long>(n));
}

OverlapProfile overlap_profile(const FunctionFamily& fam, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("overlap_profile: empty subset");
    for (int j : subset) {
        if (j < 0 || j >= fam.t()) throw std::invalid_argument("overlap_profile: bad index");
    }
    OverlapProfile profile;
    profile.counts.assign(subset.size(), 0);
    std::vector<int> seen;
    for (int a = 0; a < fam.domain_size; ++a) {
        seen.clear();
        for (int j : subset) {
            const int value = fam.functions[j].labels[a];
            if (std::find(seen.begin(), seen.end(), value) == seen.end()) seen.push_back(value);
        }
        ++profile.counts[seen.size() - 1];
    }
    return profile;
}

Count intersection_count(const OverlapProfile& profile, int m, int d) {
    Count result = 1;
    for (std::size_t i = 0; i < profile.counts.size(); ++i) {
        const int p = static_cast<int>(i) + 1;
        const int exponent = profile.counts[i];
        if (exponent == 0) continue;
        const Count factor = binomial(m - p, d - p); // zero once p > d
        if (factor == 0) return 0;
        result *= ipow(factor, static_cast<unsigned long>(exponent));
    }
    return result;
}

namespace {

void check_subset_cap(const FunctionFamily& fam, const Caps& caps) {
    if (fam.t() > caps.subset_terms) {
        throw cap_error("family size " + std::to_string(fam.t()) +
                        " exceeds subset expansion cap " + std::to_string(caps.subset_terms) +
                        "; use the enumeration or membership path");
    }
}

Count intersection_of_mask(const FunctionFamily& fam, unsigned mask) {
    std::vector<int> subset;
    for (int j = 0; j < fam.t(); ++j) {
        if ((mask >> j) & 1u) subset.push_back(j);
    }
    return intersection_count(overlap_profile(fam, subset), fam.universe, fam.list_size);
}

} // namespace

Count union_count_paper(const FunctionFamily& fam, const Caps& caps) {
    fam.validate();
    if (fam.t() == 0) return 0;
    check_subset_cap(fam, caps);
    Count total = 0;
    for (int i = 0; i < fam.t(); ++i) {
        // S_{i+1}: sequences of f_i not shared with any earlier function,
        // expanded over sub-families of the earlier functions.
        Count s_i = 0;
        const unsigned earlier_limit = 1u << i;
        for (unsigned sub = 0; sub < earlier_limit; ++sub) {
            const int bits = __builtin_popcount(sub);
            const Count term = intersection_of_mask(fam, sub | (1u << i));
            s_i += (bits % 2 == 0) ? term : -term;
        }
        total += s_i;
    }
    return total;
}

Count union_count_subsets(const FunctionFamily& fam, const Caps& caps) {
    fam.validate();
    if (fam.t() == 0) return 0;
    check_subset_cap(fam, caps);
    Count total = 0;
    const unsigned limit = 1u << fam.t();
    for (unsigned mask = 1; mask < limit; ++mask) {
        const int bits = __builtin_popcount(mask);
        const Count term = intersection_of_mask(fam, mask);
        total += (bits % 2 == 1) ? term : -term;
    }
    return total;
}

namespace {

// Recursion on the universe size for one conjunctive constraint: forced[a] is
// the bitmask of values that must appear in list a. Splits on the set of
// points whose lists contain the current top label m; those recurse at
// (m-1, d-1) with the forced occurrence of m absorbed by the reserved slot,
// the rest at (m-1, d).
class PartitionRecursion {
public:
    PartitionRecursion(std::vector<std::uint64_t> forced, int n)
        : forced_(std::move(forced)), n_(n) {}

    Count eval(std::uint32_t mask, int m, int d) {
        if (mask == 0) return 1;
        if (d < 0) return 0;
        if (d == 0) {
            for (int a = 0; a < n_; ++a) {
                if (((mask >> a) & 1u) && (forced_[a] & labels_up_to(m))) return 0;
            }
            return 1;
        }
        if (d > m) return 0;
        if (m == d) return 1; // single full-universe list satisfies any containment
        const std::uint64_t key = (static_cast<std::uint64_t>(mask) << 16) |
                                  (static_cast<std::uint64_t>(m) << 8) |
                                  static_cast<std::uint64_t>(d);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::uint32_t must = 0, free = 0;
        for (int a = 0; a < n_; ++a) {
            if (!((mask >> a) & 1u)) continue;
            if ((forced_[a] >> m) & 1u) {
                must |= 1u << a;
            } else {
                free |= 1u << a;
            }
        }
        Count total = 0;
        std::uint32_t extra = 0;
        while (true) {
            const std::uint32_t with_top = must | extra;
            total += eval(with_top, m - 1, d - 1) * eval(mask & ~with_top, m - 1, d);
            if (extra == free) break;
            extra = (extra - free) & free; // next submask of free
        }
        memo_.emplace(key, total);
        return total;
    }

private:
    static std::uint64_t labels_up_to(int m) {
        return (m >= 63) ? ~std::uint64_t{1} : ((std::uint64_t{1} << (m + 1)) - 2);
    }

    std::vector<std::uint64_t> forced_;
    int n_;
    std::unordered_map<std::uint64_t, Count> memo_;
};

} // namespace

Count union_count_recurrence(const FunctionFamily& fam, const Caps& caps) {
    fam.validate();
    if (fam.t() == 0) return 0;
    check_subset_cap(fam, caps);
    if (fam.domain_size > caps.recurrence_domain) {
        throw cap_error("domain size exceeds recurrence cap");
    }
    if (fam.universe >= 63) throw cap_error("universe too large for recurrence bitmasks");
    Count total = 0;
    const unsigned limit = 1u << fam.t();
    const std::uint32_t full =
        fam.domain_size == 0 ? 0 : ((std::uint32_t{1} << fam.domain_size) - 1);
    for (unsigned wmask = 1; wmask < limit; ++wmask) {
        std::vector<std::uint64_t> forced(fam.domain_size, 0);
        for (int j = 0; j < fam.t(); ++j) {
            if (!((wmask >> j) & 1u)) continue;
            for (int a = 0; a < fam.domain_size; ++a) {
                forced[a] |= std::uint64_t{1} << fam.functions[j].labels[a];
            }
        }
        PartitionRecursion rec(std::move(forced), fam.domain_size);
        const Count term = rec.eval(full, fam.universe, fam.list_size);
        total += (__builtin_popcount(wmask) % 2 == 1) ? term : -term;
    }
    return total;
}

namespace {

// All d-subsets of {1..m} in lexicographic order, as sorted vectors + bitmasks.
void all_subsets(int m, int d, std::vector<std::vector<int>>& lists,
                 std::vector<std::uint64_t>& masks) {
    std::vector<int> cur(d);
    for (int i = 0; i < d; ++i) cur[i] = i + 1;
    while (true) {
        lists.push_back(cur);
        std::uint64_t bits = 0;
        for (int x : cur) bits |= std::uint64_t{1} << x;
        masks.push_back(bits);
        int i = d - 1;
        while (i >= 0 && cur[i] == m - (d - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
}

} // namespace

std::vector<RelatedSequence> enumerate_B(const FunctionFamily& fam, std::uint64_t space_cap) {
    fam.validate();
    const int n = fam.domain_size;
    if (fam.universe >= 63) throw cap_error("universe too large for enumeration bitmasks");
    std::vector<std::vector<int>> lists;
    std::vector<std::uint64_t> masks;
    all_subsets(fam.universe, fam.list_size, lists, masks);
    const std::uint64_t base = masks.size();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (base != 0 && total > space_cap / base) {
            throw cap_error("sequence space C(m,d)^n exceeds cap");
        }
        total *= base;
    }
    std::vector<RelatedSequence> out;
    std::vector<int> choice(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int a = n - 1; a >= 0; --a) {
            choice[a] = static_cast<int>(rest % base);
            rest /= base;
        }
        bool covered = false;
        for (int j = 0; j < fam.t() && !covered; ++j) {
            bool all = true;
            for (int a = 0; a < n; ++a) {
                if (!((masks[choice[a]] >> fam.functions[j].labels[a]) & 1u)) {
                    all = false;
                    break;
                }
            }
            covered = all;
        }
        if (!covered) continue;
        RelatedSequence seq(n);
        for (int a = 0; a < n; ++a) seq[a] = lists[choice[a]];
        out.push_back(std::move(seq));
    }
    return out;
}

} // namespace distinv
