#include "distinv/labeling.hpp"

#include "distinv/errors.hpp"

namespace distinv {

Predicate predicate_from_string(std::string_view name) {
    if (name == "dist" || name == "distinguishing") return Predicate::distinguishing;
    if (name == "proper") return Predicate::proper;
    if (name == "propdist" || name == "proper_distinguishing")
        return Predicate::proper_distinguishing;
    throw parse_error("unknown predicate: " + std::string(name));
}

std::string_view predicate_name(Predicate p) {
    switch (p) {
        case Predicate::distinguishing: return "distinguishing";
        case Predicate::proper: return "proper";
        case Predicate::proper_distinguishing: return "proper_distinguishing";
    }
    return "?";
}

bool is_proper(const Graph& g, const std::vector<int>& labels) {
    for (const auto& [u, v] : g.edges()) {
        if (labels[u] == labels[v]) return false;
    }
    return true;
}

bool stabilizer_is_trivial(const AutomorphismGroup& aut, const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    for (std::size_t i = 1; i < aut.elements.size(); ++i) {
        const auto& image = aut.elements[i].image;
        bool preserved = true;
        for (int v = 0; v < n; ++v) {
            if (labels[image[v]] != labels[v]) {
                preserved = false;
                break;
            }
        }
        if (preserved) return false;
    }
    return true;
}

bool satisfies(Predicate pred, const Graph& g, const AutomorphismGroup& aut, const Labeling& c) {
    if (c.size() != g.order()) {
        throw std::invalid_argument("labeling length does not match graph order");
    }
    const bool needs_group = pred != Predicate::proper;
    if (needs_group && !aut.complete) {
        throw truncated_group_error(
            "automorphism group was truncated; distinguishing check would be unsound");
    }
    switch (pred) {
        case Predicate::distinguishing: return stabilizer_is_trivial(aut, c.labels);
        case Predicate::proper: return is_proper(g, c.labels);
        case Predicate::proper_distinguishing:
            return is_proper(g, c.labels) && stabilizer_is_trivial(aut, c.labels);
    }
    return false;
}

} // namespace distinv
