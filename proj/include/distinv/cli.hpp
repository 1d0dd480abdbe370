#ifndef DISTINV_CLI_HPP
#define DISTINV_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "distinv/caps.hpp"
#include "distinv/labeling.hpp"

namespace distinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

struct InvariantsOptions {
    std::string format = "auto"; // auto | graph6 | edges
    std::string list_path = "both"; // direct | char | both
    bool skip_list = false;
    bool with_timing = false;
    std::optional<int> m_max;
    std::optional<int> k_max;
    Caps caps;
};

struct ListnumOptions {
    std::string format = "auto";
    std::string path = "both";
    Predicate pred = Predicate::distinguishing;
    std::optional<int> m_max;
    std::optional<int> k_max;
    Caps caps;
};

struct FamilyOptions {
    std::string family;
    int a = 0;
    std::optional<int> b;
    std::string format = "graph6";
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 42;
    int count = 0; // 0 = suite default
    bool verbose = false;
    Caps caps;
};

struct HuntOptions {
    Predicate pred = Predicate::distinguishing;
    std::optional<int> fixed_k;
    Caps caps;
};

// Graph input: sniffs edge lists (leading digit) from graph6 when format is
// "auto".
Graph read_graph(std::istream& in, const std::string& format);

int run_invariants(std::istream& in, std::ostream& out, std::ostream& err,
                   const InvariantsOptions& options);
int run_listnum(std::istream& in, std::ostream& out, std::ostream& err,
                const ListnumOptions& options);
int run_family(std::ostream& out, std::ostream& err, const FamilyOptions& options);
int run_verify(std::ostream& out, std::ostream& err, const VerifyOptions& options);
// graph6 lines on in; JSON-lines on out (hits, then one summary line).
int run_hunt(std::istream& in, std::ostream& out, std::ostream& err, const HuntOptions& options);

} // namespace distinv::cli

#endif
