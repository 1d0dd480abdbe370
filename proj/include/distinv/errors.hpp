#ifndef DISTINV_ERRORS_HPP
#define DISTINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace distinv {

// Malformed input (graph6, edge lists, bad family parameters).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured work or size cap was exceeded. Always an explicit error,
// never a silent truncation.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation that requires a complete automorphism group was handed a
// truncated one.
class truncated_group_error : public cap_error {
public:
    explicit truncated_group_error(const std::string& what) : cap_error(what) {}
};

} // namespace distinv

#endif
