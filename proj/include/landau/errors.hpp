#pragma once

#include <stdexcept>
#include <string>

namespace landau {

/// Evaluation requested outside the open unit disk, or a non-finite input.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters that violate a theorem hypothesis. The message names the
/// violated condition, e.g. "K >= 1".
class admissibility_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed mapping-file input; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline void require(bool ok, const std::string& condition, const std::string& context) {
    if (!ok) {
        throw admissibility_error(context + ": requires " + condition);
    }
}

}  // namespace detail
}  // namespace landau
