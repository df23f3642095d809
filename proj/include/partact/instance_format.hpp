#pragma once

// Line-oriented instance files.
//
//   # comment
//   group family:cyclic:3          (or: group table <n>, then n rows)
//   points 2
//   domain g=1: 0
//   domain g=2: 1
//   map g=1: 1->0
//   map g=2: 0->1
//
// `group` and `points` come first, once each. A `domain` line may appear at
// most once per element; omitted domains are empty, except the identity
// whose domain defaults to all points and whose map defaults to the identity.
// `map` lines accumulate pairs `a->b` meaning sigma_g(a) = b.

#include "partact/group.hpp"
#include "partact/partial_action.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace partact {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInstanceError : public std::runtime_error {
public:
    explicit InvalidInstanceError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Parses a group specification: `family:<name>:<n>` or a block of
/// whitespace-separated table rows.
FiniteGroup parse_group_spec(std::string_view text);

/// Parses without validating the partial-action axioms.
PartialAction parse_instance_unchecked(std::string_view text);
/// Parses and validates; throws InvalidInstanceError on axiom violations.
PartialAction parse_instance(std::string_view text);

/// Canonical text form: family spec when the table matches a named family,
/// every non-identity element's domain and map listed in element order.
std::string serialize_instance(const PartialAction& pa);
std::string group_spec_string(const FiniteGroup& g);

std::string read_file(const std::string& path);

}  // namespace partact
