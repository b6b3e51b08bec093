#pragma once

// Plain-text network format.
//
//   # comment
//   A + B -> 3 A + C
//   0 <-> X1
//
// One reaction per line; `<->` expands to two directed reactions; `0` is the
// zero complex; a term is an optional positive coefficient and a species name.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "crn/core/network.hpp"

namespace crn {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

ReactionNetwork parse_network(std::string_view text);
ReactionNetwork read_network_file(const std::string& path);

std::string render_complex(const ReactionNetwork& net, const Complex& c);
std::string render_reaction(const ReactionNetwork& net, const Reaction& r);
/// Canonical text; a reaction immediately followed by its reverse prints as `<->`.
std::string render_network(const ReactionNetwork& net);

}  // namespace crn
