#pragma once

// A small text language for naming graphs on the command line:
//
//   spec   := family | "comp(" spec ")" | "union(" spec "," spec ")"
//   family := path(n) | cycle(n) | star(n) | tad(c,p) | fruit(n)
//           | spider(l1,...,lk) | spycle(l1,...;g1,...) | grid(r,c)
//           | edges(n; u-v, ...)
//
// Whitespace may appear between tokens. Edge endpoints are 1-based.

#include <string>
#include <string_view>
#include <vector>

#include "fsg/error.hpp"
#include "fsg/graph.hpp"

namespace fsg {

struct GraphSpec {
  enum class Kind { Path, Cycle, Star, Tad, Fruit, Spider, Spycle, Grid, Comp, Union, Edges };

  Kind kind = Kind::Path;
  std::vector<int> args;    // integer arguments; legs for spycle
  std::vector<int> cycles;  // spycle only
  std::vector<Edge> edges;  // edges() only, 1-based as written
  std::vector<GraphSpec> children;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, Arity, Constraint };

  ParseError(Kind kind, std::size_t offset, std::string message,
             std::vector<std::string> expected = {});

  Kind kind() const { return kind_; }
  /// Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Parses and validates a spec. Every family constraint is checked, so the
/// result always elaborates without error.
GraphSpec parse_spec(std::string_view text);

/// Canonical text; parse_spec(to_string(s)) == s.
std::string to_string(const GraphSpec& spec);

Graph elaborate(const GraphSpec& spec);

/// parse_spec followed by elaborate.
Graph graph_from_spec(std::string_view text);

/// Spec strings of every member of a named family on exactly n vertices,
/// for sweeps. Patterns: path, cycle, star, tad, fruit, spider, spycle (at
/// least one cycle), spycle1 (exactly one cycle), grid; a "comp:" prefix
/// complements each member. The empty pattern yields nothing. Throws
/// ParameterError on an unknown pattern.
std::vector<std::string> family_specs(std::string_view pattern, int n);

}  // namespace fsg
