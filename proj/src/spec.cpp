#include "fsg/spec.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "fsg/families.hpp"

namespace fsg {

namespace {

using Kind = GraphSpec::Kind;

const std::map<std::string, Kind, std::less<>>& keywords() {
  static const std::map<std::string, Kind, std::less<>> k{
      {"path", Kind::Path},     {"cycle", Kind::Cycle},   {"star", Kind::Star},
      {"tad", Kind::Tad},       {"fruit", Kind::Fruit},   {"spider", Kind::Spider},
      {"spycle", Kind::Spycle}, {"grid", Kind::Grid},     {"comp", Kind::Comp},
      {"union", Kind::Union},   {"edges", Kind::Edges}};
  return k;
}

std::string name_of(Kind kind) {
  for (const auto& [name, k] : keywords()) {
    if (k == kind) return name;
  }
  return "?";
}

// Fixed integer arity, or -1 for list-valued families.
int arity(Kind kind) {
  switch (kind) {
    case Kind::Path:
    case Kind::Cycle:
    case Kind::Star:
    case Kind::Fruit: return 1;
    case Kind::Tad:
    case Kind::Grid: return 2;
    default: return -1;
  }
}

constexpr int kMaxLiteral = 1000000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphSpec parse() {
    GraphSpec s = spec();
    skip_space();
    if (pos_ != text_.size()) syntax("trailing input", {"end of input"});
    return s;
  }

 private:
  [[noreturn]] void syntax(const std::string& what, std::vector<std::string> expected) {
    std::string msg = what + " at offset " + std::to_string(pos_) + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      msg += (i ? " or " : "") + expected[i];
    }
    throw ParseError(ParseError::Kind::Syntax, pos_, msg, std::move(expected));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) syntax("unexpected input", {std::string("'") + c + "'"});
    ++pos_;
  }

  int integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      syntax("unexpected input", {"integer"});
    }
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > kMaxLiteral) {
        throw ParseError(ParseError::Kind::Constraint, start,
                         "integer literal at offset " + std::to_string(start) + " is too large");
      }
    }
    return static_cast<int>(value);
  }

  // int ("," int)* , possibly empty when `allow_empty`
  std::vector<int> int_list(bool allow_empty) {
    std::vector<int> out;
    const char c = peek();
    if (allow_empty && (c == ')' || c == ';')) return out;
    out.push_back(integer());
    while (peek() == ',') {
      ++pos_;
      out.push_back(integer());
    }
    return out;
  }

  GraphSpec spec() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto word = text_.substr(start, pos_ - start);
    const auto it = keywords().find(word);
    if (it == keywords().end()) {
      pos_ = start;
      std::vector<std::string> names;
      for (const auto& [name, kind] : keywords()) names.push_back(name);
      syntax(word.empty() ? "missing graph name" : "unknown graph '" + std::string(word) + "'",
             names);
    }
    GraphSpec s;
    s.kind = it->second;
    expect('(');
    const std::size_t args_at = pos_;

    switch (s.kind) {
      case Kind::Comp:
        s.children.push_back(spec());
        break;
      case Kind::Union:
        s.children.push_back(spec());
        expect(',');
        s.children.push_back(spec());
        break;
      case Kind::Spycle:
        s.args = int_list(true);
        expect(';');
        s.cycles = int_list(true);
        break;
      case Kind::Edges:
        s.args.push_back(integer());
        expect(';');
        while (peek() != ')') {
          const int u = integer();
          expect('-');
          const int v = integer();
          s.edges.emplace_back(u, v);
          if (peek() != ',') break;
          ++pos_;
        }
        break;
      default:
        s.args = int_list(false);
        break;
    }
    if (peek() != ')') {
      if (s.kind == Kind::Comp || s.kind == Kind::Union) syntax("unexpected input", {"')'"});
      syntax("unexpected input", {"','", "')'"});
    }
    ++pos_;

    const int want = arity(s.kind);
    if (want >= 0 && static_cast<int>(s.args.size()) != want) {
      throw ParseError(ParseError::Kind::Arity, args_at,
                       name_of(s.kind) + " takes " + std::to_string(want) + " argument" +
                           (want == 1 ? "" : "s") + ", got " + std::to_string(s.args.size()));
    }
    try {
      (void)elaborate(s);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(ParseError::Kind::Constraint, start,
                       name_of(s.kind) + " at offset " + std::to_string(start) + ": " + e.what());
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t offset, std::string message,
                       std::vector<std::string> expected)
    : Error(std::move(message)), kind_(kind), offset_(offset), expected_(std::move(expected)) {}

GraphSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GraphSpec& s) {
  std::string out = name_of(s.kind) + "(";
  switch (s.kind) {
    case Kind::Comp: out += to_string(s.children[0]); break;
    case Kind::Union: out += to_string(s.children[0]) + "," + to_string(s.children[1]); break;
    case Kind::Spycle: out += join(s.args) + ";" + join(s.cycles); break;
    case Kind::Edges: {
      out += std::to_string(s.args[0]) + ";";
      for (std::size_t i = 0; i < s.edges.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s.edges[i].first) + "-" +
               std::to_string(s.edges[i].second);
      }
      break;
    }
    default: out += join(s.args); break;
  }
  return out + ")";
}

Graph elaborate(const GraphSpec& s) {
  switch (s.kind) {
    case Kind::Path: return path(s.args.at(0));
    case Kind::Cycle: return cycle(s.args.at(0));
    case Kind::Star: return star(s.args.at(0));
    case Kind::Tad: return tadpole({s.args.at(0), s.args.at(1)});
    case Kind::Fruit: return fruit(s.args.at(0));
    case Kind::Grid: return grid(s.args.at(0), s.args.at(1));
    case Kind::Spider: return spider(SpiderSignature::of(s.args));
    case Kind::Spycle: return spycle(SpycleSignature::of(s.args, s.cycles));
    case Kind::Comp: return complement(elaborate(s.children.at(0)));
    case Kind::Union: return disjoint_union(elaborate(s.children.at(0)), elaborate(s.children.at(1)));
    case Kind::Edges: {
      Graph g(s.args.at(0));
      for (auto [u, v] : s.edges) g.add_edge(u - 1, v - 1);
      return g;
    }
  }
  throw ParameterError("unknown graph kind");
}

Graph graph_from_spec(std::string_view text) { return elaborate(parse_spec(text)); }

namespace {

// Non-increasing lists of parts >= min_part summing to total.
void lists_summing(int total, int cap, int min_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(total, cap); p >= min_part; --p) {
    cur.push_back(p);
    lists_summing(total - p, p, min_part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> lists_summing(int total, int min_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  lists_summing(total, total, min_part, cur, out);
  return out;
}

}  // namespace

std::vector<std::string> family_specs(std::string_view pattern, int n) {
  std::vector<std::string> out;
  if (pattern.empty() || n < 1) return out;
  constexpr std::string_view kComp = "comp:";
  if (pattern.substr(0, kComp.size()) == kComp) {
    for (const auto& s : family_specs(pattern.substr(kComp.size()), n)) {
      out.push_back("comp(" + s + ")");
    }
    return out;
  }
  const std::string num = std::to_string(n);
  if (pattern == "path") {
    out.push_back("path(" + num + ")");
  } else if (pattern == "cycle") {
    if (n >= 3) out.push_back("cycle(" + num + ")");
  } else if (pattern == "star") {
    if (n >= 2) out.push_back("star(" + num + ")");
  } else if (pattern == "fruit") {
    if (n >= 4) out.push_back("fruit(" + num + ")");
  } else if (pattern == "tad") {
    for (int c = 3; c <= n; ++c) {
      out.push_back("tad(" + std::to_string(c) + "," + std::to_string(n - c) + ")");
    }
  } else if (pattern == "spider") {
    if (n >= 2) {
      for (const auto& legs : lists_summing(n - 1, 1)) out.push_back("spider(" + join(legs) + ")");
    }
  } else if (pattern == "spycle" || pattern == "spycle1") {
    const bool single = pattern == "spycle1";
    // Each cycle of length g uses g - 1 vertices besides the centre.
    for (int cycle_part = 2; cycle_part <= n - 1; ++cycle_part) {
      for (const auto& shifted : lists_summing(cycle_part, 2)) {
        if (single && shifted.size() != 1) continue;
        std::vector<int> cycles;
        for (int s : shifted) cycles.push_back(s + 1);
        const int leg_total = n - 1 - cycle_part;
        std::vector<std::vector<int>> leg_lists =
            leg_total == 0 ? std::vector<std::vector<int>>{{}} : lists_summing(leg_total, 1);
        for (const auto& legs : leg_lists) {
          out.push_back("spycle(" + join(legs) + ";" + join(cycles) + ")");
        }
      }
    }
  } else if (pattern == "grid") {
    for (int r = 1; r * r <= n; ++r) {
      if (n % r == 0) out.push_back("grid(" + std::to_string(r) + "," + std::to_string(n / r) + ")");
    }
  } else {
    throw ParameterError("unknown family pattern '" + std::string(pattern) + "'");
  }
  return out;
}

}  // namespace fsg
