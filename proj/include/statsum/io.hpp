#pragma once

// Text formats: edge-list files (plain and signed), weight assignment files,
// core-shape files, and a parser for the polynomial rendering so structured
// output round-trips.
//
// Edge-list format: header "n <count>", then one line per edge "i j" with an
// optional +/- sign; any signed line turns the input into a root set. An
// optional section of lines "L i j <expr>" supplies an expected Laplacian
// entry to verify against.

#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "statsum/dn_roots.hpp"
#include "statsum/graph.hpp"
#include "statsum/ring.hpp"

namespace statsum {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct LoopEdgeError : ParseError {
  LoopEdgeError(int line_no) : ParseError(line_no, "loop edge") {}
};

struct DuplicateEdgeError : ParseError {
  DuplicateEdgeError(int line_no) : ParseError(line_no, "duplicate edge") {}
};

struct ParsedInput {
  std::variant<Graph, RootSet> model;
  std::vector<std::tuple<int, int, RingElem>> expected_laplacian;  // (i, j, entry)

  bool is_graph() const { return std::holds_alternative<Graph>(model); }
  const Graph& graph() const { return std::get<Graph>(model); }
  const RootSet& root_set() const { return std::get<RootSet>(model); }
};

// --- polynomial text parsing -------------------------------------------------

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline RingElem parse_factor(std::string_view s, std::size_t& pos, int line_no) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError(line_no, "expected factor");
  if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt num(std::string(s.substr(start, pos - start)), 10);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (dstart == pos) throw ParseError(line_no, "expected denominator");
      BigInt den(std::string(s.substr(dstart, pos - dstart)), 10);
      return RingElem::rational(num, den);
    }
    return RingElem(num);
  }
  if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    RingElem var = RingElem::variable(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::size_t estart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (estart == pos) throw ParseError(line_no, "expected exponent");
      return var.pow(std::stoul(std::string(s.substr(estart, pos - estart))));
    }
    return var;
  }
  throw ParseError(line_no, std::string("unexpected character '") + s[pos] + "'");
}

}  // namespace detail

// Parses the rendering produced by RingElem::to_string (and any sum of
// products of integers, fractions and variables with ^ powers).
inline RingElem parse_ring_elem(std::string_view s, int line_no = 0) {
  std::size_t pos = 0;
  RingElem acc(0);
  detail::skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError(line_no, "empty expression");
  bool negative = false;
  if (s[pos] == '-') {
    negative = true;
    ++pos;
  } else if (s[pos] == '+') {
    ++pos;
  }
  while (true) {
    RingElem term = detail::parse_factor(s, pos, line_no);
    detail::skip_ws(s, pos);
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      term *= detail::parse_factor(s, pos, line_no);
      detail::skip_ws(s, pos);
    }
    acc += negative ? -term : term;
    detail::skip_ws(s, pos);
    if (pos >= s.size()) break;
    if (s[pos] == '+') {
      negative = false;
      ++pos;
    } else if (s[pos] == '-') {
      negative = true;
      ++pos;
    } else {
      throw ParseError(line_no, std::string("unexpected character '") + s[pos] + "'");
    }
  }
  return acc;
}

// --- edge-list files ----------------------------------------------------------

enum class WeightMode { kSymbolic, kAllOnes };

inline ParsedInput parse_edge_list(std::istream& in, WeightMode mode = WeightMode::kSymbolic) {
  int n = -1;
  int line_no = 0;
  std::string line;
  bool any_sign = false;
  std::vector<std::tuple<int, int, int>> edges;  // (i, j, sign): 0 none, +1, -1
  std::vector<std::tuple<int, int, RingElem>> laplacian_entries;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;  // blank line
    if (head == "#") continue;
    if (head == "n") {
      if (n >= 0) throw ParseError(line_no, "repeated header");
      if (!(ls >> n) || n < 0) throw ParseError(line_no, "bad vertex count");
      continue;
    }
    if (head == "L") {
      int i, j;
      if (!(ls >> i >> j)) throw ParseError(line_no, "bad Laplacian entry indices");
      std::string rest;
      std::getline(ls, rest);
      laplacian_entries.emplace_back(i, j, parse_ring_elem(rest, line_no));
      continue;
    }
    if (n < 0) throw ParseError(line_no, "missing header line \"n <count>\"");
    int i, j;
    try {
      i = std::stoi(head);
    } catch (...) {
      throw ParseError(line_no, "bad edge line");
    }
    if (!(ls >> j)) throw ParseError(line_no, "bad edge line");
    std::string sign;
    int sgn = 0;
    if (ls >> sign) {
      if (sign == "+")
        sgn = 1;
      else if (sign == "-")
        sgn = -1;
      else
        throw ParseError(line_no, "bad sign '" + sign + "'");
      any_sign = true;
    }
    if (i == j) throw LoopEdgeError(line_no);
    if (i < 1 || i > n || j < 1 || j > n) throw ParseError(line_no, "vertex out of range");
    for (const auto& [a, b, s0] : edges) {
      bool same_pair = (std::min(a, b) == std::min(i, j)) && (std::max(a, b) == std::max(i, j));
      // an unsigned edge acts as "+" when the file turns out to be signed
      if (same_pair && (s0 == -1) == (sgn == -1)) throw DuplicateEdgeError(line_no);
    }
    edges.emplace_back(i, j, sgn);
  }
  if (n < 0) throw ParseError(line_no, "missing header line \"n <count>\"");

  ParsedInput out;
  if (any_sign) {
    std::vector<Root> roots;
    for (const auto& [i, j, sgn] : edges) {
      Root r{std::min(i, j), std::max(i, j), sgn < 0};
      roots.push_back(r);
    }
    try {
      out.model = RootSet(n, std::move(roots));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  } else {
    Graph g(n);
    for (const auto& [i, j, sgn] : edges) {
      (void)sgn;
      g.add_edge(i, j);
    }
    if (mode == WeightMode::kAllOnes) g.set_all_weights(RingElem(1));
    out.model = std::move(g);
  }
  out.expected_laplacian = std::move(laplacian_entries);
  return out;
}

// Weight assignment files: one line per edge "i j <integer or fraction>".
inline std::map<std::pair<int, int>, RingElem> parse_weight_file(std::istream& in) {
  std::map<std::pair<int, int>, RingElem> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    int i, j;
    std::string value;
    if (!(ls >> i)) continue;
    if (!(ls >> j >> value)) throw ParseError(line_no, "bad weight line");
    out[{std::min(i, j), std::max(i, j)}] = parse_ring_elem(value, line_no);
  }
  return out;
}

inline void apply_weights(Graph& g, const std::map<std::pair<int, int>, RingElem>& weights) {
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto it = weights.find({ed.u, ed.v});
    if (it == weights.end())
      throw std::invalid_argument("weight assignment misses edge " + std::to_string(ed.u) + " " +
                                  std::to_string(ed.v));
    g.set_weight(e, it->second);
  }
}

// Core-shape files for a host graph: one line per edge "i j [mult]".
inline MultiSubgraph parse_core_spec(std::istream& in, const Graph& g) {
  MultiSubgraph m(g);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    int i, j, mult = 1;
    if (!(ls >> i)) continue;
    if (!(ls >> j)) throw ParseError(line_no, "bad core edge line");
    ls >> mult;
    int idx = g.edge_index(i, j);
    if (idx < 0) throw ParseError(line_no, "core edge not in the host graph");
    if (mult < 1 || mult > 2) throw ParseError(line_no, "multiplicity must be 1 or 2");
    if (m.mult[idx] != 0) throw DuplicateEdgeError(line_no);
    m.mult[idx] = static_cast<std::uint8_t>(mult);
  }
  return m;
}

}  // namespace statsum
