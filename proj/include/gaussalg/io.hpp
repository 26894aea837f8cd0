#pragma once

#include "gaussalg/errors.hpp"
#include "gaussalg/graphs.hpp"
#include "gaussalg/monomial.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gaussalg {

enum class MonomialFormat { product_string, exponent_vector };

/// "x1^2*x3" style, variables ascending, exponent 1 elided; "1" for the
/// constant monomial. Or the plain exponent vector, space-separated.
inline std::string format_monomial(const Monomial& m, MonomialFormat fmt = MonomialFormat::product_string) {
  std::ostringstream os;
  if (fmt == MonomialFormat::exponent_vector) {
    for (int i = 0; i < m.ambient(); ++i) {
      if (i) os << ' ';
      os << m.exponent(i);
    }
    return os.str();
  }
  bool first = true;
  for (int i = 0; i < m.ambient(); ++i) {
    if (m.exponent(i) == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (m.exponent(i) > 1) os << '^' << m.exponent(i);
    first = false;
  }
  if (first) return "1";
  return os.str();
}

namespace detail {

inline std::string strip_comment(std::string line) {
  const auto pos = line.find('#');
  if (pos != std::string::npos) line.erase(pos);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
  std::size_t lead = 0;
  while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
  return line.substr(lead);
}

inline long parse_int(const std::string& tok, const std::string& where) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw input_error(where + ": expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw input_error(where + ": expected an integer, got '" + tok + "'");
  return v;
}

} // namespace detail

/// Parse one monomial line: either d space-separated exponents or a product
/// string of x<i> and x<i>^<e> tokens joined by '*'.
inline Monomial parse_monomial(const std::string& text, int d, const std::string& where) {
  if (text.empty()) throw input_error(where + ": empty monomial");
  if (text[0] == 'x' || text == "1") {
    std::vector<int> exps(static_cast<std::size_t>(d), 0);
    if (text == "1") return Monomial(std::move(exps));
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
      if (tok.empty() || tok[0] != 'x')
        throw input_error(where + ": bad monomial token '" + tok + "'");
      const auto caret = tok.find('^');
      const std::string var = tok.substr(1, caret == std::string::npos ? caret : caret - 1);
      const long idx = detail::parse_int(var, where);
      if (idx < 1 || idx > d)
        throw input_error(where + ": variable x" + std::to_string(idx) + " out of range 1.." + std::to_string(d));
      long e = 1;
      if (caret != std::string::npos) e = detail::parse_int(tok.substr(caret + 1), where);
      if (e < 0) throw input_error(where + ": negative exponent");
      exps[static_cast<std::size_t>(idx - 1)] += static_cast<int>(e);
    }
    return Monomial(std::move(exps));
  }
  std::stringstream ss(text);
  std::vector<int> exps;
  std::string tok;
  while (ss >> tok) exps.push_back(static_cast<int>(detail::parse_int(tok, where)));
  if (static_cast<int>(exps.size()) != d)
    throw input_error(where + ": expected " + std::to_string(d) + " exponents, got " +
                      std::to_string(exps.size()));
  for (int e : exps)
    if (e < 0) throw input_error(where + ": negative exponent");
  return Monomial(std::move(exps));
}

/// Algebra file: header "dim <d>", then one monomial per line. '#' comments
/// and blank lines are ignored. Monomial order is preserved.
struct AlgebraFile {
  int d = 0;
  MonomialSet monomials;
};

inline AlgebraFile parse_algebra_stream(std::istream& in, const std::string& name) {
  AlgebraFile out;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::strip_comment(line);
    if (t.empty()) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    if (!have_header) {
      std::stringstream ss(t);
      std::string kw, dv, extra;
      ss >> kw >> dv;
      if (kw != "dim" || dv.empty() || (ss >> extra))
        throw input_error(where + ": expected header 'dim <d>'");
      const long d = detail::parse_int(dv, where);
      if (d < 1) throw input_error(where + ": dimension must be >= 1");
      out.d = static_cast<int>(d);
      have_header = true;
      continue;
    }
    out.monomials.push_back(parse_monomial(t, out.d, where));
  }
  if (!have_header) throw input_error(name + ": missing 'dim <d>' header");
  if (out.monomials.empty()) throw input_error(name + ": no monomials");
  const int deg = out.monomials.front().degree();
  for (const Monomial& m : out.monomials)
    if (m.degree() != deg)
      throw input_error(name + ": monomials of mixed degrees " + std::to_string(deg) + " and " +
                        std::to_string(m.degree()));
  return out;
}

/// Graph file: header "vertices <d>", then "edge <i> <j>" and "loop <i>"
/// lines, 1-based.
inline LoopedGraph parse_graph_stream(std::istream& in, const std::string& name) {
  int d = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::strip_comment(line);
    if (t.empty()) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    std::stringstream ss(t);
    std::string kw;
    ss >> kw;
    if (!have_header) {
      if (kw != "vertices") throw input_error(where + ": expected header 'vertices <d>'");
      std::string dv, extra;
      ss >> dv;
      if (dv.empty() || (ss >> extra)) throw input_error(where + ": expected header 'vertices <d>'");
      const long dd = detail::parse_int(dv, where);
      if (dd < 1) throw input_error(where + ": vertex count must be >= 1");
      d = static_cast<int>(dd);
      have_header = true;
      continue;
    }
    if (kw == "edge") {
      std::string a, b, extra;
      ss >> a >> b;
      if (b.empty() || (ss >> extra)) throw input_error(where + ": expected 'edge <i> <j>'");
      const long ia = detail::parse_int(a, where), ib = detail::parse_int(b, where);
      if (ia < 1 || ia > d || ib < 1 || ib > d) throw input_error(where + ": vertex out of range");
      if (ia == ib) throw input_error(where + ": an edge needs two distinct vertices; use 'loop'");
      edges.emplace_back(static_cast<int>(ia - 1), static_cast<int>(ib - 1));
    } else if (kw == "loop") {
      std::string a, extra;
      ss >> a;
      if (a.empty() || (ss >> extra)) throw input_error(where + ": expected 'loop <i>'");
      const long ia = detail::parse_int(a, where);
      if (ia < 1 || ia > d) throw input_error(where + ": vertex out of range");
      loops.push_back(static_cast<int>(ia - 1));
    } else {
      throw input_error(where + ": unknown directive '" + kw + "'");
    }
  }
  if (!have_header) throw input_error(name + ": missing 'vertices <d>' header");
  try {
    return LoopedGraph::make(d, std::move(edges), std::move(loops));
  } catch (const input_error& e) {
    throw input_error(name + ": " + e.what());
  }
}

using ParsedInput = std::variant<AlgebraFile, LoopedGraph>;

/// Dispatch on the header keyword: "dim" = algebra file, "vertices" = graph.
inline ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open file");
  std::string line;
  std::string first;
  std::vector<std::string> all;
  while (std::getline(in, line)) {
    all.push_back(line);
    if (first.empty()) {
      const std::string t = detail::strip_comment(line);
      if (!t.empty()) first = t;
    }
  }
  std::string joined;
  for (const auto& l : all) joined += l + "\n";
  std::istringstream rewound(joined);
  if (first.rfind("vertices", 0) == 0) return parse_graph_stream(rewound, path);
  return parse_algebra_stream(rewound, path);
}

} // namespace gaussalg
