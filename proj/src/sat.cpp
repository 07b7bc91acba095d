#include "d0l/sat.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <set>

#include <fmt/format.h>

#include "d0l/errors.hpp"

namespace d0l::sat {

Encoding encode(const CharacteristicGraph& g, std::size_t vertex_cap) {
  const Graph explicit_graph = g.materialize(vertex_cap);
  Encoding enc{{}, VarMap({g.vertices().begin(), g.vertices().end()})};
  CnfFormula& f = enc.formula;
  f.var_count = g.size();

  const auto& theta = g.theta();
  f.comments.push_back(fmt::format("D0L characteristic graph: {} words, k = {}, {} vertices, {} edges",
                                   theta.size(), g.k(), g.size(), explicit_graph.edge_count()));
  f.comments.push_back("clauses: one (-u -v) per edge, then one at-least-one clause per clique");
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto& q = g.vertex(v);
    f.comments.push_back(fmt::format("var {} = ({},{},{},{})", enc.varmap.variable(v), q.step,
                                     q.position, q.start, q.end));
  }

  for (auto [u, v] : explicit_graph.edges())
    f.clauses.push_back({-enc.varmap.variable(u), -enc.varmap.variable(v)});
  for (const auto& clique : g.cliques()) {
    Clause c;
    for (VertexId v = clique.begin; v < clique.end; ++v) c.push_back(enc.varmap.variable(v));
    f.clauses.push_back(std::move(c));
  }
  return enc;
}

std::string write_dimacs(const CnfFormula& f) {
  std::string out;
  for (const auto& c : f.comments) out += "c " + c + "\n";
  out += fmt::format("p cnf {} {}\n", f.var_count, f.clauses.size());
  for (const auto& clause : f.clauses) {
    for (Literal lit : clause) out += fmt::format("{} ", lit);
    out += "0\n";
  }
  return out;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_integer(std::string_view tok, std::size_t lineno) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, fmt::format("expected an integer, got '{}'", tok));
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t nl = text.find('\n', begin);
    if (nl == std::string_view::npos) nl = text.size();
    fn(++lineno, text.substr(begin, nl - begin));
    begin = nl + 1;
  }
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  std::size_t declared_clauses = 0;
  Clause pending;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.starts_with("c")) {
      f.comments.emplace_back(line.size() > 2 ? line.substr(2) : std::string_view{});
      return;
    }
    const auto toks = tokens(line);
    if (toks.empty()) return;
    if (toks[0] == "p") {
      if (header || toks.size() != 4 || toks[1] != "cnf")
        throw ParseError(lineno, "expected a single 'p cnf <vars> <clauses>' header");
      f.var_count = static_cast<std::size_t>(to_integer(toks[2], lineno));
      declared_clauses = static_cast<std::size_t>(to_integer(toks[3], lineno));
      header = true;
      return;
    }
    if (!header) throw ParseError(lineno, "clause before the 'p cnf' header");
    for (auto tok : toks) {
      const long long lit = to_integer(tok, lineno);
      if (lit == 0) {
        f.clauses.push_back(std::move(pending));
        pending.clear();
      } else {
        if (static_cast<std::size_t>(std::llabs(lit)) > f.var_count)
          throw ParseError(lineno, fmt::format("literal {} exceeds the declared variables", lit));
        pending.push_back(static_cast<Literal>(lit));
      }
    }
  });
  if (!header) throw ParseError(1, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(0, "last clause is not terminated by 0");
  if (f.clauses.size() != declared_clauses)
    throw ParseError(0, fmt::format("header declares {} clauses, found {}", declared_clauses,
                                    f.clauses.size()));
  return f;
}

Model parse_model(std::string_view text) {
  Model m;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c") return;
    if (toks[0] == "s") {
      const std::string status = toks.size() > 1 ? std::string(toks[1]) : std::string();
      if (status == "SATISFIABLE")
        m.status = ModelStatus::Satisfiable;
      else if (status == "UNSATISFIABLE")
        m.status = ModelStatus::Unsatisfiable;
      else if (status == "UNKNOWN")
        m.status = ModelStatus::Unknown;
      else
        throw ParseError(lineno, fmt::format("unrecognized status '{}'", status));
      return;
    }
    std::size_t first = toks[0] == "v" ? 1 : 0;
    for (std::size_t t = first; t < toks.size(); ++t) {
      const long long lit = to_integer(toks[t], lineno);
      if (lit == 0) continue;
      if (std::llabs(lit) > INT32_MAX) throw ParseError(lineno, "literal out of range");
      m.literals.push_back(static_cast<Literal>(lit));
    }
  });
  if (m.status == ModelStatus::Unknown && !m.literals.empty()) m.status = ModelStatus::Satisfiable;
  return m;
}

Assignment assignment_from_model(const Model& model, std::size_t var_count) {
  Assignment values(var_count, false);
  std::vector<bool> seen(var_count, false);
  for (Literal lit : model.literals) {
    const auto var = static_cast<std::size_t>(std::abs(lit));
    if (var == 0 || var > var_count)
      throw IncompatibleModel(
          fmt::format("literal {} outside the formula's {} variables", lit, var_count));
    if (seen[var - 1]) {
      if (values[var - 1] != (lit > 0))
        throw IncompatibleModel(fmt::format("variable {} assigned both ways", var));
      continue;
    }
    seen[var - 1] = true;
    values[var - 1] = lit > 0;
  }
  for (std::size_t v = 0; v < var_count; ++v)
    if (!seen[v]) throw IncompleteModel(fmt::format("model leaves variable {} unassigned", v + 1));
  return values;
}

mis::VertexSet decode_model(const VarMap& varmap, const Assignment& assignment) {
  if (assignment.size() != varmap.size())
    throw IncompleteModel(fmt::format("assignment covers {} of {} variables", assignment.size(),
                                      varmap.size()));
  mis::VertexSet out;
  for (std::size_t v = 0; v < assignment.size(); ++v)
    if (assignment[v]) out.push_back(v);
  return out;
}

bool satisfies(const CnfFormula& f, const Assignment& assignment) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (Literal lit : clause) {
      const bool value = assignment.at(static_cast<std::size_t>(std::abs(lit)) - 1);
      if (value == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> sweep(const CnfFormula& f, std::size_t cap) {
  const std::size_t n = f.var_count;
  if (n > cap || n > 40)
    throw InstanceTooLarge(fmt::format("assignment sweep limited to {} variables, got {}", cap, n));

  // Clauses as (positive mask, negative mask); satisfied iff they meet x.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  masks.reserve(f.clauses.size());
  for (const auto& clause : f.clauses) {
    std::uint64_t pos = 0, neg = 0;
    for (Literal lit : clause) {
      const std::uint64_t bit = std::uint64_t{1} << (std::abs(lit) - 1);
      (lit > 0 ? pos : neg) |= bit;
    }
    masks.emplace_back(pos, neg);
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (auto [pos, neg] : masks) {
      if ((pos & x) == 0 && (neg & ~x) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Assignment a(n);
    for (std::size_t v = 0; v < n; ++v) a[v] = (x >> v) & 1U;
    return a;
  }
  return std::nullopt;
}

}  // namespace d0l::sat
