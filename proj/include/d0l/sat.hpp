#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "d0l/chargraph.hpp"
#include "d0l/mis.hpp"

namespace d0l::sat {

using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
  std::size_t var_count = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> comments;  ///< emitted as "c <text>" lines

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Vertex index v of the graph <-> DIMACS variable v + 1.
class VarMap {
 public:
  VarMap() = default;
  explicit VarMap(std::vector<CGVertex> vertices) : vertices_(std::move(vertices)) {}

  std::size_t size() const noexcept { return vertices_.size(); }
  int variable(VertexId v) const { return static_cast<int>(v) + 1; }
  VertexId vertex_index(int variable) const { return static_cast<VertexId>(variable) - 1; }
  const CGVertex& vertex(int variable) const { return vertices_.at(vertex_index(variable)); }

 private:
  std::vector<CGVertex> vertices_;
};

struct Encoding {
  CnfFormula formula;
  VarMap varmap;
};

/// One clause (-u | -v) per edge, lexicographic, then one clause
/// (v_1 | ... | v_t) per clique in (step, position) order. Models are
/// exactly the size-k independent sets.
Encoding encode(const CharacteristicGraph& g,
                std::size_t vertex_cap = CharacteristicGraph::kDefaultMaterializeCap);

/// Comment lines, "p cnf <vars> <clauses>", one clause per line ending in 0.
std::string write_dimacs(const CnfFormula& f);

/// Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);

enum class ModelStatus { Satisfiable, Unsatisfiable, Unknown };

/// Solver output: an "s" status line (optional) and the literals of "v"
/// lines or bare lines of signed integers terminated by 0.
struct Model {
  ModelStatus status = ModelStatus::Unknown;
  std::vector<Literal> literals;
};

/// Throws ParseError.
Model parse_model(std::string_view text);

/// Assignment indexed by variable - 1.
using Assignment = std::vector<bool>;

/// Throws IncompleteModel unless every variable 1..var_count is assigned
/// exactly once, and IncompatibleModel on out-of-range or contradictory
/// literals.
Assignment assignment_from_model(const Model& model, std::size_t var_count);

/// Vertices whose variables are true, in index order.
mis::VertexSet decode_model(const VarMap& varmap, const Assignment& assignment);

bool satisfies(const CnfFormula& f, const Assignment& assignment);

inline constexpr std::size_t kSweepCap = 16;

/// First satisfying assignment in increasing binary order (variable 1 is the
/// lowest bit), or nullopt. Throws InstanceTooLarge above `cap` variables.
std::optional<Assignment> sweep(const CnfFormula& f, std::size_t cap = kSweepCap);

}  // namespace d0l::sat
