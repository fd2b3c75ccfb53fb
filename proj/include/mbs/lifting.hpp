// Lifting problems against generating maps, decided by exhaustive
// backtracking search with explicit budgets.
//
// Every positive verdict carries a witness that is re-verified by
// composition; negative verdicts are exhaustive within the budget, and
// running out of budget is a distinct third verdict, never conflated with
// refutation.
#pragma once

#include <optional>

#include "mbs/generators.hpp"

namespace mbs {

struct LiftSquare {
  DecoratedMap j;       // A -> B, monomorphism
  DecoratedMap p;       // X -> S
  DecoratedMap top;     // A -> X
  DecoratedMap bottom;  // B -> S

  // Checks the four sides and the commutation p . top = bottom . j.
  std::optional<std::string> validate() const;
};

enum class Verdict { Lifts, NoLift, BudgetExhausted };

const char* verdict_name(Verdict v);

struct SearchStats {
  long nodes = 0;
  int max_depth = 0;

  void merge(const SearchStats& other) {
    nodes += other.nodes;
    max_depth = std::max(max_depth, other.max_depth);
  }
};

struct LiftReport {
  Verdict verdict = Verdict::NoLift;
  std::optional<DecoratedMap> witness;
  SearchStats stats;
  // For aggregated reports: the square that refuted or exhausted the budget.
  std::optional<LiftSquare> failing_square;
};

// True when h solves the square: h . j = top and p . h = bottom, and h
// preserves decorations.  Used to re-verify every witness.
bool verify_witness(const LiftSquare& sq, const DecoratedMap& h);

// Finds a diagonal B -> X by dimension-ascending backtracking over the
// nondegenerate cells of B.  Deterministic: cells and candidate images are
// tried in canonical order.  `budget` bounds search nodes.
LiftReport solve_lift(const LiftSquare& sq, long budget);

// Enumerates every commuting square of p against the generator and solves
// each; Lifts only when all squares lift.
LiftReport has_rlp(const DecoratedMap& p, const GeneratorId& id, long budget,
                   int cap = kDefaultCap);

enum class FibClass { MB, WeakS, Trivial };

struct RlpFailure {
  GeneratorId id;
  Verdict verdict = Verdict::NoLift;
};

struct ClassifyReport {
  bool pass = false;
  bool inconclusive = false;  // some generator exhausted the budget
  std::vector<RlpFailure> failures;
  SearchStats stats;
};

// Sweeps has_rlp over all generators of the class with parameters <= cap.
ClassifyReport classify_fibration(const DecoratedMap& p, FibClass cls, int cap,
                                  long budget);

// Pullback of p over a vertex of the base, with restricted decorations.
MBPtr fibre(const DecoratedMap& p, const Cell& base_vertex);

// One-level invertibility: some g admits thin triangles witnessing both
// composites as identities.  Higher coherences are not required.
bool is_equivalence(const MBSSet& x, const SimplexRef& e);

// The mapping space X(a,b): its n-cells are the (n+1)-simplices of X whose
// initial n-face is totally degenerate at a and whose last vertex is b.
struct MappingSpace {
  SSetPtr space;
  // Edges with a thin (resp. lean) witness triangle in X.
  std::set<Cell> equivalence_edges;
  std::set<Cell> cocartesian_edges;
  // Underlying X-simplex of each nondegenerate cell.
  std::map<Cell, SimplexRef> carrier;
  bool truncated = false;
};

MappingSpace mapping_space(const MBSSet& x, const Cell& a, const Cell& b);

}  // namespace mbs
