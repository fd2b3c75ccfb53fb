// Desk-scale fibration analysis over a fibrant base: coCartesian triangles,
// left-degenerations, p-Cartesian edges, and the outer-2-fibration
// classification.
//
// Every quantifier over simplex dimensions is truncated at a cap and every
// search is bounded by a budget; running out of either is reported as a
// distinct inconclusive verdict, never as yes or no.
#pragma once

#include "mbs/lifting.hpp"

namespace mbs {

struct AnalysisVerdict {
  Verdict verdict = Verdict::NoLift;
  SearchStats stats;
  // For refutations: the square that failed, plus a human-readable note.
  std::optional<LiftSquare> failing;
  std::string detail;

  bool yes() const { return verdict == Verdict::Lifts; }
};

// A witness that tau is the left-degeneration of sigma: a 3-simplex rho with
// d3 = s0(d2 sigma), d2 = tau, d1 = sigma, and d0 thin.
struct LeftDegenerationResult {
  std::optional<SimplexRef> tau;
  std::optional<SimplexRef> witness;
};

// Finds the left-degeneration by exhaustive search over the 3-simplices of
// x; absence within the cap signals that x fails the bicategory assumptions
// at this scale.  A triangle that is already left-degenerate is its own
// left-degeneration with a degeneracy of itself as witness.
LeftDegenerationResult left_degeneration(const MBSSet& x,
                                         const SimplexRef& sigma);

// Decides whether the triangle solves every initial-horn lifting problem
// that restricts to it on the outer triangle {0, 1, n}, for 2 <= n <= cap.
// A triangle that is not left-degenerate is judged through its
// left-degeneration.
AnalysisVerdict is_cocartesian_triangle(const DecoratedMap& p,
                                        const SimplexRef& sigma, int cap,
                                        long budget);

// Strong: the outer triangle {0, n-1, n} of a qualifying problem must be
// coCartesian; Plain: it must be thin.
enum class CartesianMode { Strong, Plain };

// Decides whether the edge solves every terminal-horn lifting problem whose
// last edge is e and whose outer triangle qualifies, for 2 <= n <= cap; at
// n = 2 the existence of a coCartesian (resp. thin) filler is checked
// constructively.
AnalysisVerdict is_p_cartesian_edge(const DecoratedMap& p, const SimplexRef& e,
                                    CartesianMode mode, int cap, long budget);

struct ConditionRecord {
  std::string name;
  Verdict verdict = Verdict::NoLift;
  std::string detail;
};

struct FibrationProfile {
  int cap = kDefaultCap;
  std::set<Cell> cocartesian;  // nondegenerate triangles found coCartesian
  std::set<Cell> cartesian;    // nondegenerate edges found p-Cartesian
  bool locally_fibred = false;
  bool functorial = false;
  bool o2 = false;
  bool o2c = false;
  // In order: the base's own fibrancy report, then the five classification
  // conditions (weak-S fibrancy, local coCartesian lifts, functorial family,
  // degenerate edges p-Cartesian, p-Cartesian lifts of base edges).
  std::vector<ConditionRecord> conditions;

  // Aggregate over the five classification conditions; the base's own
  // report is recorded alongside but quantified separately.
  bool pass() const;
  bool inconclusive() const;
};

// Computes the coCartesian triangles and p-Cartesian edges by sweeps, then
// evaluates the classification conditions with witnesses or counterexamples.
FibrationProfile check_family(const DecoratedMap& p, int cap, long budget);

// The characterization theorem's repackaging of p: the computed p-Cartesian
// edges become the marking, the coCartesian triangles become the lean
// scaling, and the base becomes sharp-marked and fully lean.
DecoratedMap repackage(const DecoratedMap& p, const FibrationProfile& profile);

// Curated fixture suite: identities on small fibrant objects, a projection
// with a fibrant fibre, and deliberate negative mutants.
std::vector<std::string> analysis_fixture_names();
DecoratedMap analysis_fixture(const std::string& name, int cap = kDefaultCap);

}  // namespace mbs
