// Derivation certificates: explicit generator-attachment sequences internal
// to a fixed ambient object, witnessing membership in the weakly saturated
// closure of the generating maps.
//
// A stage is a face-closed cell set plus explicit decoration sets, all
// contained in the ambient's.  Cell-adding steps inherit the ambient's
// decorations on the newly attached cells (the filtrations in the source
// material equip every stage with the decorations restricted from the
// target); decoration-only steps add exactly what their generator grants.
#pragma once

#include "mbs/generators.hpp"

namespace mbs {

struct Stage {
  std::set<Cell> cells;
  std::set<Cell> marked;
  std::set<Cell> thin;
  std::set<Cell> lean;

  bool operator==(const Stage&) const = default;
};

// The whole ambient as a stage.
Stage full_stage(const MBSSet& ambient);
// The given cells with all ambient decorations they support.
Stage restrict_stage(const MBSSet& ambient, const std::set<Cell>& cells);

struct Step {
  GeneratorId id;
  // Map from the generator's target into the ambient; its restriction along
  // the generator is the attaching map from the source into the stage.
  SSetMap attach;
};

struct Derivation {
  MBPtr ambient;
  Stage start;
  std::vector<Step> steps;
};

// Plays one step on a stage; returns a diagnostic on violation.
std::optional<std::string> apply_step(const MBSSet& ambient, Stage& stage,
                                      const DecoratedMap& gen,
                                      const SSetMap& attach);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;
  int failing_step = -1;  // -1: start/final-stage problem
};

VerifyResult verify(const Derivation& d);

// --- Turning-point strings and staircase simplices -------------------------

// The turning points of a maximal nondegenerate simplex of the product of
// two standard simplices: a_1 < ... < a_k < n and 0 < b_1 < ... < b_k <= m.
struct ZString {
  std::vector<int> a;
  std::vector<int> b;

  bool operator==(const ZString&) const = default;
  std::string str() const;
};

// Total order used to schedule the staircase filtration; -1/0/1 comparator
// with the padding convention a_j = n, b_j = m past the end.
int z_compare(const ZString& lhs, const ZString& rhs, int n, int m);

// All valid strings for the (n, m) grid, ascending in z_compare order.
std::vector<ZString> z_strings(int n, int m);

// Vertex ell of the staircase: down to a_1, right to b_1, and so on.
std::pair<int, int> staircase_vertex(int n, int m, const ZString& z, int ell);

// The simplex of the product spanned by the given monotone vertex path.
SSetMap simplex_into_product(const Product& p,
                             const std::vector<std::pair<int, int>>& verts);

// The staircase as a map Delta^{n+m} -> Delta^n x Delta^m.
SSetMap path_simplex(const Product& p, const ZString& z);

// --- Scripted derivations --------------------------------------------------

// Generalized inner horn: ambient (Delta^m, flat, triangles at i thin+lean),
// start = simplices skipping a vertex outside the index list.
Derivation derive_indI(int m, const std::vector<int>& indices,
                       int cap = kDefaultCap);
// Generalized collapsed outer horn: same with 0 adjoined to the index list
// and the triangle {0,1,m} lean, on the quotient by the initial edge.
Derivation derive_indII(int m, const std::vector<int>& indices,
                        int cap = kDefaultCap);
// Boundary x inner-horn pushout-product, filled shuffle by shuffle in
// z-string order with generalized-horn recursion.
Derivation derive_shuffle(int n, int m, int i, int cap = kDefaultCap);
// Boundary x collapsed-outer-horn pushout-product, filled shuffle by shuffle
// in z-string order.
Derivation derive_nightmare(int n, int m, int cap = kDefaultCap);
// Mirror of the above for the terminal horn with marked last edge.
Derivation derive_dual_nightmare(int n, int m, int cap = kDefaultCap);
// Boundary x terminal-vertex: the prism, one inner horn per shuffle and a
// terminal horn for the last one.
Derivation derive_prism(int n, int cap = kDefaultCap);

// --- Named subcomplexes ----------------------------------------------------

// The auxiliary subcomplexes of a standard simplex used by the fibration
// analysis: each is cut out of a decorated ambient simplex by an explicit
// membership condition on vertex sets.
//
//   R(n, k)          simplices of Delta^{n+1} skipping vertex k+1 or vertex
//                    n+1, or contained in a triangle {k+1, k+2, j}; ambient
//                    thin on triangles inside [0, k+1] and on those triangles
//   L(n, k)          the part of R(n, k) skipping k+1 or inside those
//                    triangles, together with everything in [0, k+2]
//   P(n, k)          simplices skipping n+1, or skipping k+1 and another
//                    nonzero vertex, or inside a triangle {k+1, k+2, j}
//   M(n, k)          the part of P(n, k) skipping n+1 or inside the triangles
//   T_ext(n, k)      P(n, k) plus the faces skipping 1..k and k+2..n; the
//                    triangle {k, k+1, k+2} is additionally thin
//   S_ext(m, j)      simplices of Delta^m skipping a vertex other than j+1,
//                    j+2, or skipping both; edge {j+1, j+2} marked, triangles
//                    through it lean, {j+1, j+2, j+3} thin
//   B(m, j)          the face of Delta^{m+1} missing j+1 together with the
//                    marked edge {j+1, j+2}; decorations as for S_ext
//   dB(m, j)         the boundary variant of B(m, j)
//   Lambda_vec(m, i...)  the generalized horn spanned by the faces missing a
//                    vertex outside the index list; triangles at the listed
//                    indices thin
struct NamedSubcomplex {
  MBPtr object;            // subcomplex with restricted decorations
  DecoratedMap inclusion;  // into the decorated ambient simplex
};

NamedSubcomplex named_subcomplex(const std::string& name,
                                 const std::vector<int>& params,
                                 int cap = kDefaultCap);

// --- Automatic search ------------------------------------------------------

struct AutoResult {
  std::optional<Derivation> derivation;
  long examined = 0;  // candidate attachments inspected
};

// The image of a monomorphism as a stage of its target, decorations
// transported from the source (not restricted from the target).
Stage image_stage(const DecoratedMap& j);

// Greedy saturation: repeatedly attaches the first applicable generator
// instance (generators in printed order, attachments in canonical map
// order) until the stage equals the ambient or no step applies.
AutoResult derive_auto(const DecoratedMap& j, long budget);

}  // namespace mbs
