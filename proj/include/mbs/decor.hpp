// Markings and biscalings on finite simplicial sets.
//
// A marked biscaled object carries a set of marked edges, a set of thin
// triangles, and a set of lean triangles with thin contained in lean.
// Degenerate edges and triangles are decorated by definition and are never
// stored; all predicates answer through the normal form.
#pragma once

#include <optional>
#include <set>
#include <string>

#include "mbs/core.hpp"

namespace mbs {

struct MBSSet {
  SSetPtr under;
  std::set<Cell> marked;  // nondegenerate 1-cells
  std::set<Cell> thin;    // nondegenerate 2-cells
  std::set<Cell> lean;    // nondegenerate 2-cells, contains thin

  bool is_marked(const SimplexRef& e) const {
    return e.degenerate() || marked.count(e.cell);
  }
  bool is_thin(const SimplexRef& t) const {
    return t.degenerate() || thin.count(t.cell);
  }
  bool is_lean(const SimplexRef& t) const {
    return t.degenerate() || lean.count(t.cell);
  }

  std::optional<std::string> validate() const;
  bool operator==(const MBSSet&) const = default;
};

using MBPtr = std::shared_ptr<const MBSSet>;

// Equality of decorated objects by value (underlying presentation and all
// three decoration sets), regardless of pointer identity.
bool same_object(const MBPtr& a, const MBPtr& b);

struct ScaledSSet {
  SSetPtr under;
  std::set<Cell> thin;
};

struct DecoratedMap {
  SSetMap map;
  MBPtr src;
  MBPtr dst;

  SimplexRef apply(const SimplexRef& r) const { return map.apply(r); }
  // Checks the underlying map plus decoration preservation on every
  // nondegenerate marked edge and thin/lean triangle.
  std::optional<std::string> validate() const;
  bool is_mono() const { return map.is_mono(); }
  // Isomorphism of marked biscaled objects (not merely of underlying sets).
  bool is_iso() const;

  static DecoratedMap identity(MBPtr x);
  DecoratedMap then(const DecoratedMap& g) const;
};

struct DecorateReport {
  MBPtr object;
  // Cells added to lean to restore thin <= lean.
  std::set<Cell> repaired;
};

// Attaches decorations to a simplicial set; lean is closed under thin.
// Unknown cell identifiers or cells of the wrong dimension are rejected.
DecorateReport decorate(SSetPtr x, std::set<Cell> marked, std::set<Cell> thin,
                        std::set<Cell> lean);

MBPtr flat(SSetPtr x);
// Everything marked, everything thin and lean.
MBPtr sharp(SSetPtr x);

struct MBProduct {
  MBPtr object;
  Product raw;
  DecoratedMap proj1;
  DecoratedMap proj2;
};

// Product with componentwise decorations: a cell is decorated exactly when
// both projections are decorated-or-degenerate.
MBProduct product_mb(MBPtr x, MBPtr y);

struct MBPushout {
  MBPtr object;
  Pushout raw;
  DecoratedMap in_b;
  DecoratedMap in_c;
};

// Pushout with colimit decorations: a cell is decorated exactly when it is
// the image of a decorated cell from either leg.
MBPushout pushout_mb(const DecoratedMap& f, const DecoratedMap& g);

// The two translations between scaled and marked biscaled objects:
// L equips a scaled object with the flat marking and equal scalings,
// U forgets the marking and the lean scaling.
MBPtr translate_L(const ScaledSSet& x);
ScaledSSet translate_U(const MBSSet& x);

// Restriction of decorations to a subcomplex inclusion (cells shared by id).
MBPtr restrict_decorations(SSetPtr sub, const MBSSet& ambient);

}  // namespace mbs
