// Finitely presented simplicial sets in Eilenberg-Zilber normal form.
//
// Every simplex is stored as a degeneracy word applied to a nondegenerate
// cell; the word is strictly decreasing, which makes the presentation unique.
// All objects are truncated at a configurable dimension cap, and every
// operation that would create cells above the cap records a truncation flag
// instead of silently dropping data.
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbs {

// Identifier of a nondegenerate simplex.  Identifiers are canonical strings
// derived from how the cell was constructed, so equality is deterministic and
// independent of evaluation order.
using Cell = std::string;

inline constexpr int kDefaultCap = 5;

// A composite of degeneracy operators s_{j1} s_{j2} ... with j1 > j2 > ...
// The empty word is the identity.
struct DegeneracyWord {
  std::vector<int> js;

  bool empty() const { return js.empty(); }
  int size() const { return static_cast<int>(js.size()); }
  bool operator==(const DegeneracyWord&) const = default;
  auto operator<=>(const DegeneracyWord&) const = default;
};

// Rewrites an arbitrary sequence of degeneracy indices (outermost first) into
// the strictly decreasing normal form, using s_i s_j = s_{j+1} s_i for i <= j.
DegeneracyWord normalize_word(std::vector<int> raw);

// Word obtained by applying s_i *after* w (i.e. the composite s_i . w).
DegeneracyWord prepend_degeneracy(int i, const DegeneracyWord& w);

// A simplex in normal form: a degeneracy word applied to a nondegenerate cell.
struct SimplexRef {
  DegeneracyWord word;
  Cell cell;
  int cell_dim = 0;

  int dim() const { return cell_dim + word.size(); }
  bool degenerate() const { return !word.empty(); }
  bool operator==(const SimplexRef&) const = default;
  auto operator<=>(const SimplexRef&) const = default;

  std::string str() const;
};

// A finite simplicial set presented by nondegenerate cells and face tables.
struct FiniteSSet {
  int cap = kDefaultCap;
  // cells[k] lists the nondegenerate k-cells in canonical order.
  std::vector<std::vector<Cell>> cells;
  // For each nondegenerate k-cell with k >= 1: its faces d_0 ... d_k.
  std::map<Cell, std::vector<SimplexRef>> faces;
  std::map<Cell, int> dim_of;
  // Set when cells above the cap were cut off by a construction.
  bool truncated = false;

  int top_dim() const { return static_cast<int>(cells.size()) - 1; }
  bool has_cell(const Cell& c) const { return dim_of.count(c) != 0; }
  int dim(const Cell& c) const { return dim_of.at(c); }

  void add_cell(int k, const Cell& c, std::vector<SimplexRef> fs = {});

  SimplexRef ref(const Cell& c) const {
    return SimplexRef{{}, c, dim_of.at(c)};
  }
  // Total degeneracy of a vertex up to dimension k.
  SimplexRef const_ref(const Cell& vertex, int k) const;

  // Face/degeneracy calculus on arbitrary simplices.
  SimplexRef face(const SimplexRef& r, int i) const;
  SimplexRef degeneracy(const SimplexRef& r, int i) const;

  // Indices i with r = s_i(face(r, i+1)).
  std::vector<int> degeneracy_support(const SimplexRef& r) const;

  // The i-th vertex of a simplex.
  Cell vertex(const SimplexRef& r, int i) const;
  std::vector<Cell> vertices(const SimplexRef& r) const;

  // All k-simplices, degenerate ones included, in canonical order.
  std::vector<SimplexRef> all_simplices(int k) const;

  // Checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every
  // cell and the resolvability of every face reference.  Returns a diagnostic
  // for the first failure, or nullopt if the presentation is valid.
  std::optional<std::string> validate() const;

  bool operator==(const FiniteSSet&) const = default;
};

using SSetPtr = std::shared_ptr<const FiniteSSet>;

// A map of simplicial sets, stored on nondegenerate cells of the source.
struct SSetMap {
  SSetPtr src;
  SSetPtr dst;
  std::map<Cell, SimplexRef> assign;

  SimplexRef apply(const SimplexRef& r) const;
  Cell apply_vertex(const Cell& v) const { return assign.at(v).cell; }

  // Face-commutation check, cell by cell after normalization.
  std::optional<std::string> validate() const;
  // True when distinct nondegenerate cells have distinct nondegenerate images.
  bool is_mono() const;
  bool is_iso() const;

  static SSetMap identity(SSetPtr x);
  SSetMap then(const SSetMap& g) const;  // this followed by g
};

// --- Constructions -------------------------------------------------------

// The standard n-simplex; k-cells are (k+1)-subsets of {0..n} written as
// sorted digit strings.
FiniteSSet standard(int n, int cap = kDefaultCap);

// Canonical id of the face of the standard simplex spanned by `verts`.
Cell simplex_cell(const std::vector<int>& verts);

enum class SubKind { Boundary, Horn, Span };

struct Subcomplex {
  SSetPtr object;
  SSetMap inclusion;
};

// Smallest subcomplex of `x` containing the given cells.
Subcomplex span_subcomplex(SSetPtr x, const std::set<Cell>& generators);
// Boundary of standard(n) inside x = standard(n).
Subcomplex boundary_subcomplex(SSetPtr x);
// Horn of standard(n): all faces except the top cell and d_i.
Subcomplex horn_subcomplex(SSetPtr x, int i);

struct Product {
  SSetPtr object;
  SSetPtr x;
  SSetPtr y;
  SSetMap proj1;
  SSetMap proj2;
  // Pairs of refs realizing each product cell, keyed by cell id.
  std::map<Cell, std::pair<SimplexRef, SimplexRef>> components;
};

Product product(SSetPtr x, SSetPtr y);

// Canonical id for a product cell given its two (jointly nondegenerate) legs.
Cell product_cell(const SimplexRef& rx, const SimplexRef& ry);

// The simplex of p.object with the given legs (legs may be degenerate).
SimplexRef product_ref(const Product& p, SimplexRef rx, SimplexRef ry);

struct Pushout {
  SSetPtr object;
  SSetMap in_b;
  SSetMap in_c;
};

// Pushout of b <-f- a -g-> c, computed dimension-wise on full simplex sets
// and then renormalized to an Eilenberg-Zilber presentation.
Pushout pushout(const SSetMap& f, const SSetMap& g);

// A map into a product is a pair of maps.
SSetMap pair_into_product(const SSetMap& f, const SSetMap& g, const Product& p);

// Map enumeration: all simplicial maps from `a` into `b` extending `partial`
// (which assigns some nondegenerate cells of `a`).  Deterministic order.
// `complete` is false when the search stopped at `limit` results.
struct MapEnumeration {
  std::vector<SSetMap> maps;
  bool complete = true;
};

MapEnumeration enumerate_maps(SSetPtr a, SSetPtr b,
                              const std::map<Cell, SimplexRef>& partial,
                              std::size_t limit);

}  // namespace mbs
