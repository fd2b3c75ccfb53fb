// Pushout-products of decorated maps and the case-by-case verification that
// cofibration x anodyne pushout-products are anodyne.
//
// The case table pairs each of the four cofibration families with each of
// the eleven anodyne families.  Every case is resolved by one of a small set
// of strategies: an isomorphism check, a scripted staircase filtration, or
// the greedy automatic search.  Reports always say which strategy ran and
// never turn an unresolved case into a silent pass.
#pragma once

#include <iosfwd>

#include "mbs/derivation.hpp"

namespace mbs {

struct PPInstance {
  DecoratedMap f;       // cofibration-side map
  DecoratedMap g;       // anodyne-side map
  DecoratedMap result;  // induced map into the full product
};

// The induced map (src(f) x dst(g)) u_(src(f) x src(g)) (dst(f) x src(g))
// -> dst(f) x dst(g), with product-then-pushout decorations on the source.
// Requires f and g mono; the result is then mono as well.
PPInstance pushout_product(const DecoratedMap& f, const DecoratedMap& g);

// The functorial map between two products induced by maps of the factors.
DecoratedMap product_map(const MBProduct& src, const MBProduct& dst,
                         const DecoratedMap& u, const DecoratedMap& v);

enum class PPStrategy {
  Isomorphism,        // the pushout-product is an isomorphism
  Shuffle,            // boundary x inner horn, scripted filtration
  Staircase,          // boundary x collapsed outer horn, scripted
  MirroredStaircase,  // boundary x terminal outer horn, scripted
  Prism,              // boundary x terminal vertex, scripted
  Auto,               // greedy automatic search
};

const char* strategy_name(PPStrategy s);

struct PPReport {
  GeneratorId cof;
  GeneratorId ano;
  PPStrategy strategy = PPStrategy::Auto;
  std::string verdict;  // "isomorphism" | "verified" | "unverified"
  std::string detail;   // diagnostics for unverified cases
  std::optional<Derivation> derivation;
  long examined = 0;    // attachments inspected by the automatic search
  bool truncated = false;

  bool ok() const { return verdict != "unverified"; }
};

// Resolves one case of the table: computes the pushout-product, then either
// certifies it as an isomorphism, runs the scripted filtration the printed
// case calls for (checking that its start agrees with the pushout-product
// source), or falls back to the automatic search within the budget.
PPReport verify_case(const GeneratorId& cof, const GeneratorId& ano,
                     long budget, int cap = kDefaultCap);

// The case table at fixed minimal parameters.  Kept as data so runtime
// bounds can be tuned without touching the verifier.
struct PPManifest {
  int version = 1;
  std::vector<std::pair<GeneratorId, GeneratorId>> cases;
};

PPManifest load_pp_manifest(std::istream& in);

// Runs every manifest case in order.
std::vector<PPReport> pp_table(const PPManifest& manifest, long budget,
                               int cap = kDefaultCap);

// One machine-readable record per report: ids, strategy, verdict, stats.
std::string pp_table_json(const std::vector<PPReport>& reports);

}  // namespace mbs
