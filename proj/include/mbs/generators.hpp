// The generating maps of the three weakly saturated classes used throughout:
// scaled anodyne maps, marked biscaled anodyne maps, and cofibrations.
//
// Every generator is instantiated as a concrete decoration-preserving
// monomorphism between finite marked biscaled objects.  The equivalence
// family quantifies over Kan complexes; at this scale it is replaced by a
// configurable list of finite fixtures with a machine-checked horn-filling
// certificate.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbs/decor.hpp"

namespace mbs {

enum class Family {
  SCi,   // scaled inner horn
  SCii,  // scaled 4-simplex saturation
  SCiii, // scaled outer horn with collapsed initial edge
  A1,    // inner horn
  A2,    // 4-simplex saturation
  A3,    // outer horn with collapsed initial edge, lean top triangle
  A4,    // terminal outer horn with marked last edge
  A5,    // terminal vertex of the marked interval
  S1,    // composition of marked edges across thin triangles
  S2,    // lean-over-thin saturation on the triangle
  S3,    // inner lean 2-out-of-3 on the tetrahedron
  S4,    // initial lean 2-out-of-3 on the collapsed tetrahedron
  S5,    // terminal lean 2-out-of-3 with marked last edge
  E,     // marking of a Kan complex of equivalences
  C1,    // boundary inclusion
  C2,    // marking of an edge
  C3,    // lean scaling of a triangle
  C4,    // thin scaling of a lean triangle
  TH,    // derived rule: third marked edge of an all-thin triangle
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// A generator instance.  `n` and `i` are -1 when the family takes no such
// parameter; `fixture` names the Kan fixture for the equivalence family.
struct GeneratorId {
  Family family;
  int n = -1;
  int i = -1;
  std::string fixture;

  bool operator==(const GeneratorId&) const = default;
  auto operator<=>(const GeneratorId&) const = default;

  // Serialized form, e.g. "A1:3:1", "C1:0", "E:J", "A2".
  std::string str() const;
  // Inverse of str(); throws std::invalid_argument on malformed input.
  static GeneratorId parse(const std::string& text);
};

// Builds the generator as a verified decoration-preserving monomorphism.
// Throws std::invalid_argument when the parameters are out of range.
DecoratedMap instantiate(const GeneratorId& id, int cap = kDefaultCap);

// Quotient of the standard n-simplex collapsing the edge {0,1} to a point.
// Deterministic; the cell names agree with those used by the quotient-source
// generators, so maps out of their targets can be assembled against it.
Pushout collapsed_simplex(int n, int cap = kDefaultCap);

// All ids of one family with simplex parameters bounded by max_n.
std::vector<GeneratorId> list_generators(Family f, int max_n);

// The three generating classes, in printed order.  The derived rule TH is
// not part of any class; it only appears as a citable step in derivations.
std::vector<GeneratorId> scaled_anodyne_generators(int max_n);
std::vector<GeneratorId> anodyne_generators(int max_n);
std::vector<GeneratorId> cofibration_generators(int max_n);

// --- Kan fixtures ---------------------------------------------------------

struct HornCheck {
  int n = 0;       // ambient simplex dimension
  int i = 0;       // omitted face
  int probes = 0;  // maps from the horn into the fixture
  int filled = 0;  // how many of them extend over the simplex
};

struct KanFixture {
  std::string name;
  SSetPtr complex;
  std::vector<HornCheck> certificate;

  bool all_filled() const;
};

// Nerve of the contractible groupoid on two objects, truncated at `cap`:
// two vertices and two alternating nondegenerate cells in each dimension.
SSetPtr nerve_two_object_groupoid(int cap);

// Configured fixture list for the equivalence family.
std::vector<std::string> kan_fixture_names();
// Builds a fixture and verifies its horn-filling certificate up to cap - 1.
KanFixture kan_fixture(const std::string& name, int cap = kDefaultCap);

}  // namespace mbs
