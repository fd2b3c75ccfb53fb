#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbs/analyze.hpp"
#include "mbs/generators.hpp"

using namespace mbs;

namespace {

constexpr long kBudget = 200000;

SSetPtr delta(int n) { return std::make_shared<FiniteSSet>(standard(n)); }

SSetMap constant_map(SSetPtr x, SSetPtr pt) {
  SSetMap m{x, pt, {}};
  for (const auto& [c, k] : x->dim_of) m.assign[c] = pt->const_ref("0", k);
  return m;
}

DecoratedMap over_point(MBPtr x) {
  auto pt = sharp(delta(0));
  return DecoratedMap{constant_map(x->under, pt->under), x, pt};
}

// Three vertices x, y, z; edges u: x -> y, v: y -> z and two parallel long
// edges w, t: x -> z; triangles sig = (u then v over w), a thin theta with
// the same outer shape over t, a left-degenerate tau comparing t with w, and
// one 3-cell rho gluing them so that tau is the left-degeneration of sig.
MBPtr left_degeneration_fixture() {
  auto x = std::make_shared<FiniteSSet>();
  x->add_cell(0, "x");
  x->add_cell(0, "y");
  x->add_cell(0, "z");
  x->add_cell(1, "u", {x->ref("y"), x->ref("x")});
  x->add_cell(1, "v", {x->ref("z"), x->ref("y")});
  x->add_cell(1, "w", {x->ref("z"), x->ref("x")});
  x->add_cell(1, "t", {x->ref("z"), x->ref("x")});
  SimplexRef s0x = x->degeneracy(x->ref("x"), 0);
  x->add_cell(2, "sig", {x->ref("v"), x->ref("w"), x->ref("u")});
  x->add_cell(2, "theta", {x->ref("v"), x->ref("t"), x->ref("u")});
  x->add_cell(2, "tau", {x->ref("t"), x->ref("w"), s0x});
  x->add_cell(3, "rho",
              {x->ref("theta"), x->ref("sig"), x->ref("tau"),
               x->degeneracy(x->ref("u"), 0)});
  REQUIRE(!x->validate());
  return decorate(x, {}, {"theta"}, {"theta"}).object;
}

// A left-degenerate triangle over a base with a second parallel triangle
// that nothing in the total space hits: the horn problem over the spare
// triangle has no filler at all.
DecoratedMap missing_filler_fixture() {
  auto x = std::make_shared<FiniteSSet>();
  x->add_cell(0, "a");
  x->add_cell(0, "b");
  x->add_cell(1, "u", {x->ref("b"), x->ref("a")});
  x->add_cell(2, "sig",
              {x->ref("u"), x->ref("u"), x->degeneracy(x->ref("a"), 0)});
  REQUIRE(!x->validate());

  auto s = std::make_shared<FiniteSSet>();
  s->add_cell(0, "A");
  s->add_cell(0, "B");
  s->add_cell(1, "U", {s->ref("B"), s->ref("A")});
  SimplexRef s0A = s->degeneracy(s->ref("A"), 0);
  s->add_cell(2, "G1", {s->ref("U"), s->ref("U"), s0A});
  s->add_cell(2, "G2", {s->ref("U"), s->ref("U"), s0A});
  REQUIRE(!s->validate());

  SSetMap m{x, s, {}};
  m.assign["a"] = s->ref("A");
  m.assign["b"] = s->ref("B");
  m.assign["u"] = s->ref("U");
  m.assign["sig"] = s->ref("G1");
  DecoratedMap p{m, flat(x), flat(s)};
  REQUIRE(!p.validate());
  return p;
}

// Triangle with its initial edge collapsed to a point, so the surviving
// 2-cell is left-degenerate and appears as a 1-cell of the mapping space
// from the collapsed vertex to the last one.
struct CollapsedTriangle {
  MBPtr object;
  Cell triangle;
  Cell from;
  Cell to;
};

CollapsedTriangle collapsed_triangle() {
  auto d2 = delta(2);
  Subcomplex edge = span_subcomplex(d2, {"01"});
  SSetPtr pt = delta(0);
  SSetMap to_pt{edge.object, pt, {}};
  for (const auto& [c, k] : edge.object->dim_of)
    to_pt.assign[c] = pt->const_ref("0", k);
  Pushout q = pushout(edge.inclusion, to_pt);
  Cell tri = q.object->cells[2][0];
  auto verts = q.object->vertices(q.object->ref(tri));
  return {decorate(q.object, {}, {tri}, {tri}).object, tri, verts[0],
          verts[2]};
}

}  // namespace

TEST_CASE("a left-degenerate triangle is its own left-degeneration") {
  auto x = flat(delta(2));
  SimplexRef sigma = x->under->degeneracy(x->under->ref("01"), 0);
  LeftDegenerationResult r = left_degeneration(*x, sigma);
  REQUIRE(r.tau);
  CHECK(*r.tau == sigma);
  REQUIRE(r.witness);
  CHECK(r.witness->degenerate());
  CHECK(x->under->face(*r.witness, 1) == sigma);
  CHECK(x->under->face(*r.witness, 2) == sigma);
}

TEST_CASE("left-degeneration search recovers a prescribed witness 3-cell") {
  MBPtr x = left_degeneration_fixture();
  LeftDegenerationResult r = left_degeneration(*x, x->under->ref("sig"));
  REQUIRE(r.tau);
  CHECK(*r.tau == x->under->ref("tau"));
  REQUIRE(r.witness);
  CHECK(*r.witness == x->under->ref("rho"));

  SUBCASE("the witness has the defining faces") {
    const FiniteSSet& u = *x->under;
    CHECK(u.face(*r.witness, 1) == u.ref("sig"));
    CHECK(u.face(*r.witness, 2) == *r.tau);
    SimplexRef d2sig = u.face(u.ref("sig"), 2);
    CHECK(u.face(*r.witness, 3) == u.degeneracy(d2sig, 0));
    CHECK(x->is_thin(u.face(*r.witness, 0)));
  }

  SUBCASE("left-degeneration is idempotent on its output") {
    LeftDegenerationResult again = left_degeneration(*x, *r.tau);
    REQUIRE(again.tau);
    CHECK(*again.tau == *r.tau);
  }
}

TEST_CASE("left-degeneration is absent without a suitable 3-cell") {
  auto x = flat(delta(2));
  LeftDegenerationResult r = left_degeneration(*x, x->under->ref("012"));
  CHECK(!r.tau);
  CHECK(!r.witness);
}

TEST_CASE("degenerate triangles at a vertex are coCartesian") {
  DecoratedMap p = analysis_fixture("point-id");
  SimplexRef sigma = p.src->under->const_ref("0", 2);
  AnalysisVerdict v = is_cocartesian_triangle(p, sigma, 3, kBudget);
  CHECK(v.yes());
}

TEST_CASE("left-degenerate thin triangles of fibrant fixtures are coCartesian") {
  for (const std::string& name : {"j-id", "flat-over-marked-interval"}) {
    DecoratedMap p = analysis_fixture(name);
    const FiniteSSet& x = *p.src->under;
    int checked = 0;
    for (const SimplexRef& sigma : x.all_simplices(2)) {
      if (!x.face(sigma, 2).degenerate()) continue;
      if (!p.src->is_thin(sigma)) continue;
      AnalysisVerdict v = is_cocartesian_triangle(p, sigma, 3, kBudget);
      CHECK_MESSAGE(v.yes(), name, ": ", sigma.str(), " -> ", v.detail);
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("a horn problem with no filler refutes coCartesianness") {
  DecoratedMap p = missing_filler_fixture();
  AnalysisVerdict v =
      is_cocartesian_triangle(p, p.src->under->ref("sig"), 3, kBudget);
  CHECK(v.verdict == Verdict::NoLift);
  REQUIRE(v.failing);
  // The base of the failing square fills the horn with the spare triangle.
  CHECK(v.failing->bottom.map.assign.at("012") == p.dst->under->ref("G2"));
  CHECK(v.detail.find("initial horn") != std::string::npos);
}

TEST_CASE("degenerate edges of fibrant fixtures are p-Cartesian") {
  for (const std::string& name : {"point-id", "j-id", "j-interval-proj"}) {
    DecoratedMap p = analysis_fixture(name);
    const FiniteSSet& x = *p.src->under;
    for (const Cell& vtx : x.cells[0]) {
      SimplexRef e = x.degeneracy(x.ref(vtx), 0);
      AnalysisVerdict v =
          is_p_cartesian_edge(p, e, CartesianMode::Plain, 3, kBudget);
      CHECK_MESSAGE(v.yes(), name, ": ", e.str(), " -> ", v.detail);
    }
  }
}

TEST_CASE("the edge over the marked interval edge is p-Cartesian") {
  DecoratedMap p = analysis_fixture("flat-over-marked-interval");
  REQUIRE(p.dst->is_marked(p.apply(p.src->under->ref("01"))));
  AnalysisVerdict v = is_p_cartesian_edge(p, p.src->under->ref("01"),
                                          CartesianMode::Plain, 3, kBudget);
  CHECK(v.yes());
}

TEST_CASE("the terminal-horn target's marked edge fails its own 2-horn") {
  // The target of the marked terminal horn scales its outer triangle lean
  // but not thin, so the unique 2-horn filler never qualifies as thin and
  // the constructive existence clause refutes the edge.
  DecoratedMap p = analysis_fixture("a4-target-id");
  const FiniteSSet& x = *p.src->under;
  REQUIRE(p.src->is_marked(x.ref("12")));
  CHECK(p.src->is_lean(x.ref("012")));
  CHECK(!p.src->is_thin(x.ref("012")));

  AnalysisVerdict v = is_p_cartesian_edge(p, x.ref("12"),
                                          CartesianMode::Plain, 3, kBudget);
  CHECK(v.verdict == Verdict::NoLift);
  REQUIRE(v.failing);
  CHECK(v.detail.find("terminal 2-horn") != std::string::npos);
  CHECK(v.failing->top.map.assign.at("12") == x.ref("12"));
}

TEST_CASE("fibration profiles agree with the repackaged classification") {
  const std::set<std::string> fibrant = {"point-id", "j-id", "j-interval-proj",
                                         "flat-over-marked-interval"};
  for (const std::string& name : analysis_fixture_names()) {
    CAPTURE(name);
    DecoratedMap p = analysis_fixture(name);
    FibrationProfile pr = check_family(p, 3, kBudget);
    CHECK(pr.pass() == (fibrant.count(name) == 1));

    ClassifyReport cls =
        classify_fibration(repackage(p, pr), FibClass::MB, 3, kBudget);
    CHECK(pr.pass() == cls.pass);

    if (pr.locally_fibred) {
      // Thin triangles are coCartesian, computed rather than assumed.
      for (const Cell& c : p.src->thin)
        if (p.src->under->dim(c) == 2) CHECK(pr.cocartesian.count(c) == 1);
    }
    if (cls.pass) {
      for (const Cell& c : p.src->marked)
        if (p.src->under->dim(c) == 1) CHECK(pr.cartesian.count(c) == 1);
    }
  }
}

TEST_CASE("profile condition records localize the failure") {
  SUBCASE("missing Cartesian lifts") {
    FibrationProfile pr =
        check_family(analysis_fixture("a3-target-id"), 3, kBudget);
    CHECK(!pr.pass());
    CHECK(!pr.o2c);
    for (const ConditionRecord& c : pr.conditions)
      if (c.name == "cartesian-lifts") CHECK(c.verdict == Verdict::NoLift);
  }

  SUBCASE("failed fibrancy of the total space") {
    FibrationProfile pr =
        check_family(analysis_fixture("unscaled-triangle"), 3, kBudget);
    CHECK(!pr.pass());
    CHECK(!pr.locally_fibred);
    for (const ConditionRecord& c : pr.conditions)
      if (c.name == "weak-s-fibration") CHECK(c.verdict == Verdict::NoLift);
  }

  SUBCASE("the base's own fibrancy is recorded but quantified separately") {
    FibrationProfile pr = check_family(analysis_fixture("j-id"), 3, kBudget);
    REQUIRE(!pr.conditions.empty());
    CHECK(pr.conditions.front().name == "base-fibrancy");
    CHECK(pr.conditions.front().verdict == Verdict::Lifts);
    CHECK(pr.pass());
  }
}

TEST_CASE("the point has no nondegenerate coCartesian triangles") {
  FibrationProfile pr = check_family(analysis_fixture("point-id"), 3, kBudget);
  CHECK(pr.pass());
  CHECK(pr.cocartesian.empty());
  CHECK(pr.cartesian.empty());
}

TEST_CASE("coCartesian triangles match coCartesian mapping-space edges") {
  // The identification of coCartesian triangles with coCartesian edges of the
  // mapping space holds over a fibrant total space.
  SUBCASE("identity 2-morphisms are coCartesian in fibrant fixtures") {
    for (const std::string& name :
         {"j-id", "flat-over-marked-interval", "j-interval-proj"}) {
      DecoratedMap p = analysis_fixture(name);
      const FiniteSSet& x = *p.src->under;
      for (const Cell& e : x.cells[1]) {
        // s0 of an edge is the degenerate 1-cell of the mapping space at
        // that edge, and degenerate mapping-space edges are coCartesian.
        AnalysisVerdict v =
            is_cocartesian_triangle(p, x.degeneracy(x.ref(e), 0), 3, kBudget);
        CHECK_MESSAGE(v.yes(), name, ": s0.", e, " -> ", v.detail);
      }
    }
  }

  SUBCASE("nondegenerate hom 1-cells agree across the fibrant suite") {
    for (const std::string& name :
         {"point-id", "j-id", "flat-over-marked-interval", "j-interval-proj"}) {
      DecoratedMap p = analysis_fixture(name);
      const FiniteSSet& x = *p.src->under;
      for (const Cell& a : x.cells[0])
        for (const Cell& b : x.cells[0]) {
          MappingSpace ms = mapping_space(*p.src, a, b);
          if (ms.space->cells.size() < 2) continue;
          for (const Cell& e : ms.space->cells[1]) {
            AnalysisVerdict v =
                is_cocartesian_triangle(p, ms.carrier.at(e), 3, kBudget);
            if (v.verdict == Verdict::BudgetExhausted) continue;
            CHECK_MESSAGE(v.yes() == (ms.cocartesian_edges.count(e) == 1),
                          name, ": ", a, " -> ", b, " via ",
                          ms.carrier.at(e).str());
          }
        }
    }
  }

  SUBCASE("the fibrancy hypothesis is load-bearing") {
    // The collapsed triangle lacks the unitality 3-cell, so a dimension-3
    // initial horn that whiskers the surviving triangle with an identity has
    // no filler; the one-level scaling witness in the mapping space still
    // reports the cell coCartesian.  Outside fibrant total spaces the two
    // notions genuinely diverge.
    CollapsedTriangle ct = collapsed_triangle();
    DecoratedMap p = over_point(ct.object);
    MappingSpace ms = mapping_space(*ct.object, ct.from, ct.to);
    REQUIRE(ms.space->cells[1].size() == 1);
    Cell e = ms.space->cells[1][0];
    CHECK(ms.cocartesian_edges.count(e) == 1);

    AnalysisVerdict v = is_cocartesian_triangle(p, ms.carrier.at(e), 3, kBudget);
    CHECK(v.verdict == Verdict::NoLift);
    REQUIRE(v.failing);
    CHECK(v.detail.find("dimension 3") != std::string::npos);
  }
}
