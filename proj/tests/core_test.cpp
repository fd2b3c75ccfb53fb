#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "mbs/core.hpp"

using namespace mbs;

namespace {

// Oracle: number of monotone lattice paths from (0,0) to (n,m), i.e. the
// binomial coefficient C(n+m, n), computed by dynamic programming so the
// product construction is checked against an independent count.
long long lattice_paths(int n, int m) {
  std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(m + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j)
      t[i][j] = (i == 0 || j == 0) ? 1 : t[i - 1][j] + t[i][j - 1];
  return t[n][m];
}

// Oracle: brute-force census of subsets of {0..n} satisfying a predicate,
// grouped by dimension.
template <typename Pred>
std::vector<int> subset_census(int n, Pred keep) {
  std::vector<int> counts(n + 1, 0);
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v <= n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    if (keep(verts)) counts[verts.size() - 1]++;
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<int> census(const FiniteSSet& x) {
  std::vector<int> counts;
  for (const auto& layer : x.cells) counts.push_back(layer.size());
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

std::size_t total_cells(const FiniteSSet& x) {
  std::size_t n = 0;
  for (const auto& layer : x.cells) n += layer.size();
  return n;
}

}  // namespace

TEST_CASE("degeneracy words normalize to strictly decreasing form") {
  CHECK(normalize_word({0, 1}).js == std::vector<int>{2, 0});
  CHECK(normalize_word({2, 0}).js == std::vector<int>{2, 0});
  CHECK(normalize_word({0, 0}).js == std::vector<int>{1, 0});
  CHECK(normalize_word({1, 2, 0}).js == std::vector<int>{3, 1, 0});
  // Idempotence.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto w = normalize_word({a, b});
      CHECK(normalize_word(w.js) == w);
      CHECK(w.js[0] > w.js[1]);
    }
}

TEST_CASE("standard simplices have binomial cell counts") {
  auto d0 = standard(0);
  CHECK(census(d0) == std::vector<int>{1});

  auto d2 = standard(2);
  CHECK(census(d2) == std::vector<int>{3, 3, 1});
  CHECK(!d2.validate());

  auto d4 = standard(4);
  CHECK(total_cells(d4) == 31);
  auto oracle = subset_census(4, [](const auto&) { return true; });
  CHECK(census(d4) == oracle);
  CHECK(!d4.validate());
}

TEST_CASE("face and degeneracy calculus satisfies the simplicial identities") {
  auto x = standard(3);
  for (int k = 1; k <= 3; ++k) {
    for (const SimplexRef& r : x.all_simplices(k)) {
      if (k >= 2)
        for (int j = 1; j <= k; ++j)
          for (int i = 0; i < j; ++i)
            CHECK(x.face(x.face(r, j), i) == x.face(x.face(r, i), j - 1));
      // d_i s_i = id = d_{i+1} s_i.
      for (int i = 0; i <= k; ++i) {
        CHECK(x.face(x.degeneracy(r, i), i) == r);
        CHECK(x.face(x.degeneracy(r, i), i + 1) == r);
      }
    }
  }
}

TEST_CASE("vertex extraction matches subset identifiers") {
  auto x = standard(3);
  SimplexRef r = x.ref("013");
  CHECK(x.vertices(r) == std::vector<Cell>{"0", "1", "3"});
  SimplexRef s = x.degeneracy(r, 1);
  CHECK(x.vertices(s) == std::vector<Cell>{"0", "1", "1", "3"});
}

TEST_CASE("boundary and horn subcomplexes") {
  auto d1 = std::make_shared<FiniteSSet>(standard(1));
  auto bd = boundary_subcomplex(d1);
  CHECK(census(*bd.object) == std::vector<int>{2});

  auto d2 = std::make_shared<FiniteSSet>(standard(2));
  auto h = horn_subcomplex(d2, 1);
  CHECK(census(*h.object) == std::vector<int>{3, 2});
  CHECK(h.inclusion.is_mono());
  CHECK(!h.inclusion.validate());

  // Horn(0) of the 3-simplex: subsets containing 0 or missing some vertex
  // other than 0, except the full set and the 0-th face.
  auto d3 = std::make_shared<FiniteSSet>(standard(3));
  auto h0 = horn_subcomplex(d3, 0);
  auto oracle = subset_census(3, [](const std::vector<int>& v) {
    if (v.size() == 4) return false;                      // top cell
    if (v == std::vector<int>{1, 2, 3}) return false;     // omitted face
    return true;
  });
  CHECK(census(*h0.object) == oracle);
  CHECK(!h0.object->validate());

  CHECK_THROWS(horn_subcomplex(d3, 5));
}

TEST_CASE("span subcomplex closes under faces") {
  auto d3 = std::make_shared<FiniteSSet>(standard(3));
  auto s = span_subcomplex(d3, {"013"});
  CHECK(census(*s.object) == std::vector<int>{3, 3, 1});
  CHECK_THROWS(span_subcomplex(d3, {"99"}));
}

TEST_CASE("products count shuffles") {
  auto d1 = std::make_shared<FiniteSSet>(standard(1));
  auto p = product(d1, d1);
  CHECK(census(*p.object) == std::vector<int>{4, 5, 2});
  CHECK(!p.object->validate());
  CHECK(!p.proj1.validate());
  CHECK(!p.proj2.validate());

  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      if (n + m > kDefaultCap) continue;
      auto a = std::make_shared<FiniteSSet>(standard(n));
      auto b = std::make_shared<FiniteSSet>(standard(m));
      auto q = product(a, b);
      CHECK(q.object->top_dim() == n + m);
      CHECK(static_cast<long long>(q.object->cells[n + m].size()) ==
            lattice_paths(n, m));
      CHECK(!q.object->validate());
    }
  }

  // Above-cap products are truncated with a flag, never silently.
  auto a = std::make_shared<FiniteSSet>(standard(3));
  auto b = std::make_shared<FiniteSSet>(standard(3));
  auto q = product(a, b);
  CHECK(q.object->truncated);
  CHECK(q.object->top_dim() == kDefaultCap);
}

TEST_CASE("product with a point is the identity in disguise") {
  auto d3 = std::make_shared<FiniteSSet>(standard(3));
  auto pt = std::make_shared<FiniteSSet>(standard(0));
  auto p = product(d3, pt);
  CHECK(census(*p.object) == census(*d3));
  CHECK(p.proj1.is_iso());
}

TEST_CASE("edge collapse pushout renormalizes degeneracies") {
  // Collapse the initial edge of the 2-simplex.
  auto d2 = std::make_shared<FiniteSSet>(standard(2));
  auto edge = span_subcomplex(d2, {"01"});
  auto pt = std::make_shared<FiniteSSet>(standard(0));
  SSetMap to_pt{edge.object, pt, {}};
  for (const auto& [c, k] : edge.object->dim_of)
    to_pt.assign[c] = pt->const_ref("0", k);
  auto po = pushout(edge.inclusion, to_pt);

  CHECK(census(*po.object) == std::vector<int>{2, 2, 1});
  CHECK(!po.object->validate());
  CHECK(!po.in_b.validate());
  CHECK(!po.in_c.validate());

  // Oracle for edge-collapsed standard simplices: subsets of {0..n} survive,
  // except that {0} and {1} merge and {0,1} becomes degenerate.
  auto d3 = std::make_shared<FiniteSSet>(standard(3));
  auto edge3 = span_subcomplex(d3, {"01"});
  SSetMap to_pt3{edge3.object, pt, {}};
  for (const auto& [c, k] : edge3.object->dim_of)
    to_pt3.assign[c] = pt->const_ref("0", k);
  auto po3 = pushout(edge3.inclusion, to_pt3);
  auto oracle = subset_census(3, [](const std::vector<int>& v) {
    return v != std::vector<int>{0, 1} && v != std::vector<int>{1};
  });
  CHECK(census(*po3.object) == oracle);
  CHECK(!po3.object->validate());
}

TEST_CASE("pushout along an identity is an isomorphism") {
  auto d2 = std::make_shared<FiniteSSet>(standard(2));
  auto h = horn_subcomplex(d2, 1);
  auto po = pushout(SSetMap::identity(h.object), h.inclusion);
  CHECK(po.in_c.is_iso());
  CHECK(census(*po.object) == census(*d2));
}

TEST_CASE("collapsing the 2-simplex onto a point via its vertices") {
  auto d2 = std::make_shared<FiniteSSet>(standard(2));
  auto verts = span_subcomplex(d2, {"0", "1", "2"});
  auto pt = std::make_shared<FiniteSSet>(standard(0));
  SSetMap to_pt{verts.object, pt, {}};
  for (const auto& [c, k] : verts.object->dim_of)
    to_pt.assign[c] = pt->const_ref("0", k);
  auto po = pushout(verts.inclusion, to_pt);
  CHECK(!po.object->validate());
  CHECK(po.object->cells[0].size() == 1);
  // All three edges survive the collapse as loops, and the triangle remains.
  CHECK(po.object->cells[1].size() == 3);
  CHECK(po.object->cells[2].size() == 1);
}

TEST_CASE("pushout satisfies the universal property on small probes") {
  // B <- A -> C with A the initial edge of B = standard(2), C a point.
  auto d2 = std::make_shared<FiniteSSet>(standard(2));
  auto edge = span_subcomplex(d2, {"01"});
  auto pt = std::make_shared<FiniteSSet>(standard(0));
  SSetMap to_pt{edge.object, pt, {}};
  for (const auto& [c, k] : edge.object->dim_of)
    to_pt.assign[c] = pt->const_ref("0", k);
  auto po = pushout(edge.inclusion, to_pt);

  // Probe targets: small standard simplices.
  for (int n : {0, 1, 2}) {
    auto probe = std::make_shared<FiniteSSet>(standard(n));
    auto from_b = enumerate_maps(d2, probe, {}, 10000);
    REQUIRE(from_b.complete);
    for (const SSetMap& u : from_b.maps) {
      auto from_c = enumerate_maps(pt, probe, {}, 10000);
      REQUIRE(from_c.complete);
      for (const SSetMap& v : from_c.maps) {
        // Cocone condition.
        bool cocone = true;
        for (const auto& [c, k] : edge.object->dim_of)
          if (u.apply(edge.inclusion.assign.at(c)) !=
              v.apply(to_pt.assign.at(c)))
            cocone = false;
        if (!cocone) continue;
        // Exactly one factorization through the pushout.
        auto cand = enumerate_maps(po.object, probe, {}, 10000);
        REQUIRE(cand.complete);
        int found = 0;
        for (const SSetMap& w : cand.maps) {
          bool match = true;
          for (const auto& [c, k] : d2->dim_of)
            if (w.apply(po.in_b.assign.at(c)) != u.assign.at(c)) match = false;
          for (const auto& [c, k] : pt->dim_of)
            if (w.apply(po.in_c.assign.at(c)) != v.assign.at(c)) match = false;
          if (match) ++found;
        }
        CHECK(found == 1);
      }
    }
  }
}

TEST_CASE("map enumeration is deterministic and face-compatible") {
  auto d1 = std::make_shared<FiniteSSet>(standard(1));
  auto d2 = std::make_shared<FiniteSSet>(standard(2));
  auto maps = enumerate_maps(d1, d2, {}, 1000);
  REQUIRE(maps.complete);
  // Monotone maps [1] -> [2]: 6 of them.
  CHECK(maps.maps.size() == 6);
  for (const SSetMap& m : maps.maps) CHECK(!m.validate());
  auto again = enumerate_maps(d1, d2, {}, 1000);
  for (std::size_t i = 0; i < maps.maps.size(); ++i)
    CHECK(maps.maps[i].assign == again.maps[i].assign);
}
