#include "mbs/analyze.hpp"

#include <functional>
#include <sstream>

#include "mbs/generators.hpp"

namespace mbs {

namespace {

SSetPtr delta(int n, int cap) {
  return std::make_shared<FiniteSSet>(standard(n, cap));
}

SimplexRef vertex_ref(const FiniteSSet& x, const SimplexRef& r, int i) {
  Cell v = x.vertex(r, i);
  return SimplexRef{{}, v, 0};
}

// Composite of a simplex of the source with the map, as a simplex of the
// target.
SimplexRef push(const SSetMap& m, const SimplexRef& r) { return m.apply(r); }

// Enumerates the commuting squares of p against the flat inclusion
// horn -> simplex whose top extends `pin`, and calls `visit` on each.
// Returns true when the enumeration was complete.
bool sweep_squares(const DecoratedMap& p, const Subcomplex& horn, SSetPtr d,
                   const std::map<Cell, SimplexRef>& pin, long budget,
                   const std::function<bool(const SSetMap&, const SSetMap&)>&
                       visit) {
  bool complete = true;
  MapEnumeration tops = enumerate_maps(horn.object, p.src->under, pin,
                                       static_cast<std::size_t>(budget));
  complete = complete && tops.complete;
  for (const SSetMap& f : tops.maps) {
    std::map<Cell, SimplexRef> base_pin;
    for (const auto& [c, k] : horn.object->dim_of)
      base_pin[c] = push(p.map, f.assign.at(c));
    MapEnumeration bases = enumerate_maps(d, p.dst->under, base_pin,
                                          static_cast<std::size_t>(budget));
    complete = complete && bases.complete;
    for (const SSetMap& g : bases.maps)
      if (!visit(f, g)) return complete;
  }
  return complete;
}

LiftSquare flat_square(const DecoratedMap& p, const Subcomplex& horn,
                       SSetPtr d, const SSetMap& f, const SSetMap& g) {
  return LiftSquare{DecoratedMap{horn.inclusion, flat(horn.object), flat(d)},
                    p, DecoratedMap{f, flat(horn.object), p.src},
                    DecoratedMap{g, flat(d), p.dst}};
}

}  // namespace

LeftDegenerationResult left_degeneration(const MBSSet& x,
                                         const SimplexRef& sigma) {
  const FiniteSSet& u = *x.under;
  if (sigma.dim() != 2)
    throw std::invalid_argument("left_degeneration expects a 2-simplex");
  if (u.face(sigma, 2).degenerate())
    return LeftDegenerationResult{sigma, u.degeneracy(sigma, 1)};
  SimplexRef want_d3 = u.degeneracy(u.face(sigma, 2), 0);
  for (const SimplexRef& rho : u.all_simplices(3)) {
    if (u.face(rho, 1) != sigma) continue;
    if (u.face(rho, 3) != want_d3) continue;
    if (!x.is_thin(u.face(rho, 0))) continue;
    SimplexRef tau = u.face(rho, 2);
    if (!u.face(tau, 2).degenerate()) continue;
    return LeftDegenerationResult{tau, rho};
  }
  return LeftDegenerationResult{};
}

AnalysisVerdict is_cocartesian_triangle(const DecoratedMap& p,
                                        const SimplexRef& sigma, int cap,
                                        long budget) {
  const FiniteSSet& X = *p.src->under;
  if (sigma.dim() != 2)
    throw std::invalid_argument("is_cocartesian_triangle expects a 2-simplex");
  AnalysisVerdict out;
  SimplexRef s = sigma;
  if (!X.face(s, 2).degenerate()) {
    LeftDegenerationResult ld = left_degeneration(*p.src, s);
    if (!ld.tau) {
      out.verdict = Verdict::BudgetExhausted;
      out.detail = "no left-degeneration witness at this cap";
      return out;
    }
    s = *ld.tau;
  }
  bool exhausted = false;
  for (int n = 2; n <= cap; ++n) {
    SSetPtr d = delta(n, X.cap);
    Subcomplex horn = horn_subcomplex(d, 0);
    // Pin the outer triangle {0, 1, n}; at n = 2 its top cell is the filler
    // itself and only the two edges lie in the horn.
    std::map<Cell, SimplexRef> pin;
    pin[simplex_cell({0})] = vertex_ref(X, s, 0);
    pin[simplex_cell({1})] = vertex_ref(X, s, 1);
    pin[simplex_cell({n})] = vertex_ref(X, s, 2);
    pin[simplex_cell({0, 1})] = X.face(s, 2);
    pin[simplex_cell({0, n})] = X.face(s, 1);
    if (n > 2) {
      pin[simplex_cell({1, n})] = X.face(s, 0);
      pin[simplex_cell({0, 1, n})] = s;
    }
    bool stop = false;
    bool complete = sweep_squares(
        p, horn, d, pin, budget, [&](const SSetMap& f, const SSetMap& g) {
          LiftSquare sq = flat_square(p, horn, d, f, g);
          LiftReport rep = solve_lift(sq, budget);
          out.stats.merge(rep.stats);
          if (rep.verdict == Verdict::NoLift) {
            out.verdict = Verdict::NoLift;
            out.failing = sq;
            std::ostringstream os;
            os << "initial horn of dimension " << n << " has no filler";
            out.detail = os.str();
            stop = true;
            return false;
          }
          if (rep.verdict == Verdict::BudgetExhausted) exhausted = true;
          return true;
        });
    if (stop) return out;
    exhausted = exhausted || !complete;
  }
  out.verdict = exhausted ? Verdict::BudgetExhausted : Verdict::Lifts;
  if (exhausted) out.detail = "search budget exhausted";
  return out;
}

AnalysisVerdict is_p_cartesian_edge(const DecoratedMap& p, const SimplexRef& e,
                                    CartesianMode mode, int cap, long budget) {
  const FiniteSSet& X = *p.src->under;
  if (e.dim() != 1)
    throw std::invalid_argument("is_p_cartesian_edge expects an edge");
  AnalysisVerdict out;
  bool exhausted = false;

  // Verdict of the qualifying condition on an outer triangle.
  auto qualifies = [&](const SimplexRef& t) -> Verdict {
    if (mode == CartesianMode::Plain)
      return p.src->is_thin(t) ? Verdict::Lifts : Verdict::NoLift;
    AnalysisVerdict v = is_cocartesian_triangle(p, t, cap, budget);
    out.stats.merge(v.stats);
    return v.verdict;
  };

  // n = 2: a qualifying filler must exist, not merely a filler.
  {
    SSetPtr d = delta(2, X.cap);
    Subcomplex horn = horn_subcomplex(d, 2);
    std::map<Cell, SimplexRef> pin;
    pin[simplex_cell({1})] = vertex_ref(X, e, 0);
    pin[simplex_cell({2})] = vertex_ref(X, e, 1);
    pin[simplex_cell({1, 2})] = e;
    bool stop = false;
    bool complete = sweep_squares(
        p, horn, d, pin, budget, [&](const SSetMap& f, const SSetMap& g) {
          MapEnumeration fillers =
              enumerate_maps(d, p.src->under, f.assign,
                             static_cast<std::size_t>(budget));
          if (!fillers.complete) exhausted = true;
          bool found = false, maybe = false;
          for (const SSetMap& h : fillers.maps) {
            bool over = true;
            for (const auto& [c, k] : d->dim_of)
              over = over && push(p.map, h.assign.at(c)) == g.assign.at(c);
            if (!over) continue;
            Verdict q = qualifies(h.apply(d->ref(simplex_cell({0, 1, 2}))));
            if (q == Verdict::Lifts) {
              found = true;
              break;
            }
            if (q == Verdict::BudgetExhausted) maybe = true;
          }
          if (found) return true;
          if (maybe || !fillers.complete) {
            exhausted = true;
            return true;
          }
          out.verdict = Verdict::NoLift;
          out.failing = flat_square(p, horn, d, f, g);
          out.detail = "no qualifying filler for the terminal 2-horn";
          stop = true;
          return false;
        });
    if (stop) return out;
    exhausted = exhausted || !complete;
  }

  for (int n = 3; n <= cap; ++n) {
    SSetPtr d = delta(n, X.cap);
    Subcomplex horn = horn_subcomplex(d, n);
    std::map<Cell, SimplexRef> pin;
    pin[simplex_cell({n - 1})] = vertex_ref(X, e, 0);
    pin[simplex_cell({n})] = vertex_ref(X, e, 1);
    pin[simplex_cell({n - 1, n})] = e;
    Cell outer = simplex_cell({0, n - 1, n});
    bool stop = false;
    bool complete = sweep_squares(
        p, horn, d, pin, budget, [&](const SSetMap& f, const SSetMap& g) {
          Verdict q = f.src->has_cell(outer)
                          ? qualifies(f.apply(f.src->ref(outer)))
                          : Verdict::Lifts;
          if (q == Verdict::NoLift) return true;  // square does not qualify
          LiftSquare sq = flat_square(p, horn, d, f, g);
          LiftReport rep = solve_lift(sq, budget);
          out.stats.merge(rep.stats);
          if (rep.verdict == Verdict::Lifts) return true;
          if (rep.verdict == Verdict::BudgetExhausted ||
              q == Verdict::BudgetExhausted) {
            exhausted = true;
            return true;
          }
          out.verdict = Verdict::NoLift;
          out.failing = sq;
          std::ostringstream os;
          os << "terminal horn of dimension " << n << " has no filler";
          out.detail = os.str();
          stop = true;
          return false;
        });
    if (stop) return out;
    exhausted = exhausted || !complete;
  }
  out.verdict = exhausted ? Verdict::BudgetExhausted : Verdict::Lifts;
  if (exhausted) out.detail = "search budget exhausted";
  return out;
}

bool FibrationProfile::pass() const {
  for (std::size_t i = 1; i < conditions.size(); ++i)
    if (conditions[i].verdict != Verdict::Lifts) return false;
  return conditions.size() > 1;
}

bool FibrationProfile::inconclusive() const {
  for (std::size_t i = 1; i < conditions.size(); ++i)
    if (conditions[i].verdict == Verdict::BudgetExhausted) return true;
  return false;
}

namespace {

DecoratedMap to_point(const MBPtr& x) {
  SSetPtr pt = delta(0, x->under->cap);
  SSetMap m{x->under, pt, {}};
  for (const auto& [c, k] : x->under->dim_of)
    m.assign[c] = pt->const_ref(simplex_cell({0}), k);
  return DecoratedMap{m, x, flat(pt)};
}

Verdict merge_verdict(Verdict acc, Verdict v) {
  if (acc == Verdict::NoLift || v == Verdict::NoLift) return Verdict::NoLift;
  if (acc == Verdict::BudgetExhausted || v == Verdict::BudgetExhausted)
    return Verdict::BudgetExhausted;
  return Verdict::Lifts;
}

}  // namespace

FibrationProfile check_family(const DecoratedMap& p, int cap, long budget) {
  FibrationProfile pr;
  pr.cap = cap;
  const FiniteSSet& X = *p.src->under;
  const FiniteSSet& S = *p.dst->under;

  std::map<SimplexRef, Verdict> memo;
  auto cocart = [&](const SimplexRef& t) {
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    Verdict v = is_cocartesian_triangle(p, t, cap, budget).verdict;
    memo.emplace(t, v);
    return v;
  };

  // The base's own fibrancy, recorded alongside the classification.
  {
    ClassifyReport base =
        classify_fibration(to_point(p.dst), FibClass::WeakS, cap, budget);
    pr.conditions.push_back(
        {"base-fibrancy",
         base.pass ? Verdict::Lifts
                   : (base.inconclusive ? Verdict::BudgetExhausted
                                        : Verdict::NoLift),
         base.pass ? "" : "base fails weak fibrancy at this cap"});
  }

  // Sweeps.
  if (X.top_dim() >= 2)
    for (const Cell& c : X.cells[2])
      if (cocart(X.ref(c)) == Verdict::Lifts) pr.cocartesian.insert(c);
  if (X.top_dim() >= 1)
    for (const Cell& c : X.cells[1])
      if (is_p_cartesian_edge(p, X.ref(c), CartesianMode::Plain, cap, budget)
              .yes())
        pr.cartesian.insert(c);

  // Weak fibrancy of p itself.
  {
    ClassifyReport ws = classify_fibration(p, FibClass::WeakS, cap, budget);
    Verdict v = ws.pass ? Verdict::Lifts
                        : (ws.inconclusive ? Verdict::BudgetExhausted
                                           : Verdict::NoLift);
    std::string detail;
    if (!ws.failures.empty())
      detail = "fails " + ws.failures.front().id.str();
    pr.conditions.push_back({"weak-s-fibration", v, detail});
  }

  // Local lifts: every left-degenerate base triangle with a prescribed long
  // edge admits a left-degenerate coCartesian lift.
  {
    Verdict v = Verdict::Lifts;
    std::string detail;
    for (const SimplexRef& bt : S.all_simplices(2)) {
      if (!S.face(bt, 2).degenerate()) continue;
      for (const SimplexRef& tau : X.all_simplices(1)) {
        if (push(p.map, tau) != S.face(bt, 1)) continue;
        Verdict best = Verdict::NoLift;
        for (const SimplexRef& sg : X.all_simplices(2)) {
          if (!X.face(sg, 2).degenerate()) continue;
          if (X.face(sg, 1) != tau) continue;
          if (push(p.map, sg) != bt) continue;
          Verdict cv = cocart(sg);
          if (cv == Verdict::Lifts) {
            best = Verdict::Lifts;
            break;
          }
          if (cv == Verdict::BudgetExhausted) best = Verdict::BudgetExhausted;
        }
        if (best != Verdict::Lifts) {
          v = merge_verdict(v, best);
          if (detail.empty())
            detail = "no coCartesian lift over " + bt.str() + " along " +
                     tau.str();
        }
      }
    }
    pr.conditions.push_back({"local-lifts", v, v == Verdict::Lifts ? "" : detail});
  }

  // Functorial family: the 3-cell closure condition.
  {
    Verdict v = Verdict::Lifts;
    std::string detail;
    for (const SimplexRef& rho : X.all_simplices(3)) {
      for (int i : {1, 2}) {
        SimplexRef mid = i == 1 ? X.face(rho, 3) : X.face(rho, 0);
        if (!p.src->is_thin(mid)) continue;
        bool premise = true, premise_maybe = false;
        for (int j = 0; j <= 3; ++j) {
          if (j == i) continue;
          Verdict fj = cocart(X.face(rho, j));
          if (fj == Verdict::NoLift) premise = false;
          if (fj == Verdict::BudgetExhausted) premise_maybe = true;
        }
        if (!premise) continue;
        Verdict missing = cocart(X.face(rho, i));
        if (missing == Verdict::Lifts) continue;
        if (premise_maybe || missing == Verdict::BudgetExhausted) {
          v = merge_verdict(v, Verdict::BudgetExhausted);
          continue;
        }
        v = Verdict::NoLift;
        detail = "3-simplex " + rho.str() + " breaks closure at face " +
                 std::to_string(i);
      }
    }
    pr.conditions.push_back({"functorial-family", v, detail});
  }

  // Degenerate edges are p-Cartesian.
  {
    Verdict v = Verdict::Lifts;
    std::string detail;
    for (const Cell& c : X.cells[0]) {
      AnalysisVerdict av = is_p_cartesian_edge(
          p, X.degeneracy(X.ref(c), 0), CartesianMode::Plain, cap, budget);
      v = merge_verdict(v, av.verdict);
      if (av.verdict == Verdict::NoLift && detail.empty())
        detail = "identity of " + c + ": " + av.detail;
    }
    pr.conditions.push_back({"degenerate-edges-cartesian", v, detail});
  }

  // Every base edge into the image of a point admits a p-Cartesian lift.
  {
    Verdict v = Verdict::Lifts;
    std::string detail;
    if (S.top_dim() >= 1)
      for (const Cell& be : S.cells[1])
        for (const Cell& x : X.cells[0]) {
          if (p.map.apply_vertex(x) != S.vertex(S.ref(be), 1)) continue;
          bool found = false;
          if (X.top_dim() >= 1)
            for (const Cell& xe : X.cells[1])
              if (X.vertex(X.ref(xe), 1) == x &&
                  push(p.map, X.ref(xe)) == S.ref(be) &&
                  pr.cartesian.count(xe)) {
                found = true;
                break;
              }
          if (!found) {
            v = Verdict::NoLift;
            if (detail.empty())
              detail = "no Cartesian lift of " + be + " ending at " + x;
          }
        }
    pr.conditions.push_back({"cartesian-lifts", v, detail});
  }

  pr.locally_fibred = pr.conditions[1].verdict == Verdict::Lifts &&
                      pr.conditions[2].verdict == Verdict::Lifts;
  pr.functorial = pr.conditions[3].verdict == Verdict::Lifts;
  pr.o2 = pr.locally_fibred && pr.functorial &&
          pr.conditions[4].verdict == Verdict::Lifts;
  pr.o2c = pr.o2 && pr.conditions[5].verdict == Verdict::Lifts;
  return pr;
}

DecoratedMap repackage(const DecoratedMap& p, const FibrationProfile& profile) {
  std::set<Cell> lean = profile.cocartesian;
  lean.insert(p.src->thin.begin(), p.src->thin.end());
  MBPtr x = decorate(p.src->under, profile.cartesian, p.src->thin, lean).object;
  const FiniteSSet& S = *p.dst->under;
  std::set<Cell> smarked, slean;
  if (S.top_dim() >= 1)
    smarked.insert(S.cells[1].begin(), S.cells[1].end());
  if (S.top_dim() >= 2) slean.insert(S.cells[2].begin(), S.cells[2].end());
  MBPtr s = decorate(p.dst->under, smarked, p.dst->thin, slean).object;
  return DecoratedMap{p.map, x, s};
}

// --- Fixture suite ---------------------------------------------------------

std::vector<std::string> analysis_fixture_names() {
  return {"point-id",      "j-id",          "a3-target-id", "a4-target-id",
          "j-interval-proj", "flat-over-marked-interval",
          "unscaled-triangle", "lean-not-thin"};
}

DecoratedMap analysis_fixture(const std::string& name, int cap) {
  if (name == "point-id")
    return DecoratedMap::identity(flat(delta(0, cap)));
  if (name == "j-id")
    return DecoratedMap::identity(sharp(nerve_two_object_groupoid(cap)));
  if (name == "a3-target-id")
    return DecoratedMap::identity(instantiate(GeneratorId{Family::A3, 2}, cap).dst);
  if (name == "a4-target-id")
    return DecoratedMap::identity(instantiate(GeneratorId{Family::A4, 2}, cap).dst);
  if (name == "j-interval-proj") {
    // Fibrant fibre times a thin-scaled interval, projected to the interval.
    MBPtr fib = sharp(nerve_two_object_groupoid(cap));
    MBPtr base = flat(delta(1, cap));
    return product_mb(fib, base).proj2;
  }
  if (name == "flat-over-marked-interval") {
    // The underlying identity of the interval, marking forgotten upstairs.
    SSetPtr d = delta(1, cap);
    MBPtr below = decorate(d, {simplex_cell({0, 1})}, {}, {}).object;
    return DecoratedMap{SSetMap::identity(d), flat(d), below};
  }
  if (name == "unscaled-triangle") {
    // Negative: a bare triangle over the point has unfillable inner horns
    // demanding a thin image.
    return to_point(flat(delta(2, cap)));
  }
  if (name == "lean-not-thin") {
    // Negative: a lean triangle that is not thin over the point violates the
    // lean-over-thin saturation.
    SSetPtr d = delta(2, cap);
    MBPtr x = decorate(d, {}, {}, {simplex_cell({0, 1, 2})}).object;
    return to_point(x);
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace mbs
