#include "mbs/lifting.hpp"

#include <algorithm>

namespace mbs {

namespace {

constexpr std::size_t kEnumLimit = 1u << 17;

// Image of an arbitrary simplex under a partial cell assignment.
SimplexRef apply_assign(const std::map<Cell, SimplexRef>& assign,
                        const SimplexRef& r) {
  const SimplexRef& img = assign.at(r.cell);
  std::vector<int> total(r.word.js);
  total.insert(total.end(), img.word.js.begin(), img.word.js.end());
  return SimplexRef{normalize_word(std::move(total)), img.cell, img.cell_dim};
}

bool decor_compatible(const MBSSet& src, const Cell& c, int k,
                      const MBSSet& dst, const SimplexRef& img) {
  if (k == 1 && src.marked.count(c) && !dst.is_marked(img)) return false;
  if (k == 2) {
    if (src.thin.count(c) && !dst.is_thin(img)) return false;
    if (src.lean.count(c) && !dst.is_lean(img)) return false;
  }
  return true;
}

struct LiftSearch {
  const LiftSquare& sq;
  const FiniteSSet& b;
  const FiniteSSet& x;
  long budget;
  SearchStats stats;
  bool exhausted = false;
  std::map<Cell, SimplexRef> assign;
  // Cells in search order; preassigned ones are pinned by the top map.
  std::vector<std::pair<Cell, int>> order;
  std::set<Cell> pinned;

  explicit LiftSearch(const LiftSquare& s, long budget_limit)
      : sq(s), b(*s.j.dst->under), x(*s.p.src->under), budget(budget_limit) {
    for (int k = 0; k <= b.top_dim(); ++k)
      for (const Cell& c : b.cells[k]) order.emplace_back(c, k);
    for (int k = 0; k <= sq.j.src->under->top_dim(); ++k)
      for (const Cell& a : sq.j.src->under->cells[k]) {
        SimplexRef ja = sq.j.map.apply(sq.j.src->under->ref(a));
        if (ja.degenerate()) continue;  // cannot happen for a mono
        assign[ja.cell] = sq.top.map.apply(sq.j.src->under->ref(a));
        pinned.insert(ja.cell);
      }
  }

  bool candidate_ok(const Cell& c, int k, const SimplexRef& cand) {
    if (sq.p.map.apply(cand) != sq.bottom.map.apply(b.ref(c))) return false;
    for (int i = 0; i <= k && k >= 1; ++i)
      if (x.face(cand, i) != apply_assign(assign, b.face(b.ref(c), i)))
        return false;
    return decor_compatible(*sq.j.dst, c, k, *sq.p.src, cand);
  }

  bool search(std::size_t idx) {
    if (idx == order.size()) return true;
    const auto& [c, k] = order[idx];
    stats.max_depth = std::max(stats.max_depth, static_cast<int>(idx));
    if (pinned.count(c))
      return candidate_ok(c, k, assign.at(c)) && search(idx + 1);
    for (const SimplexRef& cand : x.all_simplices(k)) {
      if (++stats.nodes > budget) {
        exhausted = true;
        return false;
      }
      if (!candidate_ok(c, k, cand)) continue;
      assign[c] = cand;
      if (search(idx + 1)) return true;
      if (exhausted) return false;
      assign.erase(c);
    }
    return false;
  }
};

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Lifts: return "lifts";
    case Verdict::NoLift: return "no-lift";
    case Verdict::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

std::optional<std::string> LiftSquare::validate() const {
  for (const DecoratedMap* m : {&j, &p, &top, &bottom})
    if (auto err = m->validate()) return err;
  if (!j.is_mono()) return "left leg is not a monomorphism";
  if (!same_object(j.src, top.src) || !same_object(j.dst, bottom.src) ||
      !same_object(top.dst, p.src) || !same_object(bottom.dst, p.dst))
    return "square corners do not line up";
  for (int k = 0; k <= j.src->under->top_dim(); ++k)
    for (const Cell& a : j.src->under->cells[k]) {
      SimplexRef r = j.src->under->ref(a);
      if (p.map.apply(top.map.apply(r)) != bottom.map.apply(j.map.apply(r)))
        return "square does not commute at " + a;
    }
  return std::nullopt;
}

bool verify_witness(const LiftSquare& sq, const DecoratedMap& h) {
  if (!same_object(h.src, sq.j.dst) || !same_object(h.dst, sq.p.src))
    return false;
  if (h.validate()) return false;
  const FiniteSSet& a = *sq.j.src->under;
  for (int k = 0; k <= a.top_dim(); ++k)
    for (const Cell& c : a.cells[k]) {
      SimplexRef r = a.ref(c);
      if (h.map.apply(sq.j.map.apply(r)) != sq.top.map.apply(r)) return false;
    }
  const FiniteSSet& b = *sq.j.dst->under;
  for (int k = 0; k <= b.top_dim(); ++k)
    for (const Cell& c : b.cells[k]) {
      SimplexRef r = b.ref(c);
      if (sq.p.map.apply(h.map.apply(r)) != sq.bottom.map.apply(r))
        return false;
    }
  return true;
}

LiftReport solve_lift(const LiftSquare& sq, long budget) {
  if (auto err = sq.validate())
    throw std::invalid_argument("invalid lifting problem: " + *err);
  LiftSearch search(sq, budget);
  bool found = search.search(0);
  LiftReport rep;
  rep.stats = search.stats;
  if (found) {
    DecoratedMap h{SSetMap{sq.j.dst->under, sq.p.src->under,
                           std::move(search.assign)},
                   sq.j.dst, sq.p.src};
    if (!verify_witness(sq, h))
      throw std::logic_error("search produced an invalid witness");
    rep.verdict = Verdict::Lifts;
    rep.witness = std::move(h);
  } else {
    rep.verdict =
        search.exhausted ? Verdict::BudgetExhausted : Verdict::NoLift;
  }
  return rep;
}

LiftReport has_rlp(const DecoratedMap& p, const GeneratorId& id, long budget,
                   int cap) {
  DecoratedMap j = instantiate(id, std::max(cap, kDefaultCap));
  LiftReport agg;
  agg.verdict = Verdict::Lifts;
  MapEnumeration tops =
      enumerate_maps(j.src->under, p.src->under, {}, kEnumLimit);
  if (!tops.complete) agg.verdict = Verdict::BudgetExhausted;
  for (const SSetMap& tm : tops.maps) {
    DecoratedMap top{tm, j.src, p.src};
    if (top.validate()) continue;  // not decoration-preserving
    // Bottoms must agree with p . top on the image of the generator source.
    std::map<Cell, SimplexRef> partial;
    bool degenerate_clash = false;
    const FiniteSSet& a = *j.src->under;
    for (int k = 0; k <= a.top_dim() && !degenerate_clash; ++k)
      for (const Cell& c : a.cells[k]) {
        SimplexRef jc = j.map.apply(a.ref(c));
        SimplexRef want = p.map.apply(tm.apply(a.ref(c)));
        if (!jc.degenerate()) {
          partial[jc.cell] = want;
        } else if (want.word != jc.word) {
          degenerate_clash = true;
          break;
        }
      }
    if (degenerate_clash) continue;
    MapEnumeration bottoms =
        enumerate_maps(j.dst->under, p.dst->under, partial, kEnumLimit);
    if (!bottoms.complete) agg.verdict = Verdict::BudgetExhausted;
    for (const SSetMap& bm : bottoms.maps) {
      DecoratedMap bottom{bm, j.dst, p.dst};
      if (bottom.validate()) continue;
      LiftSquare sq{j, p, top, bottom};
      if (sq.validate()) continue;
      long left = budget - agg.stats.nodes;
      if (left <= 0) {
        agg.verdict = Verdict::BudgetExhausted;
        agg.failing_square = sq;
        return agg;
      }
      LiftReport one = solve_lift(sq, left);
      agg.stats.merge(one.stats);
      if (one.verdict == Verdict::NoLift) {
        agg.verdict = Verdict::NoLift;
        agg.failing_square = sq;
        return agg;
      }
      if (one.verdict == Verdict::BudgetExhausted) {
        agg.verdict = Verdict::BudgetExhausted;
        agg.failing_square = sq;
        return agg;
      }
    }
  }
  return agg;
}

ClassifyReport classify_fibration(const DecoratedMap& p, FibClass cls, int cap,
                                  long budget) {
  std::vector<GeneratorId> gens;
  switch (cls) {
    case FibClass::MB: gens = anodyne_generators(cap); break;
    case FibClass::WeakS: gens = scaled_anodyne_generators(cap); break;
    case FibClass::Trivial: gens = cofibration_generators(cap); break;
  }
  ClassifyReport rep;
  rep.pass = true;
  for (const GeneratorId& id : gens) {
    LiftReport r = has_rlp(p, id, budget, cap);
    rep.stats.merge(r.stats);
    if (r.verdict == Verdict::Lifts) continue;
    rep.failures.push_back({id, r.verdict});
    rep.pass = false;
    if (r.verdict == Verdict::BudgetExhausted) rep.inconclusive = true;
  }
  return rep;
}

MBPtr fibre(const DecoratedMap& p, const Cell& base_vertex) {
  const FiniteSSet& s = *p.dst->under;
  if (!s.has_cell(base_vertex) || s.dim(base_vertex) != 0)
    throw std::invalid_argument("not a base vertex: " + base_vertex);
  const FiniteSSet& x = *p.src->under;
  std::set<Cell> keep;
  for (int k = 0; k <= x.top_dim(); ++k)
    for (const Cell& c : x.cells[k]) {
      std::vector<Cell> vs = s.vertices(p.map.apply(x.ref(c)));
      if (std::all_of(vs.begin(), vs.end(),
                      [&](const Cell& v) { return v == base_vertex; }))
        keep.insert(c);
    }
  Subcomplex sub = span_subcomplex(p.src->under, keep);
  return restrict_decorations(sub.object, *p.src);
}

bool is_equivalence(const MBSSet& x, const SimplexRef& e) {
  if (e.dim() != 1) throw std::invalid_argument("not an edge");
  if (e.degenerate()) return true;
  const FiniteSSet& u = *x.under;
  Cell v0 = u.vertex(e, 0);
  Cell v1 = u.vertex(e, 1);
  SimplexRef id0{DegeneracyWord{{0}}, v0, 0};
  SimplexRef id1{DegeneracyWord{{0}}, v1, 0};
  for (const SimplexRef& g : u.all_simplices(1)) {
    if (u.vertex(g, 0) != v1 || u.vertex(g, 1) != v0) continue;
    bool right = false;  // g . e = id at v0
    bool left = false;   // e . g = id at v1
    for (const SimplexRef& t : u.all_simplices(2)) {
      if (!x.is_thin(t)) continue;
      SimplexRef d0 = u.face(t, 0), d1 = u.face(t, 1), d2 = u.face(t, 2);
      if (d2 == e && d0 == g && d1 == id0) right = true;
      if (d2 == g && d0 == e && d1 == id1) left = true;
    }
    if (left && right) return true;
  }
  return false;
}

MappingSpace mapping_space(const MBSSet& x, const Cell& a, const Cell& b) {
  const FiniteSSet& u = *x.under;
  for (const Cell* v : {&a, &b})
    if (!u.has_cell(*v) || u.dim(*v) != 0)
      throw std::invalid_argument("not a vertex: " + *v);
  int cap = u.cap - 1;
  auto qualifies = [&](const SimplexRef& r, int n) {
    // Initial n-face totally degenerate at a, last vertex b.
    if (u.vertex(r, n + 1) != b) return false;
    SimplexRef init = u.face(r, n + 1);
    return init == u.const_ref(a, n);
  };
  // A space cell of dimension n is degenerate exactly when the underlying
  // simplex is a degeneracy at an index strictly below n.
  auto space_support = [&](const SimplexRef& r, int n) {
    std::vector<int> out;
    for (int i : u.degeneracy_support(r))
      if (i < n) out.push_back(i);
    return out;
  };
  MappingSpace ms;
  auto sp = std::make_shared<FiniteSSet>();
  sp->cap = cap;
  std::map<std::string, Cell> names;  // X-simplex string -> space cell
  std::vector<std::vector<SimplexRef>> level(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    if (n + 1 > u.cap) {
      ms.truncated = true;
      break;
    }
    for (const SimplexRef& r : u.all_simplices(n + 1)) {
      if (!qualifies(r, n) || !space_support(r, n).empty()) continue;
      level[n].push_back(r);
    }
  }
  // Renormalization of an arbitrary qualifying simplex into the space's own
  // Eilenberg-Zilber form: strip the largest admissible degeneracy first.
  auto normalize_space = [&](SimplexRef r, int n) {
    std::vector<int> word;
    while (true) {
      std::vector<int> sup = space_support(r, n);
      if (sup.empty()) break;
      int i = sup.back();
      word.push_back(i);
      r = u.face(r, i + 1);
      --n;
    }
    return SimplexRef{normalize_word(std::move(word)), names.at(r.str()), n};
  };
  for (int n = 0; n <= std::min(cap, u.cap - 1); ++n) {
    for (const SimplexRef& r : level[n]) {
      Cell id = r.str();
      names[id] = id;
      std::vector<SimplexRef> fs;
      if (n >= 1)
        for (int i = 0; i <= n; ++i)
          fs.push_back(normalize_space(u.face(r, i), n - 1));
      sp->add_cell(n, id, std::move(fs));
      ms.carrier[id] = r;
      if (n == 1) {
        if (x.is_thin(r)) ms.equivalence_edges.insert(id);
        if (x.is_lean(r)) ms.cocartesian_edges.insert(id);
      }
    }
  }
  if (auto err = sp->validate())
    throw std::logic_error("mapping space presentation invalid: " + *err);
  ms.space = sp;
  return ms;
}

}  // namespace mbs
