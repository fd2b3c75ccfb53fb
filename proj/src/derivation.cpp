#include "mbs/derivation.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace mbs {

namespace {

SSetPtr delta(int n, int cap) {
  return std::make_shared<FiniteSSet>(standard(n, cap));
}

std::vector<int> cell_digits(const Cell& c) {
  std::vector<int> out;
  for (char ch : c) out.push_back(ch - '0');
  return out;
}

// All nondegenerate cells of a set, ascending dimension.
std::vector<std::pair<Cell, int>> cells_by_dim(const FiniteSSet& x) {
  std::vector<std::pair<Cell, int>> out;
  for (int k = 0; k <= x.top_dim(); ++k)
    for (const Cell& c : x.cells[k]) out.emplace_back(c, k);
  return out;
}

}  // namespace

Stage full_stage(const MBSSet& ambient) {
  Stage s;
  for (const auto& [c, k] : cells_by_dim(*ambient.under)) s.cells.insert(c);
  s.marked = ambient.marked;
  s.thin = ambient.thin;
  s.lean = ambient.lean;
  return s;
}

Stage restrict_stage(const MBSSet& ambient, const std::set<Cell>& cells) {
  Stage s;
  s.cells = cells;
  for (const Cell& c : ambient.marked)
    if (cells.count(c)) s.marked.insert(c);
  for (const Cell& c : ambient.thin)
    if (cells.count(c)) s.thin.insert(c);
  for (const Cell& c : ambient.lean)
    if (cells.count(c)) s.lean.insert(c);
  return s;
}

std::optional<std::string> apply_step(const MBSSet& ambient, Stage& stage,
                                      const DecoratedMap& gen,
                                      const SSetMap& attach) {
  if (attach.src != gen.dst->under && !(*attach.src == *gen.dst->under))
    return "attachment source is not the generator target";
  if (attach.dst != ambient.under && !(*attach.dst == *ambient.under))
    return "attachment target is not the ambient";
  if (auto err = attach.validate())
    return "attachment map invalid: " + *err;

  // The generator source must land inside the stage, decorations included.
  const FiniteSSet& gsrc = *gen.src->under;
  for (const auto& [a, k] : cells_by_dim(gsrc)) {
    SimplexRef r = attach.apply(gen.map.apply(gsrc.ref(a)));
    if (!r.degenerate() && !stage.cells.count(r.cell))
      return "source cell lands outside the stage: " + a + " -> " + r.cell;
  }
  auto need_decor = [&](const std::set<Cell>& src_set,
                        const std::set<Cell>& stage_set,
                        const char* what) -> std::optional<std::string> {
    for (const Cell& c : src_set) {
      SimplexRef r = attach.apply(gen.map.apply(gsrc.ref(c)));
      if (!r.degenerate() && !stage_set.count(r.cell))
        return std::string("source ") + what +
               " decoration missing in stage: " + r.cell;
    }
    return std::nullopt;
  };
  if (auto err = need_decor(gen.src->marked, stage.marked, "marked"))
    return err;
  if (auto err = need_decor(gen.src->thin, stage.thin, "thin")) return err;
  if (auto err = need_decor(gen.src->lean, stage.lean, "lean")) return err;

  // Cells of the target outside the generator image must be attached freshly
  // and injectively.
  std::set<Cell> jimage;
  for (const auto& [a, k] : cells_by_dim(gsrc)) {
    SimplexRef img = gen.map.apply(gsrc.ref(a));
    if (!img.degenerate()) jimage.insert(img.cell);
  }
  std::map<Cell, int> fresh;
  for (const auto& [b, k] : cells_by_dim(*gen.dst->under)) {
    if (jimage.count(b)) continue;
    SimplexRef r = attach.apply(gen.dst->under->ref(b));
    if (r.degenerate()) return "new cell lands degenerately: " + b;
    if (stage.cells.count(r.cell))
      return "new cell is already in the stage: " + r.cell;
    if (!fresh.emplace(r.cell, k).second)
      return "new cells collide in the ambient: " + r.cell;
  }

  // Face closure of the enlarged cell set.
  for (const auto& [c, k] : fresh) {
    for (int i = 0; i <= k && k >= 1; ++i) {
      const SimplexRef& f = ambient.under->faces.at(c)[i];
      if (!stage.cells.count(f.cell) && !fresh.count(f.cell))
        return "stage would not be face-closed at " + c;
    }
  }
  for (const auto& [c, k] : fresh) {
    stage.cells.insert(c);
    // New cells inherit all ambient decorations they carry.
    if (k == 1 && ambient.marked.count(c)) stage.marked.insert(c);
    if (k == 2) {
      if (ambient.thin.count(c)) stage.thin.insert(c);
      if (ambient.lean.count(c)) stage.lean.insert(c);
    }
  }

  // Decorations granted by the generator target, bounded by the ambient's.
  for (const Cell& c : gen.dst->marked) {
    SimplexRef r = attach.apply(gen.dst->under->ref(c));
    if (r.degenerate()) continue;
    if (!ambient.marked.count(r.cell))
      return "marking grant exceeds the ambient: " + r.cell;
    stage.marked.insert(r.cell);
  }
  for (const Cell& c : gen.dst->thin) {
    SimplexRef r = attach.apply(gen.dst->under->ref(c));
    if (r.degenerate()) continue;
    if (!ambient.thin.count(r.cell))
      return "thin grant exceeds the ambient: " + r.cell;
    stage.thin.insert(r.cell);
    stage.lean.insert(r.cell);
  }
  for (const Cell& c : gen.dst->lean) {
    SimplexRef r = attach.apply(gen.dst->under->ref(c));
    if (r.degenerate()) continue;
    if (!ambient.lean.count(r.cell))
      return "lean grant exceeds the ambient: " + r.cell;
    stage.lean.insert(r.cell);
  }
  return std::nullopt;
}

VerifyResult verify(const Derivation& d) {
  const MBSSet& amb = *d.ambient;
  auto fail = [](std::string why, int step) {
    return VerifyResult{false, std::move(why), step};
  };

  for (const Cell& c : d.start.cells) {
    if (!amb.under->has_cell(c))
      return fail("start cell not in the ambient: " + c, -1);
    int k = amb.under->dim(c);
    for (int i = 0; i <= k && k >= 1; ++i)
      if (!d.start.cells.count(amb.under->faces.at(c)[i].cell))
        return fail("start is not face-closed at " + c, -1);
  }
  auto check_decor = [&](const std::set<Cell>& mine,
                         const std::set<Cell>& theirs, const char* what)
      -> std::optional<std::string> {
    for (const Cell& c : mine) {
      if (!d.start.cells.count(c))
        return std::string("start ") + what + " decoration off-stage: " + c;
      if (!theirs.count(c))
        return std::string("start ") + what +
               " decoration exceeds the ambient: " + c;
    }
    return std::nullopt;
  };
  if (auto err = check_decor(d.start.marked, amb.marked, "marked"))
    return fail(*err, -1);
  if (auto err = check_decor(d.start.thin, amb.thin, "thin"))
    return fail(*err, -1);
  if (auto err = check_decor(d.start.lean, amb.lean, "lean"))
    return fail(*err, -1);
  for (const Cell& c : d.start.thin)
    if (!d.start.lean.count(c))
      return fail("start thin triangle not lean: " + c, -1);

  Stage stage = d.start;
  for (int idx = 0; idx < static_cast<int>(d.steps.size()); ++idx) {
    const Step& st = d.steps[idx];
    try {
      DecoratedMap gen = instantiate(st.id, amb.under->cap);
      if (auto err = apply_step(amb, stage, gen, st.attach))
        return fail("step " + st.id.str() + ": " + *err, idx);
    } catch (const std::exception& e) {
      return fail("step " + st.id.str() + ": " + e.what(), idx);
    }
  }

  Stage goal = full_stage(amb);
  if (!(stage == goal)) {
    auto first_missing = [](const std::set<Cell>& have,
                            const std::set<Cell>& want) -> std::string {
      for (const Cell& c : want)
        if (!have.count(c)) return c;
      return "";
    };
    std::string miss;
    if (auto c = first_missing(stage.cells, goal.cells); !c.empty())
      miss = "cell " + c;
    else if (auto c = first_missing(stage.marked, goal.marked); !c.empty())
      miss = "marking of " + c;
    else if (auto c = first_missing(stage.thin, goal.thin); !c.empty())
      miss = "thin scaling of " + c;
    else if (auto c = first_missing(stage.lean, goal.lean); !c.empty())
      miss = "lean scaling of " + c;
    return fail("final stage does not reach the ambient; first missing: " +
                    miss,
                -1);
  }
  return VerifyResult{true, "", -1};
}

// --- Turning-point strings and staircase simplices -------------------------

std::string ZString::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < a.size(); ++i)
    out << (i ? "," : "") << a[i];
  out << "|";
  for (std::size_t i = 0; i < b.size(); ++i)
    out << (i ? "," : "") << b[i];
  out << ")";
  return out.str();
}

int z_compare(const ZString& lhs, const ZString& rhs, int n, int m) {
  std::size_t len = std::max(lhs.a.size(), rhs.a.size());
  for (std::size_t j = 0; j < len; ++j) {
    int al = j < lhs.a.size() ? lhs.a[j] : n;
    int ar = j < rhs.a.size() ? rhs.a[j] : n;
    // A smaller turning column at the first difference means greater.
    if (al != ar) return al < ar ? 1 : -1;
    int bl = j < lhs.b.size() ? lhs.b[j] : m;
    int br = j < rhs.b.size() ? rhs.b[j] : m;
    if (bl != br) return bl > br ? 1 : -1;
  }
  return 0;
}

std::vector<ZString> z_strings(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative grid size");
  std::vector<ZString> out;
  // a is a subset of {0..n-1}, b a subset of {1..m} of the same size.
  for (int ma = 0; ma < (1 << n); ++ma) {
    std::vector<int> a;
    for (int v = 0; v < n; ++v)
      if (ma & (1 << v)) a.push_back(v);
    for (int mb = 0; mb < (1 << m); ++mb) {
      std::vector<int> b;
      for (int v = 1; v <= m; ++v)
        if (mb & (1 << (v - 1))) b.push_back(v);
      if (a.size() == b.size()) out.push_back(ZString{a, b});
    }
  }
  std::sort(out.begin(), out.end(), [&](const ZString& x, const ZString& y) {
    return z_compare(x, y, n, m) < 0;
  });
  return out;
}

std::pair<int, int> staircase_vertex(int n, int m, const ZString& z, int ell) {
  if (ell < 0 || ell > n + m)
    throw std::invalid_argument("staircase vertex out of range");
  int k = static_cast<int>(z.a.size());
  auto a = [&](int r) { return r <= k ? z.a[r - 1] : n; };
  auto b = [&](int r) { return r == 0 ? 0 : (r <= k ? z.b[r - 1] : m); };
  if (ell <= a(1)) return {ell, 0};
  for (int r = 1; r <= k + 1; ++r) {
    if (a(r) + b(r - 1) < ell && ell <= a(r) + b(r)) return {a(r), ell - a(r)};
    if (a(r) + b(r) < ell && ell <= a(r + 1) + b(r)) return {ell - b(r), b(r)};
  }
  throw std::logic_error("staircase formula has a gap at " + z.str());
}

namespace {

// The simplex of a standard simplex spanned by a monotone vertex sequence.
SimplexRef seq_ref(const FiniteSSet& simp, const std::vector<int>& vs) {
  std::vector<int> distinct;
  DegeneracyWord w;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (vs[i] == vs[i + 1]) w.js.push_back(static_cast<int>(i));
  std::reverse(w.js.begin(), w.js.end());
  for (int v : vs)
    if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
  Cell c = simplex_cell(distinct);
  if (!simp.has_cell(c))
    throw std::invalid_argument("vertex sequence outside the simplex: " + c);
  return SimplexRef{std::move(w), c, static_cast<int>(distinct.size()) - 1};
}

}  // namespace

SSetMap simplex_into_product(const Product& p,
                             const std::vector<std::pair<int, int>>& verts) {
  int L = static_cast<int>(verts.size()) - 1;
  SSetPtr src = delta(L, p.object->cap);
  SSetMap out{src, p.object, {}};
  for (const auto& [c, k] : src->dim_of) {
    std::vector<int> xs, ys;
    for (int v : cell_digits(c)) {
      xs.push_back(verts[v].first);
      ys.push_back(verts[v].second);
    }
    out.assign[c] = product_ref(p, seq_ref(*p.x, xs), seq_ref(*p.y, ys));
  }
  if (auto err = out.validate())
    throw std::logic_error("staircase simplex invalid: " + *err);
  return out;
}

SSetMap path_simplex(const Product& p, const ZString& z) {
  int n = p.x->top_dim();
  int m = p.y->top_dim();
  std::vector<std::pair<int, int>> verts;
  for (int ell = 0; ell <= n + m; ++ell)
    verts.push_back(staircase_vertex(n, m, z, ell));
  return simplex_into_product(p, verts);
}

// --- The fill engine -------------------------------------------------------

namespace {

// Coface map skipping vertex i of the bigger simplex.
SSetMap coface_map(SSetPtr small, SSetPtr big, int i) {
  SSetMap f{small, big, {}};
  for (const auto& [c, k] : small->dim_of) {
    std::vector<int> digits = cell_digits(c);
    for (int& d : digits)
      if (d >= i) ++d;
    f.assign[c] = big->ref(simplex_cell(digits));
  }
  return f;
}

// Attaches one horn-shaped generator at a time along a simplex of the
// ambient, recursing into facets until every attachment has exactly one
// missing face.  Mirrors the inductive proofs of the generalized horn
// lemmas: delete the smallest missing inner index (largest below the top
// when the terminal face is missing), fill the corresponding facet, repeat.
struct FillEngine {
  MBPtr ambient;
  Stage& stage;
  std::vector<Step>& steps;
  int cap;

  void attach(const GeneratorId& id, const SSetMap& map) {
    DecoratedMap gen = instantiate(id, cap);
    if (auto err = apply_step(*ambient, stage, gen, map))
      throw std::logic_error("scripted step " + id.str() +
                             " rejected: " + *err);
    steps.push_back(Step{id, map});
  }

  // Builds the attachment of the collapsed-horn generator along a simplex
  // map whose initial edge collapses.
  SSetMap quotient_attach(const SSetMap& sigma, int M) {
    Pushout q = collapsed_simplex(M, cap);
    std::map<Cell, Cell> pre;
    for (const auto& [b, k] : q.in_b.src->dim_of) {
      const SimplexRef& img = q.in_b.assign.at(b);
      if (!img.degenerate()) pre[img.cell] = b;
    }
    SSetMap out{q.object, ambient->under, {}};
    for (const auto& [c, k] : q.object->dim_of)
      out.assign[c] = sigma.apply(sigma.src->ref(pre.at(c)));
    return out;
  }

  void fill(const SSetMap& sigma) {
    int M = sigma.src->top_dim();
    const Cell top = sigma.src->cells[M][0];
    SimplexRef image = sigma.apply(sigma.src->ref(top));
    if (image.degenerate())
      throw std::logic_error("cannot fill a degenerate simplex");
    if (stage.cells.count(image.cell)) return;
    bool collapsed = sigma.apply_vertex(simplex_cell({0})) ==
                         sigma.apply_vertex(simplex_cell({1})) &&
                     sigma.apply(sigma.src->ref(simplex_cell({0, 1})))
                         .degenerate();
    for (;;) {
      std::vector<int> missing;
      for (int j = 0; j <= M; ++j) {
        SimplexRef f = sigma.apply(sigma.src->faces.at(top)[j]);
        if (!f.degenerate() && !stage.cells.count(f.cell)) missing.push_back(j);
      }
      if (missing.empty())
        throw std::logic_error(
            "simplex missing but every facet present: " + image.cell);
      if (missing.size() == 1) {
        int i = missing[0];
        if (i == 0 && collapsed) {
          attach(GeneratorId{Family::A3, M}, quotient_attach(sigma, M));
        } else if (i > 0 && i < M) {
          attach(GeneratorId{Family::A1, M, i}, sigma);
        } else if (i == M) {
          attach(GeneratorId{Family::A4, M}, sigma);
        } else {
          throw std::logic_error("missing facet " + std::to_string(i) +
                                 " of " + image.cell + " is not fillable");
        }
        return;
      }
      int i1;
      if (missing.front() == 0 && collapsed) {
        i1 = missing[1];  // smallest nonzero
      } else if (missing.back() == M) {
        i1 = missing[missing.size() - 2];  // largest below the top
      } else {
        i1 = missing.front();
      }
      fill(coface_map(delta(M - 1, cap), sigma.src, i1).then(sigma));
    }
  }
};

bool strictly_separated(const std::vector<int>& idx) {
  for (std::size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j + 1] <= idx[j] + 1) return false;
  return true;
}

}  // namespace

// --- Scripted derivations --------------------------------------------------

Derivation derive_indI(int m, const std::vector<int>& indices, int cap) {
  if (m < 2 || m > cap || indices.empty() || !strictly_separated(indices) ||
      indices.front() <= 0 || indices.back() >= m)
    throw std::invalid_argument("generalized inner horn parameters invalid");
  SSetPtr d = delta(m, cap);
  std::set<Cell> t;
  for (int i : indices) t.insert(simplex_cell({i - 1, i, i + 1}));
  MBPtr amb = decorate(d, {}, t, t).object;

  const Cell top = d->cells[m][0];
  std::set<Cell> gens;
  for (int j = 0; j <= m; ++j)
    if (std::find(indices.begin(), indices.end(), j) == indices.end())
      gens.insert(d->faces.at(top)[j].cell);
  Subcomplex horn = span_subcomplex(d, gens);
  std::set<Cell> start_cells;
  for (const auto& [c, k] : horn.object->dim_of) start_cells.insert(c);

  Derivation out{amb, restrict_stage(*amb, start_cells), {}};
  Stage work = out.start;
  FillEngine run{amb, work, out.steps, cap};
  run.fill(SSetMap::identity(d));
  return out;
}

Derivation derive_indII(int m, const std::vector<int>& indices, int cap) {
  if (m < 2 || m > cap || !strictly_separated(indices) ||
      (!indices.empty() && (indices.front() <= 1 || indices.back() >= m)))
    throw std::invalid_argument("generalized collapsed horn parameters invalid");
  Pushout q = collapsed_simplex(m, cap);
  auto cls = [&](const Cell& c) {
    const SimplexRef& img = q.in_b.assign.at(c);
    if (img.degenerate())
      throw std::logic_error("decorated cell collapses: " + c);
    return img.cell;
  };
  std::set<Cell> t, lean;
  for (int i : indices) {
    Cell c = cls(simplex_cell({i - 1, i, i + 1}));
    t.insert(c);
    lean.insert(c);
  }
  lean.insert(cls(simplex_cell({0, 1, m})));
  MBPtr amb = decorate(q.object, {}, t, lean).object;

  const Cell top = q.in_b.src->cells[m][0];
  std::set<Cell> gens;
  for (int j = 1; j <= m; ++j)
    if (std::find(indices.begin(), indices.end(), j) == indices.end())
      gens.insert(q.in_b.assign.at(q.in_b.src->faces.at(top)[j].cell).cell);
  Subcomplex horn = span_subcomplex(q.object, gens);
  std::set<Cell> start_cells;
  for (const auto& [c, k] : horn.object->dim_of) start_cells.insert(c);

  Derivation out{amb, restrict_stage(*amb, start_cells), {}};
  Stage work = out.start;
  FillEngine run{amb, work, out.steps, cap};
  run.fill(q.in_b);
  return out;
}

namespace {

// Shared driver for the staircase filtrations over a product whose second
// factor is a generator target; `in_start` decides membership in the initial
// stage from the two legs of a product cell.
Derivation staircase_derivation(
    const MBProduct& P, int n, int m, int cap,
    const std::function<bool(const SimplexRef&, const SimplexRef&)>& in_start,
    const std::function<SSetMap(const ZString&)>& simplex_of) {
  std::set<Cell> start_cells;
  for (const auto& [id, legs] : P.raw.components)
    if (in_start(legs.first, legs.second)) start_cells.insert(id);

  Derivation out{P.object, restrict_stage(*P.object, start_cells), {}};
  Stage work = out.start;
  FillEngine run{P.object, work, out.steps, cap};
  for (const ZString& z : z_strings(n, m)) run.fill(simplex_of(z));
  return out;
}

}  // namespace

Derivation derive_shuffle(int n, int m, int i, int cap) {
  if (n < 1 || m < 2 || i <= 0 || i >= m || n + m > cap)
    throw std::invalid_argument("staircase parameters out of range");
  DecoratedMap g = instantiate(GeneratorId{Family::A1, m, i}, cap);
  MBProduct P = product_mb(flat(delta(n, cap)), g.dst);

  std::set<Cell> horn_cells;
  for (const auto& [c, k] : g.src->under->dim_of) horn_cells.insert(c);
  Cell top_n = P.raw.x->cells[n][0];
  return staircase_derivation(
      P, n, m, cap,
      [&, top_n, horn_cells](const SimplexRef& rx, const SimplexRef& ry) {
        return rx.cell != top_n || horn_cells.count(ry.cell) != 0;
      },
      [&](const ZString& z) { return path_simplex(P.raw, z); });
}

Derivation derive_nightmare(int n, int m, int cap) {
  if (n < 1 || m < 2 || n + m > cap)
    throw std::invalid_argument("staircase parameters out of range");
  DecoratedMap g = instantiate(GeneratorId{Family::A3, m}, cap);
  MBProduct P = product_mb(flat(delta(n, cap)), g.dst);
  Pushout q = collapsed_simplex(m, cap);
  Product nm = product(P.raw.x, q.in_b.src);
  SSetMap rho =
      pair_into_product(nm.proj1, nm.proj2.then(q.in_b), P.raw);

  std::set<Cell> horn_cells;
  for (const auto& [c, k] : g.src->under->dim_of) horn_cells.insert(c);
  Cell top_n = P.raw.x->cells[n][0];
  return staircase_derivation(
      P, n, m, cap,
      [&, top_n, horn_cells](const SimplexRef& rx, const SimplexRef& ry) {
        return rx.cell != top_n || horn_cells.count(ry.cell) != 0;
      },
      [&](const ZString& z) { return path_simplex(nm, z).then(rho); });
}

Derivation derive_dual_nightmare(int n, int m, int cap) {
  if (n < 1 || m < 2 || n + m > cap)
    throw std::invalid_argument("staircase parameters out of range");
  DecoratedMap g = instantiate(GeneratorId{Family::A4, m}, cap);
  MBProduct P = product_mb(flat(delta(n, cap)), g.dst);

  std::set<Cell> horn_cells;
  for (const auto& [c, k] : g.src->under->dim_of) horn_cells.insert(c);
  Cell top_n = P.raw.x->cells[n][0];
  return staircase_derivation(
      P, n, m, cap,
      [&, top_n, horn_cells](const SimplexRef& rx, const SimplexRef& ry) {
        return rx.cell != top_n || horn_cells.count(ry.cell) != 0;
      },
      [&](const ZString& z) {
        // Point reflection of the staircase: the collapsed initial edges of
        // the mirror become marked terminal edges here.
        std::vector<std::pair<int, int>> verts;
        for (int ell = 0; ell <= n + m; ++ell) {
          auto [x, y] = staircase_vertex(n, m, z, n + m - ell);
          verts.emplace_back(n - x, m - y);
        }
        return simplex_into_product(P.raw, verts);
      });
}

Derivation derive_prism(int n, int cap) {
  if (n < 1 || n + 1 > cap)
    throw std::invalid_argument("prism parameters out of range");
  MBProduct P = product_mb(flat(delta(n, cap)), sharp(delta(1, cap)));
  Cell top_n = P.raw.x->cells[n][0];

  std::set<Cell> start_cells;
  for (const auto& [id, legs] : P.raw.components)
    if (legs.first.cell != top_n || legs.second.cell == "1")
      start_cells.insert(id);

  Derivation out{P.object, restrict_stage(*P.object, start_cells), {}};
  Stage work = out.start;
  FillEngine run{P.object, work, out.steps, cap};
  for (int k = 0; k <= n; ++k) {
    std::vector<std::pair<int, int>> verts;
    for (int i = 0; i <= k; ++i) verts.emplace_back(i, 0);
    for (int i = k; i <= n; ++i) verts.emplace_back(i, 1);
    run.fill(simplex_into_product(P.raw, verts));
  }
  return out;
}

// --- Named subcomplexes ----------------------------------------------------

namespace {

using VertexSet = std::set<int>;

NamedSubcomplex cut_subcomplex(
    int N, const std::set<Cell>& marked, const std::set<Cell>& thin,
    const std::set<Cell>& lean,
    const std::function<bool(const VertexSet&)>& member, int cap) {
  if (N > cap) throw std::invalid_argument("named subcomplex above the cap");
  SSetPtr d = delta(N, cap);
  MBPtr amb = decorate(d, marked, thin, lean).object;
  std::set<Cell> cells;
  for (const auto& [c, k] : d->dim_of) {
    std::vector<int> digits = cell_digits(c);
    if (member(VertexSet(digits.begin(), digits.end()))) cells.insert(c);
  }
  if (cells.empty()) throw std::invalid_argument("named subcomplex is empty");
  Subcomplex sub = span_subcomplex(d, cells);
  MBPtr obj = restrict_decorations(sub.object, *amb);
  return NamedSubcomplex{obj, DecoratedMap{sub.inclusion, obj, amb}};
}

}  // namespace

NamedSubcomplex named_subcomplex(const std::string& name,
                                 const std::vector<int>& params, int cap) {
  auto skip = [](const VertexSet& s, int v) { return s.count(v) == 0; };

  if (name == "R" || name == "L" || name == "P" || name == "M" ||
      name == "T_ext") {
    if (params.size() != 2)
      throw std::invalid_argument("expected parameters (n, k)");
    int n = params[0], k = params[1];
    if (k < 1 || k >= n)
      throw std::invalid_argument("named subcomplex parameters out of range");
    int N = n + 1;
    // Scale the triangles inside [0, k+1] and the triangles {k+1, k+2, j}.
    std::set<Cell> thin;
    SSetPtr d = delta(N, cap);
    for (const Cell& c : d->cells.size() > 2 ? d->cells[2]
                                             : std::vector<Cell>{}) {
      std::vector<int> digits = cell_digits(c);
      if (digits.back() <= k + 1) thin.insert(c);
    }
    for (int j = k + 3; j <= N; ++j)
      thin.insert(simplex_cell({k + 1, k + 2, j}));
    if (name == "T_ext") thin.insert(simplex_cell({k, k + 1, k + 2}));

    auto in_triangle = [k, N](const VertexSet& s) {
      // Factors through a triangle {k+1, k+2, j} with k+2 < j <= N; no such
      // triangle exists when k + 3 > N.
      if (s.size() > 3 || k + 3 > N) return false;
      VertexSet rest;
      for (int v : s)
        if (v != k + 1 && v != k + 2) rest.insert(v);
      if (rest.empty()) return true;
      return rest.size() == 1 && *rest.begin() > k + 2 && *rest.begin() <= N;
    };
    std::function<bool(const VertexSet&)> member;
    if (name == "R")
      member = [=](const VertexSet& s) {
        return skip(s, k + 1) || skip(s, N) || in_triangle(s);
      };
    else if (name == "L") {
      // Only used below the two easy cases, where everything in [0, k+2]
      // skips the top vertex and the subcomplex stays inside R.
      if (n - k < 3)
        throw std::invalid_argument("L requires n - k >= 3");
      member = [=](const VertexSet& s) {
        return skip(s, k + 1) || in_triangle(s) || *s.rbegin() <= k + 2;
      };
    }
    else if (name == "P" || name == "M" || name == "T_ext") {
      auto in_p = [=](const VertexSet& s) {
        if (skip(s, N) || in_triangle(s)) return true;
        if (!skip(s, k + 1)) return false;
        for (int i = 1; i <= N; ++i)
          if (i != k + 1 && skip(s, i)) return true;
        return false;
      };
      if (name == "P")
        member = in_p;
      else if (name == "M")
        member = [=](const VertexSet& s) {
          return skip(s, N) || in_triangle(s);
        };
      else
        member = [=](const VertexSet& s) {
          if (in_p(s)) return true;
          for (int i = 1; i <= k; ++i)
            if (skip(s, i)) return true;
          for (int j = k + 2; j <= n; ++j)
            if (skip(s, j)) return true;
          return false;
        };
    }
    return cut_subcomplex(N, {}, thin, thin, member, cap);
  }

  if (name == "S_ext" || name == "B" || name == "dB") {
    if (params.size() != 2)
      throw std::invalid_argument("expected parameters (m, j)");
    int m = params[0], j = params[1];
    // S_ext lives in Delta^m, B and dB in Delta^{m+1}.
    int N = name == "S_ext" ? m : m + 1;
    if (j < 0 || j + 2 > N)
      throw std::invalid_argument("named subcomplex parameters out of range");
    std::set<Cell> marked = {simplex_cell({j + 1, j + 2})};
    std::set<Cell> lean, thin;
    SSetPtr d = delta(N, cap);
    for (const Cell& c : d->cells.size() > 2 ? d->cells[2]
                                             : std::vector<Cell>{}) {
      VertexSet s;
      for (int v : cell_digits(c)) s.insert(v);
      if (s.count(j + 1) && s.count(j + 2)) lean.insert(c);
    }
    if (j + 3 <= N) thin.insert(simplex_cell({j + 1, j + 2, j + 3}));

    std::function<bool(const VertexSet&)> member;
    if (name == "S_ext")
      member = [=](const VertexSet& s) {
        for (int v = 0; v <= N; ++v)
          if (v != j + 1 && v != j + 2 && skip(s, v)) return true;
        return skip(s, j + 1) && skip(s, j + 2);
      };
    else if (name == "B")
      member = [=](const VertexSet& s) {
        if (skip(s, j + 1)) return true;
        for (int v : s)
          if (v != j + 1 && v != j + 2) return false;
        return true;
      };
    else
      member = [=](const VertexSet& s) {
        if (skip(s, j + 1)) {
          for (int v = 0; v <= N; ++v)
            if (v != j + 1 && skip(s, v)) return true;
          return false;
        }
        for (int v : s)
          if (v != j + 1 && v != j + 2) return false;
        return true;
      };
    return cut_subcomplex(N, marked, thin, lean, member, cap);
  }

  if (name == "Lambda_vec") {
    if (params.size() < 2)
      throw std::invalid_argument("expected parameters (m, indices...)");
    int m = params[0];
    std::vector<int> idx(params.begin() + 1, params.end());
    if (m < 2 || !strictly_separated(idx) || idx.front() <= 0 ||
        idx.back() >= m)
      throw std::invalid_argument("named subcomplex parameters out of range");
    std::set<Cell> thin;
    for (int i : idx) thin.insert(simplex_cell({i - 1, i, i + 1}));
    auto member = [=](const VertexSet& s) {
      for (int v = 0; v <= m; ++v)
        if (std::find(idx.begin(), idx.end(), v) == idx.end() && skip(s, v))
          return true;
      return false;
    };
    return cut_subcomplex(m, {}, thin, thin, member, cap);
  }

  throw std::invalid_argument("unknown named subcomplex: " + name);
}

// --- Automatic search ------------------------------------------------------

Stage image_stage(const DecoratedMap& j) {
  Stage start;
  for (const auto& [c, k] : j.src->under->dim_of) {
    const SimplexRef& img = j.map.assign.at(c);
    if (!img.degenerate()) start.cells.insert(img.cell);
  }
  auto push_decor = [&](const std::set<Cell>& src_set, std::set<Cell>& out) {
    for (const Cell& c : src_set) {
      const SimplexRef& img = j.map.assign.at(c);
      if (!img.degenerate()) out.insert(img.cell);
    }
  };
  push_decor(j.src->marked, start.marked);
  push_decor(j.src->thin, start.thin);
  push_decor(j.src->lean, start.lean);
  for (const Cell& c : start.thin) start.lean.insert(c);
  return start;
}

AutoResult derive_auto(const DecoratedMap& j, long budget) {
  if (!j.is_mono())
    throw std::invalid_argument("automatic derivation needs a monomorphism");
  MBPtr amb = j.dst;
  int cap = amb->under->cap;
  int top = amb->under->top_dim();

  Stage start = image_stage(j);

  std::vector<GeneratorId> candidates = anodyne_generators(top);
  candidates.push_back(GeneratorId{Family::TH});

  AutoResult res;
  Stage stage = start;
  Stage goal = full_stage(*amb);
  std::vector<Step> steps;
  // A generator adds cells when its target has cells outside its image.
  auto adds_cells = [](const DecoratedMap& gen) {
    std::set<Cell> jimage;
    for (const auto& [a, k] : gen.src->under->dim_of) {
      SimplexRef img = gen.map.apply(gen.src->under->ref(a));
      if (!img.degenerate()) jimage.insert(img.cell);
    }
    for (const auto& [b, k] : gen.dst->under->dim_of)
      if (!jimage.count(b)) return true;
    return false;
  };
  // Attachment maps only depend on the ambient, so enumerate them once.
  std::map<GeneratorId, MapEnumeration> enumerated;
  while (!(stage == goal)) {
    bool progressed = false;
    for (const GeneratorId& id : candidates) {
      DecoratedMap gen;
      try {
        gen = instantiate(id, cap);
      } catch (const std::invalid_argument&) {
        continue;  // generator does not fit under this cap
      }
      // Cell-adding steps cannot apply once every cell is present.
      if (stage.cells == goal.cells && adds_cells(gen)) continue;
      auto found = enumerated.find(id);
      if (found == enumerated.end()) {
        std::size_t limit =
            static_cast<std::size_t>(std::max<long>(budget, 0)) + 1;
        found = enumerated
                    .emplace(id, enumerate_maps(gen.dst->under, amb->under, {},
                                                limit))
                    .first;
      }
      for (const SSetMap& attach : found->second.maps) {
        if (++res.examined > budget) return res;
        Stage trial = stage;
        if (apply_step(*amb, trial, gen, attach)) continue;
        if (trial == stage) continue;  // no progress
        stage = std::move(trial);
        steps.push_back(Step{id, attach});
        progressed = true;
        break;
      }
      if (progressed) break;
    }
    if (!progressed) return res;
  }
  res.derivation = Derivation{amb, std::move(start), std::move(steps)};
  return res;
}

}  // namespace mbs
