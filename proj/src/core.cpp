#include "mbs/core.hpp"

#include <sstream>

namespace mbs {

// --- degeneracy word algebra ---------------------------------------------

DegeneracyWord normalize_word(std::vector<int> raw) {
  // Bubble the sequence (outermost first) into strictly decreasing order
  // using s_i s_j = s_{j+1} s_i for i <= j.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < raw.size(); ++t) {
      if (raw[t] <= raw[t + 1]) {
        int a = raw[t], b = raw[t + 1];
        raw[t] = b + 1;
        raw[t + 1] = a;
        changed = true;
      }
    }
  }
  return DegeneracyWord{std::move(raw)};
}

DegeneracyWord prepend_degeneracy(int i, const DegeneracyWord& w) {
  std::vector<int> raw;
  raw.reserve(w.js.size() + 1);
  raw.push_back(i);
  raw.insert(raw.end(), w.js.begin(), w.js.end());
  return normalize_word(std::move(raw));
}

std::string SimplexRef::str() const {
  if (word.empty()) return cell;
  std::ostringstream os;
  for (int j : word.js) os << 's' << j << '.';
  os << cell;
  return os.str();
}

// --- FiniteSSet ----------------------------------------------------------

void FiniteSSet::add_cell(int k, const Cell& c, std::vector<SimplexRef> fs) {
  if (k >= static_cast<int>(cells.size())) cells.resize(k + 1);
  cells[k].push_back(c);
  dim_of[c] = k;
  if (k >= 1) {
    assert(static_cast<int>(fs.size()) == k + 1);
    faces[c] = std::move(fs);
  }
}

SimplexRef FiniteSSet::const_ref(const Cell& vertex, int k) const {
  std::vector<int> w;
  for (int j = k - 1; j >= 0; --j) w.push_back(j);
  return SimplexRef{DegeneracyWord{std::move(w)}, vertex, 0};
}

SimplexRef FiniteSSet::face(const SimplexRef& r, int i) const {
  assert(r.dim() >= 1 && i >= 0 && i <= r.dim());
  std::vector<int> prefix;
  int cur = i;
  std::size_t t = 0;
  const auto& js = r.word.js;
  for (; t < js.size(); ++t) {
    int j = js[t];
    if (cur < j) {
      prefix.push_back(j - 1);
    } else if (cur == j || cur == j + 1) {
      // d_i s_j = id: the face is the rest of the word on the same cell.
      std::vector<int> rest(prefix);
      rest.insert(rest.end(), js.begin() + t + 1, js.end());
      return SimplexRef{normalize_word(std::move(rest)), r.cell, r.cell_dim};
    } else {
      prefix.push_back(j);
      cur -= 1;
    }
  }
  // The face operator reached the underlying cell.
  const SimplexRef& fr = faces.at(r.cell)[cur];
  std::vector<int> total(prefix);
  total.insert(total.end(), fr.word.js.begin(), fr.word.js.end());
  return SimplexRef{normalize_word(std::move(total)), fr.cell, fr.cell_dim};
}

SimplexRef FiniteSSet::degeneracy(const SimplexRef& r, int i) const {
  assert(i >= 0 && i <= r.dim());
  return SimplexRef{prepend_degeneracy(i, r.word), r.cell, r.cell_dim};
}

std::vector<int> FiniteSSet::degeneracy_support(const SimplexRef& r) const {
  std::vector<int> out;
  if (r.dim() == 0) return out;
  for (int i = 0; i + 1 <= r.dim(); ++i) {
    SimplexRef y = face(r, i + 1);
    if (degeneracy(y, i) == r) out.push_back(i);
  }
  return out;
}

Cell FiniteSSet::vertex(const SimplexRef& r, int i) const {
  SimplexRef v = r;
  int target = i;
  while (v.dim() > 0) {
    if (target > 0) {
      v = face(v, 0);
      --target;
    } else {
      v = face(v, v.dim());
    }
  }
  return v.cell;
}

std::vector<Cell> FiniteSSet::vertices(const SimplexRef& r) const {
  std::vector<Cell> vs;
  vs.reserve(r.dim() + 1);
  for (int i = 0; i <= r.dim(); ++i) vs.push_back(vertex(r, i));
  return vs;
}

namespace {

// All strictly decreasing words of length `len` producing dimension `k`
// when applied to a cell of dimension `d` (so len = k - d).  Entry t
// (outermost first, 0-based) must satisfy js[t] <= d + (len - 1 - t).
void gen_words(int len, int d, int pos, int max_allowed,
               std::vector<int>& acc, std::vector<DegeneracyWord>& out) {
  if (pos == len) {
    out.push_back(DegeneracyWord{acc});
    return;
  }
  int bound = std::min(max_allowed, d + (len - 1 - pos));
  for (int j = bound; j >= len - 1 - pos; --j) {
    acc.push_back(j);
    gen_words(len, d, pos + 1, j - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<SimplexRef> FiniteSSet::all_simplices(int k) const {
  std::vector<SimplexRef> out;
  for (int d = 0; d <= std::min<int>(k, top_dim()); ++d) {
    int len = k - d;
    std::vector<DegeneracyWord> words;
    std::vector<int> acc;
    gen_words(len, d, 0, k - 1, acc, words);
    for (const Cell& c : cells[d])
      for (const auto& w : words) out.push_back(SimplexRef{w, c, d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> FiniteSSet::validate() const {
  for (int k = 1; k <= top_dim(); ++k) {
    for (const Cell& c : cells[k]) {
      auto it = faces.find(c);
      if (it == faces.end()) return "missing face table for " + c;
      if (static_cast<int>(it->second.size()) != k + 1)
        return "wrong face count for " + c;
      for (const SimplexRef& fr : it->second) {
        if (!has_cell(fr.cell)) return "unresolved face cell in " + c;
        if (fr.dim() != k - 1) return "face dimension mismatch in " + c;
        if (dim_of.at(fr.cell) != fr.cell_dim)
          return "face cell dimension mismatch in " + c;
      }
      if (k >= 2) {
        SimplexRef r = ref(c);
        for (int j = 1; j <= k; ++j)
          for (int i = 0; i < j; ++i)
            if (face(face(r, j), i) != face(face(r, i), j - 1))
              return "simplicial identity fails on " + c;
      }
    }
  }
  return std::nullopt;
}

// --- SSetMap -------------------------------------------------------------

SimplexRef SSetMap::apply(const SimplexRef& r) const {
  const SimplexRef& img = assign.at(r.cell);
  std::vector<int> total(r.word.js);
  total.insert(total.end(), img.word.js.begin(), img.word.js.end());
  return SimplexRef{normalize_word(std::move(total)), img.cell, img.cell_dim};
}

std::optional<std::string> SSetMap::validate() const {
  for (int k = 0; k <= src->top_dim(); ++k) {
    for (const Cell& c : src->cells[k]) {
      auto it = assign.find(c);
      if (it == assign.end()) return "unassigned cell " + c;
      if (it->second.dim() != k) return "image dimension mismatch at " + c;
      if (!dst->has_cell(it->second.cell))
        return "image cell not in target at " + c;
      if (k >= 1) {
        SimplexRef r = src->ref(c);
        for (int i = 0; i <= k; ++i)
          if (dst->face(apply(r), i) != apply(src->face(r, i)))
            return "face commutation fails at " + c;
      }
    }
  }
  return std::nullopt;
}

bool SSetMap::is_mono() const {
  std::set<Cell> seen;
  for (const auto& [c, img] : assign) {
    if (img.degenerate()) return false;
    if (!seen.insert(img.cell).second) return false;
  }
  return true;
}

bool SSetMap::is_iso() const {
  if (!is_mono()) return false;
  std::size_t n_src = 0, n_dst = 0;
  for (const auto& layer : src->cells) n_src += layer.size();
  for (const auto& layer : dst->cells) n_dst += layer.size();
  return n_src == n_dst;
}

SSetMap SSetMap::identity(SSetPtr x) {
  SSetMap m{x, x, {}};
  for (const auto& [c, k] : x->dim_of) m.assign[c] = x->ref(c);
  return m;
}

SSetMap SSetMap::then(const SSetMap& g) const {
  SSetMap m{src, g.dst, {}};
  for (const auto& [c, img] : assign) m.assign[c] = g.apply(img);
  return m;
}

// --- standard simplices --------------------------------------------------

Cell simplex_cell(const std::vector<int>& verts) {
  std::string s;
  for (int v : verts) {
    assert(v >= 0 && v <= 9);
    s.push_back(static_cast<char>('0' + v));
  }
  return s;
}

FiniteSSet standard(int n, int cap) {
  if (n > cap)
    throw std::invalid_argument("standard simplex dimension exceeds cap");
  FiniteSSet x;
  x.cap = cap;
  // Enumerate subsets of {0..n} by size.
  std::vector<std::vector<std::vector<int>>> by_size(n + 2);
  std::vector<int> acc;
  auto rec = [&](auto&& self, int next) -> void {
    if (!acc.empty()) by_size[acc.size()].push_back(acc);
    for (int v = next; v <= n; ++v) {
      acc.push_back(v);
      self(self, v + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0);
  for (int size = 1; size <= n + 1; ++size) {
    for (const auto& verts : by_size[size]) {
      int k = size - 1;
      std::vector<SimplexRef> fs;
      if (k >= 1) {
        for (int i = 0; i <= k; ++i) {
          std::vector<int> fv(verts);
          fv.erase(fv.begin() + i);
          fs.push_back(SimplexRef{{}, simplex_cell(fv), k - 1});
        }
      }
      x.add_cell(k, simplex_cell(verts), std::move(fs));
    }
  }
  return x;
}

// --- subcomplexes --------------------------------------------------------

namespace {

Subcomplex build_subcomplex(SSetPtr x, std::set<Cell> closed) {
  // Close under faces.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Cell> pending(closed.begin(), closed.end());
    for (const Cell& c : pending) {
      if (x->dim(c) == 0) continue;
      for (const SimplexRef& fr : x->faces.at(c))
        if (closed.insert(fr.cell).second) grew = true;
    }
  }
  auto sub = std::make_shared<FiniteSSet>();
  sub->cap = x->cap;
  for (int k = 0; k <= x->top_dim(); ++k)
    for (const Cell& c : x->cells[k])
      if (closed.count(c))
        sub->add_cell(k, c, k >= 1 ? x->faces.at(c) : std::vector<SimplexRef>{});
  SSetMap inc{sub, x, {}};
  for (const Cell& c : closed) inc.assign[c] = x->ref(c);
  return Subcomplex{sub, std::move(inc)};
}

}  // namespace

Subcomplex span_subcomplex(SSetPtr x, const std::set<Cell>& generators) {
  for (const Cell& c : generators)
    if (!x->has_cell(c))
      throw std::invalid_argument("span generator not a cell: " + c);
  return build_subcomplex(x, generators);
}

Subcomplex boundary_subcomplex(SSetPtr x) {
  int n = x->top_dim();
  std::set<Cell> gens;
  for (int k = 0; k < n; ++k)
    for (const Cell& c : x->cells[k]) gens.insert(c);
  return build_subcomplex(x, std::move(gens));
}

Subcomplex horn_subcomplex(SSetPtr x, int i) {
  int n = x->top_dim();
  if (n < 1 || static_cast<int>(x->cells[n].size()) != 1)
    throw std::invalid_argument("horn requires a standard simplex");
  if (i < 0 || i > n) throw std::invalid_argument("horn index out of range");
  const Cell top = x->cells[n][0];
  const Cell omit = x->faces.at(top)[i].cell;
  std::set<Cell> gens;
  for (int j = 0; j <= n; ++j) {
    const Cell f = x->faces.at(top)[j].cell;
    if (f != omit) gens.insert(f);
  }
  return build_subcomplex(x, std::move(gens));
}

// --- products ------------------------------------------------------------

Cell product_cell(const SimplexRef& rx, const SimplexRef& ry) {
  return "(" + rx.str() + "*" + ry.str() + ")";
}

namespace {

struct PairCore {
  DegeneracyWord word;
  SimplexRef rx, ry;
};

PairCore strip_pair(const FiniteSSet& X, const FiniteSSet& Y, SimplexRef rx,
                    SimplexRef ry) {
  std::vector<int> outer;
  for (;;) {
    std::vector<int> dx = X.degeneracy_support(rx);
    std::vector<int> dy = Y.degeneracy_support(ry);
    std::vector<int> common;
    std::set_intersection(dx.begin(), dx.end(), dy.begin(), dy.end(),
                          std::back_inserter(common));
    if (common.empty()) break;
    int i = common.back();
    outer.push_back(i);
    rx = X.face(rx, i + 1);
    ry = Y.face(ry, i + 1);
  }
  return PairCore{normalize_word(std::move(outer)), std::move(rx),
                  std::move(ry)};
}

}  // namespace

Product product(SSetPtr xp, SSetPtr yp) {
  const FiniteSSet& X = *xp;
  const FiniteSSet& Y = *yp;
  auto obj = std::make_shared<FiniteSSet>();
  obj->cap = std::min(X.cap, Y.cap);
  Product p;
  p.x = xp;
  p.y = yp;
  int full_dim = X.top_dim() + Y.top_dim();
  int build_dim = std::min(full_dim, obj->cap);
  obj->truncated = full_dim > obj->cap;

  std::map<Cell, std::pair<SimplexRef, SimplexRef>> comps;
  // Keyed lookup for face normalization.
  std::map<std::pair<std::string, std::string>, Cell> lookup;

  for (int k = 0; k <= build_dim; ++k) {
    std::vector<SimplexRef> xs = X.all_simplices(k);
    std::vector<SimplexRef> ys = Y.all_simplices(k);
    for (const SimplexRef& rx : xs) {
      std::vector<int> dx = X.degeneracy_support(rx);
      for (const SimplexRef& ry : ys) {
        std::vector<int> dy = Y.degeneracy_support(ry);
        std::vector<int> common;
        std::set_intersection(dx.begin(), dx.end(), dy.begin(), dy.end(),
                              std::back_inserter(common));
        if (!common.empty()) continue;  // jointly degenerate
        Cell id = product_cell(rx, ry);
        std::vector<SimplexRef> fs;
        if (k >= 1) {
          for (int i = 0; i <= k; ++i) {
            PairCore core =
                strip_pair(X, Y, X.face(rx, i), Y.face(ry, i));
            Cell target =
                lookup.at({core.rx.str(), core.ry.str()});
            fs.push_back(SimplexRef{core.word, target, k - 1 - core.word.size()});
          }
        }
        obj->add_cell(k, id, std::move(fs));
        comps[id] = {rx, ry};
        lookup[{rx.str(), ry.str()}] = id;
      }
    }
  }
  p.object = obj;
  p.components = std::move(comps);
  p.proj1 = SSetMap{obj, xp, {}};
  p.proj2 = SSetMap{obj, yp, {}};
  for (const auto& [id, legs] : p.components) {
    p.proj1.assign[id] = legs.first;
    p.proj2.assign[id] = legs.second;
  }
  return p;
}

SimplexRef product_ref(const Product& p, SimplexRef rx, SimplexRef ry) {
  PairCore core = strip_pair(*p.x, *p.y, std::move(rx), std::move(ry));
  Cell id = product_cell(core.rx, core.ry);
  if (!p.object->has_cell(id))
    throw std::invalid_argument("product simplex above cap: " + id);
  return SimplexRef{core.word, id, p.object->dim(id)};
}

SSetMap pair_into_product(const SSetMap& f, const SSetMap& g,
                          const Product& p) {
  assert(f.src == g.src);
  SSetMap m{f.src, p.object, {}};
  for (const auto& [c, k] : f.src->dim_of) {
    SimplexRef r = f.src->ref(c);
    m.assign[c] = product_ref(p, f.apply(r), g.apply(r));
  }
  return m;
}

// --- pushouts ------------------------------------------------------------

namespace {

struct UnionFind {
  std::map<std::string, std::string> parent;

  void add(const std::string& k) {
    parent.emplace(k, k);
  }
  std::string find(const std::string& k) {
    std::string root = k;
    while (parent.at(root) != root) root = parent.at(root);
    // Path compression.
    std::string cur = k;
    while (parent.at(cur) != root) {
      std::string next = parent.at(cur);
      parent[cur] = root;
      cur = next;
    }
    return root;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // Smaller string wins, which makes class names canonical.
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
};

std::string node_key(char tag, const SimplexRef& r) {
  return std::string(1, tag) + ":" + r.str();
}

}  // namespace

Pushout pushout(const SSetMap& f, const SSetMap& g) {
  assert(f.src == g.src);
  const FiniteSSet& A = *f.src;
  const FiniteSSet& B = *f.dst;
  const FiniteSSet& C = *g.dst;
  int cap = std::min(B.cap, C.cap);
  int build_dim = std::min({cap, std::max(B.top_dim(), C.top_dim())});

  UnionFind uf;
  // side refs by key
  std::map<std::string, std::pair<char, SimplexRef>> nodes;
  for (int k = 0; k <= build_dim; ++k) {
    for (const SimplexRef& r : B.all_simplices(k)) {
      std::string key = node_key('B', r);
      uf.add(key);
      nodes[key] = {'B', r};
    }
    for (const SimplexRef& r : C.all_simplices(k)) {
      std::string key = node_key('C', r);
      uf.add(key);
      nodes[key] = {'C', r};
    }
    for (const SimplexRef& r : A.all_simplices(k))
      uf.unite(node_key('B', f.apply(r)), node_key('C', g.apply(r)));
  }

  auto side = [&](char tag) -> const FiniteSSet& { return tag == 'B' ? B : C; };
  auto cls_face = [&](const std::string& root, int i) {
    const auto& [tag, r] = nodes.at(root);
    return uf.find(node_key(tag, side(tag).face(r, i)));
  };
  auto cls_degen = [&](const std::string& root, int i) {
    const auto& [tag, r] = nodes.at(root);
    return uf.find(node_key(tag, side(tag).degeneracy(r, i)));
  };

  auto obj = std::make_shared<FiniteSSet>();
  obj->cap = cap;
  obj->truncated = B.truncated || C.truncated ||
                   std::max(B.top_dim(), C.top_dim()) > cap;
  // Normal form of each class root.
  std::map<std::string, SimplexRef> normal;

  for (int k = 0; k <= build_dim; ++k) {
    std::set<std::string> roots;
    for (const auto& [key, node] : nodes)
      if (node.second.dim() == k) roots.insert(uf.find(key));
    for (const std::string& root : roots) {
      bool degen = false;
      for (int i = k - 1; i >= 0 && !degen; --i) {
        std::string y = cls_face(root, i + 1);
        if (cls_degen(y, i) == root) {
          const SimplexRef& base = normal.at(y);
          normal[root] = SimplexRef{prepend_degeneracy(i, base.word),
                                    base.cell, base.cell_dim};
          degen = true;
        }
      }
      if (degen) continue;
      // New nondegenerate cell named after the class representative.
      std::vector<SimplexRef> fs;
      for (int i = 0; i <= k && k >= 1; ++i)
        fs.push_back(normal.at(cls_face(root, i)));
      obj->add_cell(k, root, std::move(fs));
      normal[root] = SimplexRef{{}, root, k};
    }
  }

  Pushout out;
  out.object = obj;
  out.in_b = SSetMap{f.dst, obj, {}};
  for (const auto& [c, k] : B.dim_of) {
    if (k > build_dim) continue;
    out.in_b.assign[c] = normal.at(uf.find(node_key('B', B.ref(c))));
  }
  out.in_c = SSetMap{g.dst, obj, {}};
  for (const auto& [c, k] : C.dim_of) {
    if (k > build_dim) continue;
    out.in_c.assign[c] = normal.at(uf.find(node_key('C', C.ref(c))));
  }
  return out;
}

// --- map enumeration -----------------------------------------------------

MapEnumeration enumerate_maps(SSetPtr a, SSetPtr b,
                              const std::map<Cell, SimplexRef>& partial,
                              std::size_t limit) {
  // Cells in dimension-ascending canonical order.
  std::vector<Cell> order;
  for (int k = 0; k <= a->top_dim(); ++k)
    for (const Cell& c : a->cells[k]) order.push_back(c);

  // Candidate pools per dimension.
  std::map<int, std::vector<SimplexRef>> pool;
  for (int k = 0; k <= a->top_dim(); ++k) pool[k] = b->all_simplices(k);

  MapEnumeration result;
  std::map<Cell, SimplexRef> assign(partial);
  bool aborted = false;

  auto apply_partial = [&](const SimplexRef& r) {
    const SimplexRef& img = assign.at(r.cell);
    std::vector<int> total(r.word.js);
    total.insert(total.end(), img.word.js.begin(), img.word.js.end());
    return SimplexRef{normalize_word(std::move(total)), img.cell,
                      img.cell_dim};
  };

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (aborted) return;
    if (idx == order.size()) {
      result.maps.push_back(SSetMap{a, b, assign});
      if (result.maps.size() >= limit) aborted = true;
      return;
    }
    const Cell& c = order[idx];
    int k = a->dim(c);
    std::vector<SimplexRef> fimg;
    if (k >= 1) {
      SimplexRef r = a->ref(c);
      // All faces live strictly below, hence are assigned already.
      for (int i = 0; i <= k; ++i) fimg.push_back(apply_partial(a->face(r, i)));
    }
    if (auto it = assign.find(c); it != assign.end()) {
      // Preassigned: keep it only when it is face-compatible.
      for (int i = 0; i <= k && k >= 1; ++i)
        if (b->face(it->second, i) != fimg[i]) return;
      self(self, idx + 1);
      return;
    }
    for (const SimplexRef& cand : pool[k]) {
      bool ok = true;
      for (int i = 0; i <= k && k >= 1 && ok; ++i)
        if (b->face(cand, i) != fimg[i]) ok = false;
      if (!ok) continue;
      assign[c] = cand;
      self(self, idx + 1);
      assign.erase(c);
      if (aborted) return;
    }
  };
  rec(rec, 0);
  result.complete = !aborted;
  return result;
}

}  // namespace mbs
