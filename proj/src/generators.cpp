#include "mbs/generators.hpp"

#include <sstream>
#include <stdexcept>

namespace mbs {

namespace {

constexpr const char* kFamilyNames[] = {
    "SCi", "SCii", "SCiii", "A1", "A2", "A3", "A4", "A5", "S1", "S2",
    "S3",  "S4",   "S5",    "E",  "C1", "C2", "C3", "C4", "TH"};

[[noreturn]] void bad_params(const GeneratorId& id) {
  throw std::invalid_argument("generator parameters out of range: " +
                              id.str());
}

SSetPtr delta(int n, int cap) {
  return std::make_shared<FiniteSSet>(standard(n, cap));
}

// Quotient of the standard n-simplex collapsing the initial edge 01.
Pushout collapse_initial_edge(SSetPtr simp) {
  Subcomplex edge = span_subcomplex(simp, {simplex_cell({0, 1})});
  SSetPtr pt = delta(0, simp->cap);
  SSetMap to_pt{edge.object, pt, {}};
  for (const auto& [c, k] : edge.object->dim_of)
    to_pt.assign[c] = pt->const_ref("0", k);
  return pushout(edge.inclusion, to_pt);
}

}  // namespace

Pushout collapsed_simplex(int n, int cap) {
  if (n < 1) throw std::invalid_argument("collapsed_simplex needs n >= 1");
  return collapse_initial_edge(delta(n, cap));
}

namespace {

// Image cell of a nondegenerate cell of the simplex in the collapsed object.
Cell collapsed(const Pushout& q, const Cell& c) {
  const SimplexRef& img = q.in_b.assign.at(c);
  if (img.degenerate())
    throw std::logic_error("cell collapses to a degenerate simplex: " + c);
  return img.cell;
}

std::set<Cell> all_cells(const FiniteSSet& x, int k) {
  if (k > x.top_dim()) return {};
  return {x.cells[k].begin(), x.cells[k].end()};
}

DecoratedMap decorated_inclusion(const Subcomplex& sub, MBPtr target) {
  MBPtr src = restrict_decorations(sub.object, *target);
  return DecoratedMap{sub.inclusion, src, target};
}

DecoratedMap decoration_step(MBPtr src, MBPtr dst) {
  return DecoratedMap{SSetMap::identity(src->under), src, dst};
}

DecoratedMap build(const GeneratorId& id, int cap) {
  const Cell tri012 = simplex_cell({0, 1, 2});
  switch (id.family) {
    case Family::SCi:
    case Family::A1: {
      if (id.n < 2 || id.i <= 0 || id.i >= id.n) bad_params(id);
      SSetPtr d = delta(id.n, cap);
      Cell tri = simplex_cell({id.i - 1, id.i, id.i + 1});
      MBPtr target = decorate(d, {}, {tri}, {tri}).object;
      return decorated_inclusion(horn_subcomplex(d, id.i), target);
    }
    case Family::SCii:
    case Family::A2: {
      SSetPtr d = delta(4, cap);
      std::set<Cell> t = {simplex_cell({0, 2, 4}), simplex_cell({1, 2, 3}),
                          simplex_cell({0, 1, 3}), simplex_cell({1, 3, 4}),
                          simplex_cell({0, 1, 2})};
      std::set<Cell> t2 = t;
      t2.insert(simplex_cell({0, 3, 4}));
      t2.insert(simplex_cell({0, 1, 4}));
      return decoration_step(decorate(d, {}, t, t).object,
                             decorate(d, {}, t2, t2).object);
    }
    case Family::SCiii:
    case Family::A3: {
      int min_n = id.family == Family::SCiii ? 3 : 2;
      if (id.n < min_n) bad_params(id);
      SSetPtr d = delta(id.n, cap);
      Pushout q = collapse_initial_edge(d);
      Cell tri = collapsed(q, simplex_cell({0, 1, id.n}));
      std::set<Cell> thin =
          id.family == Family::SCiii ? std::set<Cell>{tri} : std::set<Cell>{};
      MBPtr target = decorate(q.object, {}, thin, {tri}).object;
      // The horn side of the quotient: classes of all facets except the 0th.
      std::set<Cell> gens;
      const Cell top = d->cells[id.n][0];
      // A facet through the collapsed edge may land degenerately; the image
      // subcomplex is spanned by the underlying cells either way.
      for (int j = 1; j <= id.n; ++j)
        gens.insert(q.in_b.assign.at(d->faces.at(top)[j].cell).cell);
      return decorated_inclusion(span_subcomplex(q.object, gens), target);
    }
    case Family::A4: {
      if (id.n < 2) bad_params(id);
      SSetPtr d = delta(id.n, cap);
      Cell edge = simplex_cell({id.n - 1, id.n});
      Cell tri = simplex_cell({0, id.n - 1, id.n});
      MBPtr target = decorate(d, {edge}, {}, {tri}).object;
      return decorated_inclusion(horn_subcomplex(d, id.n), target);
    }
    case Family::A5: {
      SSetPtr pt = delta(0, cap);
      SSetPtr d1 = delta(1, cap);
      SSetMap vertex{pt, d1, {{"0", d1->ref("1")}}};
      return DecoratedMap{vertex, sharp(pt), sharp(d1)};
    }
    case Family::S1: {
      SSetPtr d = delta(2, cap);
      std::set<Cell> t = {tri012};
      return decoration_step(
          decorate(d, {simplex_cell({0, 1}), simplex_cell({1, 2})}, t, t)
              .object,
          sharp(d));
    }
    case Family::S2:
    case Family::C4: {
      SSetPtr d = delta(2, cap);
      return decoration_step(decorate(d, {}, {}, {tri012}).object,
                             decorate(d, {}, {tri012}, {tri012}).object);
    }
    case Family::S3: {
      if (id.i <= 0 || id.i >= 3) bad_params(id);
      SSetPtr d = delta(3, cap);
      Cell thin = simplex_cell({id.i - 1, id.i, id.i + 1});
      const Cell top = d->cells[3][0];
      std::set<Cell> lean = all_cells(*d, 2);
      lean.erase(d->faces.at(top)[id.i].cell);
      return decoration_step(decorate(d, {}, {thin}, lean).object,
                             decorate(d, {}, {thin}, all_cells(*d, 2)).object);
    }
    case Family::S4: {
      SSetPtr d = delta(3, cap);
      Pushout q = collapse_initial_edge(d);
      const Cell top = d->cells[3][0];
      std::set<Cell> lean;
      for (int j = 1; j <= 3; ++j)
        lean.insert(collapsed(q, d->faces.at(top)[j].cell));
      return decoration_step(
          decorate(q.object, {}, {}, lean).object,
          decorate(q.object, {}, {}, all_cells(*q.object, 2)).object);
    }
    case Family::S5: {
      SSetPtr d = delta(3, cap);
      const Cell top = d->cells[3][0];
      std::set<Cell> lean = all_cells(*d, 2);
      lean.erase(d->faces.at(top)[3].cell);
      std::set<Cell> m = {simplex_cell({2, 3})};
      return decoration_step(decorate(d, m, {}, lean).object,
                             decorate(d, m, {}, all_cells(*d, 2)).object);
    }
    case Family::E: {
      KanFixture fx = kan_fixture(id.fixture, cap);
      std::set<Cell> tris = all_cells(*fx.complex, 2);
      return decoration_step(decorate(fx.complex, {}, tris, tris).object,
                             sharp(fx.complex));
    }
    case Family::C1: {
      if (id.n < 0) bad_params(id);
      SSetPtr d = delta(id.n, cap);
      return decorated_inclusion(boundary_subcomplex(d), flat(d));
    }
    case Family::C2: {
      SSetPtr d = delta(1, cap);
      return decoration_step(flat(d),
                             decorate(d, {simplex_cell({0, 1})}, {}, {}).object);
    }
    case Family::C3: {
      SSetPtr d = delta(2, cap);
      return decoration_step(flat(d), decorate(d, {}, {}, {tri012}).object);
    }
    case Family::TH: {
      SSetPtr d = delta(2, cap);
      std::set<Cell> t = {tri012};
      return decoration_step(
          decorate(d, {simplex_cell({1, 2}), simplex_cell({0, 2})}, t, t)
              .object,
          sharp(d));
    }
  }
  bad_params(id);
}

}  // namespace

const char* family_name(Family f) {
  return kFamilyNames[static_cast<int>(f)];
}

std::optional<Family> family_from_name(const std::string& s) {
  for (int k = 0; k < static_cast<int>(std::size(kFamilyNames)); ++k)
    if (s == kFamilyNames[k]) return static_cast<Family>(k);
  return std::nullopt;
}

std::string GeneratorId::str() const {
  std::string out = family_name(family);
  if (family == Family::E) return out + ":" + fixture;
  if (n >= 0) out += ":" + std::to_string(n);
  if (i >= 0) out += ":" + std::to_string(i);
  return out;
}

GeneratorId GeneratorId::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty generator id");
  auto fam = family_from_name(parts[0]);
  if (!fam) throw std::invalid_argument("unknown family: " + parts[0]);
  auto as_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != s.size())
      throw std::invalid_argument("bad generator parameter: " + s);
    return v;
  };
  GeneratorId id{*fam};
  auto need = [&](std::size_t k) {
    if (parts.size() != k + 1)
      throw std::invalid_argument("wrong parameter count for " + parts[0] +
                                  ": " + text);
  };
  switch (*fam) {
    case Family::SCi:
    case Family::A1:
      need(2);
      id.n = as_int(parts[1]);
      id.i = as_int(parts[2]);
      break;
    case Family::SCiii:
    case Family::A3:
    case Family::A4:
    case Family::C1:
      need(1);
      id.n = as_int(parts[1]);
      break;
    case Family::S3:
      need(1);
      id.i = as_int(parts[1]);
      break;
    case Family::E:
      need(1);
      id.fixture = parts[1];
      break;
    default:
      need(0);
      break;
  }
  return id;
}

DecoratedMap instantiate(const GeneratorId& id, int cap) {
  DecoratedMap f = build(id, cap);
  if (auto err = f.validate())
    throw std::logic_error("generator " + id.str() + " failed to verify: " +
                           *err);
  if (!f.is_mono())
    throw std::logic_error("generator " + id.str() + " is not a mono");
  return f;
}

std::vector<GeneratorId> list_generators(Family f, int max_n) {
  std::vector<GeneratorId> out;
  switch (f) {
    case Family::SCi:
    case Family::A1:
      for (int n = 2; n <= max_n; ++n)
        for (int i = 1; i < n; ++i) out.push_back({f, n, i});
      break;
    case Family::SCiii:
      for (int n = 3; n <= max_n; ++n) out.push_back({f, n});
      break;
    case Family::A3:
    case Family::A4:
      for (int n = 2; n <= max_n; ++n) out.push_back({f, n});
      break;
    case Family::S3:
      for (int i = 1; i < 3; ++i) out.push_back({f, -1, i});
      break;
    case Family::E:
      for (const std::string& name : kan_fixture_names())
        out.push_back({f, -1, -1, name});
      break;
    case Family::C1:
      for (int n = 0; n <= max_n; ++n) out.push_back({f, n});
      break;
    default:
      out.push_back({f});
      break;
  }
  return out;
}

namespace {

std::vector<GeneratorId> concat_families(const std::vector<Family>& fams,
                                         int max_n) {
  std::vector<GeneratorId> out;
  for (Family f : fams)
    for (GeneratorId& id : list_generators(f, max_n))
      out.push_back(std::move(id));
  return out;
}

}  // namespace

std::vector<GeneratorId> scaled_anodyne_generators(int max_n) {
  return concat_families({Family::SCi, Family::SCii, Family::SCiii}, max_n);
}

std::vector<GeneratorId> anodyne_generators(int max_n) {
  return concat_families(
      {Family::A1, Family::A2, Family::A3, Family::A4, Family::A5, Family::S1,
       Family::S2, Family::S3, Family::S4, Family::S5, Family::E},
      max_n);
}

std::vector<GeneratorId> cofibration_generators(int max_n) {
  return concat_families({Family::C1, Family::C2, Family::C3, Family::C4},
                         max_n);
}

// --- Kan fixtures ---------------------------------------------------------

bool KanFixture::all_filled() const {
  for (const HornCheck& h : certificate)
    if (h.filled != h.probes) return false;
  return true;
}

SSetPtr nerve_two_object_groupoid(int cap) {
  auto x = std::make_shared<FiniteSSet>();
  x->cap = cap;
  x->add_cell(0, "x");
  x->add_cell(0, "y");
  // The nondegenerate k-cells are the two alternating letter strings of
  // length k + 1; an inner face creates a repeated letter and renormalizes
  // to a degeneracy of the string two letters shorter.
  std::vector<std::string> prev = {"x", "y"};
  for (int k = 1; k <= cap; ++k) {
    std::vector<std::string> cur;
    for (const std::string& w : prev)
      cur.push_back(w + (w.back() == 'x' ? 'y' : 'x'));
    for (const std::string& w : cur) {
      std::vector<SimplexRef> fs;
      for (int i = 0; i <= k; ++i) {
        if (i == 0) {
          fs.push_back(SimplexRef{{}, w.substr(1), k - 1});
        } else if (i == k) {
          fs.push_back(SimplexRef{{}, w.substr(0, k), k - 1});
        } else {
          std::string u = w.substr(0, i) + w.substr(i + 2);
          fs.push_back(SimplexRef{DegeneracyWord{{i - 1}}, u, k - 2});
        }
      }
      x->add_cell(k, w, std::move(fs));
    }
    prev = std::move(cur);
  }
  if (auto err = x->validate())
    throw std::logic_error("groupoid nerve invalid: " + *err);
  return x;
}

std::vector<std::string> kan_fixture_names() { return {"point", "J"}; }

KanFixture kan_fixture(const std::string& name, int cap) {
  KanFixture fx;
  fx.name = name;
  if (name == "point") {
    fx.complex = std::make_shared<FiniteSSet>(standard(0, cap));
  } else if (name == "J") {
    fx.complex = nerve_two_object_groupoid(cap);
  } else {
    throw std::invalid_argument("unknown Kan fixture: " + name);
  }
  constexpr std::size_t kLimit = 1u << 20;
  for (int n = 1; n <= cap - 1; ++n) {
    SSetPtr d = std::make_shared<FiniteSSet>(standard(n, cap));
    for (int i = 0; i <= n; ++i) {
      Subcomplex horn = horn_subcomplex(d, i);
      MapEnumeration probes =
          enumerate_maps(horn.object, fx.complex, {}, kLimit);
      if (!probes.complete)
        throw std::logic_error("horn probe enumeration overflow");
      HornCheck check{n, i, static_cast<int>(probes.maps.size()), 0};
      for (const SSetMap& m : probes.maps) {
        MapEnumeration ext = enumerate_maps(d, fx.complex, m.assign, 1);
        if (!ext.maps.empty()) ++check.filled;
      }
      fx.certificate.push_back(check);
    }
  }
  return fx;
}

}  // namespace mbs
