#include "mbs/decor.hpp"

namespace mbs {

std::optional<std::string> MBSSet::validate() const {
  for (const Cell& c : marked)
    if (!under->has_cell(c) || under->dim(c) != 1)
      return "marked set references a non-edge: " + c;
  for (const Cell& c : thin) {
    if (!under->has_cell(c) || under->dim(c) != 2)
      return "thin set references a non-triangle: " + c;
    if (!lean.count(c)) return "thin triangle not lean: " + c;
  }
  for (const Cell& c : lean)
    if (!under->has_cell(c) || under->dim(c) != 2)
      return "lean set references a non-triangle: " + c;
  return std::nullopt;
}

bool same_object(const MBPtr& a, const MBPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a->under == *b->under && a->marked == b->marked &&
         a->thin == b->thin && a->lean == b->lean;
}

std::optional<std::string> DecoratedMap::validate() const {
  if ((map.src != src->under && !(*map.src == *src->under)) ||
      (map.dst != dst->under && !(*map.dst == *dst->under)))
    return "decorated map object mismatch";
  if (auto err = map.validate()) return err;
  for (const Cell& c : src->marked)
    if (!dst->is_marked(map.assign.at(c)))
      return "marked edge not preserved: " + c;
  for (const Cell& c : src->thin)
    if (!dst->is_thin(map.assign.at(c)))
      return "thin triangle not preserved: " + c;
  for (const Cell& c : src->lean)
    if (!dst->is_lean(map.assign.at(c)))
      return "lean triangle not preserved: " + c;
  return std::nullopt;
}

bool DecoratedMap::is_iso() const {
  if (!map.is_iso()) return false;
  auto image_set = [&](const std::set<Cell>& cells) {
    std::set<Cell> out;
    for (const Cell& c : cells) out.insert(map.assign.at(c).cell);
    return out;
  };
  return image_set(src->marked) == dst->marked &&
         image_set(src->thin) == dst->thin &&
         image_set(src->lean) == dst->lean;
}

DecoratedMap DecoratedMap::identity(MBPtr x) {
  return DecoratedMap{SSetMap::identity(x->under), x, x};
}

DecoratedMap DecoratedMap::then(const DecoratedMap& g) const {
  return DecoratedMap{map.then(g.map), src, g.dst};
}

DecorateReport decorate(SSetPtr x, std::set<Cell> marked, std::set<Cell> thin,
                        std::set<Cell> lean) {
  auto check = [&](const std::set<Cell>& cs, int k, const char* what) {
    for (const Cell& c : cs)
      if (!x->has_cell(c) || x->dim(c) != k)
        throw std::invalid_argument(std::string("unknown ") + what +
                                    " cell: " + c);
  };
  check(marked, 1, "marked");
  check(thin, 2, "thin");
  check(lean, 2, "lean");
  DecorateReport rep;
  for (const Cell& c : thin)
    if (lean.insert(c).second) rep.repaired.insert(c);
  rep.object = std::make_shared<MBSSet>(
      MBSSet{x, std::move(marked), std::move(thin), std::move(lean)});
  return rep;
}

MBPtr flat(SSetPtr x) { return decorate(x, {}, {}, {}).object; }

MBPtr sharp(SSetPtr x) {
  std::set<Cell> m, t;
  if (x->top_dim() >= 1)
    for (const Cell& c : x->cells[1]) m.insert(c);
  if (x->top_dim() >= 2)
    for (const Cell& c : x->cells[2]) t.insert(c);
  return decorate(x, std::move(m), t, t).object;
}

MBProduct product_mb(MBPtr x, MBPtr y) {
  Product raw = product(x->under, y->under);
  std::set<Cell> marked, thin, lean;
  for (const auto& [id, legs] : raw.components) {
    int k = raw.object->dim(id);
    if (k == 1) {
      if (x->is_marked(legs.first) && y->is_marked(legs.second))
        marked.insert(id);
    } else if (k == 2) {
      if (x->is_thin(legs.first) && y->is_thin(legs.second)) thin.insert(id);
      if (x->is_lean(legs.first) && y->is_lean(legs.second)) lean.insert(id);
    }
  }
  MBProduct out;
  out.object = decorate(raw.object, std::move(marked), std::move(thin),
                        std::move(lean))
                   .object;
  out.proj1 = DecoratedMap{raw.proj1, out.object, x};
  out.proj2 = DecoratedMap{raw.proj2, out.object, y};
  out.raw = std::move(raw);
  return out;
}

MBPushout pushout_mb(const DecoratedMap& f, const DecoratedMap& g) {
  Pushout raw = pushout(f.map, g.map);
  std::set<Cell> marked, thin, lean;
  auto push_leg = [&](const SSetMap& leg, const MBSSet& side) {
    for (const Cell& c : side.marked) {
      const SimplexRef& img = leg.assign.at(c);
      if (!img.degenerate()) marked.insert(img.cell);
    }
    for (const Cell& c : side.thin) {
      const SimplexRef& img = leg.assign.at(c);
      if (!img.degenerate()) thin.insert(img.cell);
    }
    for (const Cell& c : side.lean) {
      const SimplexRef& img = leg.assign.at(c);
      if (!img.degenerate()) lean.insert(img.cell);
    }
  };
  push_leg(raw.in_b, *f.dst);
  push_leg(raw.in_c, *g.dst);
  MBPushout out;
  out.object = decorate(raw.object, std::move(marked), std::move(thin),
                        std::move(lean))
                   .object;
  out.in_b = DecoratedMap{raw.in_b, f.dst, out.object};
  out.in_c = DecoratedMap{raw.in_c, g.dst, out.object};
  out.raw = std::move(raw);
  return out;
}

MBPtr translate_L(const ScaledSSet& x) {
  return decorate(x.under, {}, x.thin, x.thin).object;
}

ScaledSSet translate_U(const MBSSet& x) { return ScaledSSet{x.under, x.thin}; }

MBPtr restrict_decorations(SSetPtr sub, const MBSSet& ambient) {
  std::set<Cell> marked, thin, lean;
  for (const Cell& c : ambient.marked)
    if (sub->has_cell(c)) marked.insert(c);
  for (const Cell& c : ambient.thin)
    if (sub->has_cell(c)) thin.insert(c);
  for (const Cell& c : ambient.lean)
    if (sub->has_cell(c)) lean.insert(c);
  return decorate(sub, std::move(marked), std::move(thin), std::move(lean))
      .object;
}

}  // namespace mbs
