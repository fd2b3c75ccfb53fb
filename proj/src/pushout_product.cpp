#include "mbs/pushout_product.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace mbs {

DecoratedMap product_map(const MBProduct& src, const MBProduct& dst,
                         const DecoratedMap& u, const DecoratedMap& v) {
  SSetMap m = pair_into_product(src.raw.proj1.then(u.map),
                                src.raw.proj2.then(v.map), dst.raw);
  DecoratedMap out{std::move(m), src.object, dst.object};
  if (auto err = out.validate())
    throw std::logic_error("product of maps invalid: " + *err);
  return out;
}

PPInstance pushout_product(const DecoratedMap& f, const DecoratedMap& g) {
  if (!f.is_mono() || !g.is_mono())
    throw std::invalid_argument("pushout-product needs monomorphisms");
  MBProduct by = product_mb(f.dst, g.dst);
  MBProduct ay = product_mb(f.src, g.dst);
  MBProduct bx = product_mb(f.dst, g.src);
  MBProduct ax = product_mb(f.src, g.src);

  DecoratedMap a_to_ay =
      product_map(ax, ay, DecoratedMap::identity(f.src), g);
  DecoratedMap a_to_bx =
      product_map(ax, bx, f, DecoratedMap::identity(g.src));
  MBPushout q = pushout_mb(a_to_ay, a_to_bx);

  DecoratedMap ay_to_by = product_map(ay, by, f, DecoratedMap::identity(g.dst));
  DecoratedMap bx_to_by = product_map(bx, by, DecoratedMap::identity(f.dst), g);

  // The induced map out of the pushout, assembled leg by leg on the classes
  // with nondegenerate representatives.
  SSetMap induced{q.object->under, by.object->under, {}};
  auto leg = [&](const SSetMap& in, const SSetMap& to_by) {
    for (const auto& [c, k] : in.src->dim_of) {
      const SimplexRef& img = in.assign.at(c);
      if (img.degenerate()) continue;
      SimplexRef val = to_by.apply(in.src->ref(c));
      auto [it, fresh] = induced.assign.emplace(img.cell, val);
      if (!fresh && !(it->second == val))
        throw std::logic_error("pushout-product legs disagree at " + img.cell);
    }
  };
  leg(q.raw.in_b, ay_to_by.map);
  leg(q.raw.in_c, bx_to_by.map);
  for (const auto& [c, k] : q.object->under->dim_of)
    if (!induced.assign.count(c))
      throw std::logic_error("pushout class without a representative: " + c);

  DecoratedMap result{std::move(induced), q.object, by.object};
  if (auto err = result.validate())
    throw std::logic_error("pushout-product map invalid: " + *err);
  if (!result.is_mono())
    throw std::logic_error("pushout-product failed to be a monomorphism");
  return PPInstance{f, g, std::move(result)};
}

const char* strategy_name(PPStrategy s) {
  switch (s) {
    case PPStrategy::Isomorphism: return "isomorphism";
    case PPStrategy::Shuffle: return "shuffle";
    case PPStrategy::Staircase: return "staircase";
    case PPStrategy::MirroredStaircase: return "mirrored-staircase";
    case PPStrategy::Prism: return "prism";
    case PPStrategy::Auto: return "auto";
  }
  return "?";
}

PPReport verify_case(const GeneratorId& cof, const GeneratorId& ano,
                     long budget, int cap) {
  PPReport rep;
  rep.cof = cof;
  rep.ano = ano;
  DecoratedMap f = instantiate(cof, cap);
  DecoratedMap g = instantiate(ano, cap);
  PPInstance pp = pushout_product(f, g);
  rep.truncated =
      pp.result.dst->under->truncated || pp.result.src->under->truncated;

  if (pp.result.is_iso()) {
    rep.strategy = PPStrategy::Isomorphism;
    rep.verdict = "isomorphism";
    return rep;
  }

  Stage source_stage = image_stage(pp.result);

  // The boundary row has scripted filtrations; every other case is either an
  // isomorphism (handled above) or a short decoration derivation found
  // automatically.
  if (cof.family == Family::C1 && cof.n >= 1) {
    std::optional<std::pair<PPStrategy, Derivation>> scripted;
    try {
      switch (ano.family) {
        case Family::A1:
          scripted = {PPStrategy::Shuffle,
                      derive_shuffle(cof.n, ano.n, ano.i, cap)};
          break;
        case Family::A3:
          scripted = {PPStrategy::Staircase,
                      derive_nightmare(cof.n, ano.n, cap)};
          break;
        case Family::A4:
          scripted = {PPStrategy::MirroredStaircase,
                      derive_dual_nightmare(cof.n, ano.n, cap)};
          break;
        case Family::A5:
          scripted = {PPStrategy::Prism, derive_prism(cof.n, cap)};
          break;
        default:
          break;
      }
    } catch (const std::exception& e) {
      rep.detail = std::string("scripted filtration failed: ") + e.what();
    }
    if (scripted) {
      const Derivation& d = scripted->second;
      rep.strategy = scripted->first;
      if (!same_object(d.ambient, pp.result.dst)) {
        rep.verdict = "unverified";
        rep.detail = "scripted ambient disagrees with the product";
        return rep;
      }
      if (!(d.start == source_stage)) {
        rep.verdict = "unverified";
        rep.detail = "scripted start disagrees with the pushout-product source";
        return rep;
      }
      VerifyResult v = verify(d);
      if (v.ok) {
        rep.verdict = "verified";
        rep.derivation = d;
        return rep;
      }
      rep.verdict = "unverified";
      rep.detail = "scripted derivation fails: " + v.diagnostic;
      return rep;
    }
  }

  rep.strategy = PPStrategy::Auto;
  AutoResult ar = derive_auto(pp.result, budget);
  rep.examined = ar.examined;
  if (ar.derivation) {
    rep.verdict = "verified";
    rep.detail.clear();
    rep.derivation = std::move(ar.derivation);
  } else {
    rep.verdict = "unverified";
    if (rep.detail.empty())
      rep.detail = "automatic search gave out before reaching the target";
  }
  return rep;
}

PPManifest load_pp_manifest(std::istream& in) {
  nlohmann::json j;
  in >> j;
  PPManifest m;
  m.version = j.at("version").get<int>();
  if (m.version != 1)
    throw std::invalid_argument("unsupported manifest version");
  for (const auto& c : j.at("cases"))
    m.cases.emplace_back(GeneratorId::parse(c.at("cof").get<std::string>()),
                         GeneratorId::parse(c.at("ano").get<std::string>()));
  if (m.cases.empty()) throw std::invalid_argument("empty manifest");
  return m;
}

std::vector<PPReport> pp_table(const PPManifest& manifest, long budget,
                               int cap) {
  std::vector<PPReport> out;
  out.reserve(manifest.cases.size());
  for (const auto& [cof, ano] : manifest.cases)
    out.push_back(verify_case(cof, ano, budget, cap));
  return out;
}

std::string pp_table_json(const std::vector<PPReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const PPReport& r : reports) {
    nlohmann::json rec{{"cof", r.cof.str()},
                       {"ano", r.ano.str()},
                       {"strategy", strategy_name(r.strategy)},
                       {"verdict", r.verdict},
                       {"steps", r.derivation ? r.derivation->steps.size() : 0},
                       {"examined", r.examined},
                       {"truncated", r.truncated}};
    if (!r.detail.empty()) rec["detail"] = r.detail;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2);
}

}  // namespace mbs
