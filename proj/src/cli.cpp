#include "mbs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mbs/analyze.hpp"
#include "mbs/pushout_product.hpp"

namespace mbs {

using nlohmann::json;

namespace {

// --- serialization ---------------------------------------------------------

json ref_json(const SimplexRef& r) {
  return json{{"of", r.cell}, {"ops", r.word.js}};
}

SimplexRef ref_from_json(const json& v, const FiniteSSet& x,
                         const std::string& where) {
  if (!v.is_object() || !v.contains("of") || !v.contains("ops"))
    throw DocumentError(where + ": simplex reference needs \"of\"/\"ops\"");
  Cell c = v.at("of").get<Cell>();
  if (!x.has_cell(c))
    throw DocumentError(where + ": reference to undeclared cell " + c);
  std::vector<int> ops = v.at("ops").get<std::vector<int>>();
  for (int j : ops)
    if (j < 0) throw DocumentError(where + ": negative degeneracy index");
  return SimplexRef{normalize_word(std::move(ops)), c, x.dim(c)};
}

json string_set_json(const std::set<Cell>& cs) {
  json a = json::array();
  for (const Cell& c : cs) a.push_back(c);
  return a;
}

json object_json(const MBSSet& x) {
  json cells = json::object();
  for (int k = 0; k <= x.under->top_dim(); ++k) {
    json level = json::array();
    for (const Cell& c : x.under->cells[k]) {
      if (k == 0) {
        level.push_back(c);
      } else {
        json faces = json::array();
        for (const SimplexRef& f : x.under->faces.at(c))
          faces.push_back(ref_json(f));
        level.push_back(json{{"faces", faces}, {"id", c}});
      }
    }
    cells[std::to_string(k)] = level;
  }
  return json{{"cells", cells},
              {"lean", string_set_json(x.lean)},
              {"marked", string_set_json(x.marked)},
              {"thin", string_set_json(x.thin)}};
}

MBPtr object_from_json(const json& v, int cap, bool strict,
                       std::vector<std::string>* warnings,
                       const std::string& name) {
  if (!v.is_object() || !v.contains("cells"))
    throw DocumentError(name + ": object needs a \"cells\" table");
  auto x = std::make_shared<FiniteSSet>();
  x->cap = cap;
  const json& cells = v.at("cells");
  int levels = 0;
  while (cells.contains(std::to_string(levels))) ++levels;
  if (static_cast<std::size_t>(levels) != cells.size())
    throw DocumentError(name + ": cell dimensions must be contiguous from 0");
  for (int k = 0; k < levels; ++k) {
    for (const json& entry : cells.at(std::to_string(k))) {
      if (k == 0) {
        if (!entry.is_string())
          throw DocumentError(name + ": vertices are plain strings");
        x->add_cell(0, entry.get<Cell>());
        continue;
      }
      if (!entry.is_object() || !entry.contains("id") ||
          !entry.contains("faces"))
        throw DocumentError(name + ": cells above dimension 0 need id/faces");
      Cell id = entry.at("id").get<Cell>();
      std::vector<SimplexRef> faces;
      for (const json& f : entry.at("faces"))
        faces.push_back(ref_from_json(f, *x, name + "/" + id));
      if (static_cast<int>(faces.size()) != k + 1)
        throw DocumentError(name + "/" + id + ": expected " +
                            std::to_string(k + 1) + " faces");
      x->add_cell(k, id, std::move(faces));
    }
  }
  if (auto e = x->validate()) throw DocumentError(name + ": " + *e);
  auto read_set = [&](const char* key) {
    std::set<Cell> out;
    for (const json& c : v.value(key, json::array())) out.insert(c.get<Cell>());
    return out;
  };
  DecorateReport rep;
  try {
    rep = decorate(x, read_set("marked"), read_set("thin"), read_set("lean"));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(name + ": " + e.what());
  }
  if (!rep.repaired.empty()) {
    std::string note = name + ": thin cells added to lean (closure):";
    for (const Cell& c : rep.repaired) note += " " + c;
    if (strict) throw DocumentError(note + " (rejected under --strict)");
    if (warnings) warnings->push_back(note);
  }
  return rep.object;
}

json stage_json(const Stage& s) {
  return json{{"cells", string_set_json(s.cells)},
              {"lean", string_set_json(s.lean)},
              {"marked", string_set_json(s.marked)},
              {"thin", string_set_json(s.thin)}};
}

Stage stage_from_json(const json& v, const std::string& where) {
  auto read = [&](const char* key) {
    std::set<Cell> out;
    if (!v.contains(key))
      throw DocumentError(where + ": stage needs \"" + key + "\"");
    for (const json& c : v.at(key)) out.insert(c.get<Cell>());
    return out;
  };
  return Stage{read("cells"), read("marked"), read("thin"), read("lean")};
}

std::string dump(const json& v) { return v.dump(2) + "\n"; }

}  // namespace

Document parse_document(const std::string& text, bool strict,
                        std::vector<std::string>* warnings) {
  json v;
  try {
    v = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("syntax error: ") + e.what());
  }
  if (!v.is_object() || !v.contains("version"))
    throw DocumentError("document needs a \"version\" string");
  Document doc;
  doc.version = v.at("version").get<std::string>();
  if (doc.version != kDocumentVersion)
    throw DocumentError("unsupported document version: " + doc.version);
  doc.cap = v.value("cap", kDefaultCap);
  if (doc.cap < 0) throw DocumentError("cap must be nonnegative");
  const json empty_object = json::object();
  const json& objects = v.contains("objects") ? v.at("objects") : empty_object;
  for (const auto& [name, ov] : objects.items())
    doc.objects.emplace(name,
                        object_from_json(ov, doc.cap, strict, warnings, name));
  const json& maps = v.contains("maps") ? v.at("maps") : empty_object;
  for (const auto& [name, mv] : maps.items()) {
    if (!mv.is_object() || !mv.contains("src") || !mv.contains("dst") ||
        !mv.contains("assign"))
      throw DocumentError(name + ": map needs src/dst/assign");
    auto src = doc.objects.find(mv.at("src").get<std::string>());
    auto dst = doc.objects.find(mv.at("dst").get<std::string>());
    if (src == doc.objects.end() || dst == doc.objects.end())
      throw DocumentError(name + ": map references an undeclared object");
    SSetMap m{src->second->under, dst->second->under, {}};
    for (const auto& [cell, rv] : mv.at("assign").items()) {
      if (!m.src->has_cell(cell))
        throw DocumentError(name + ": assignment for undeclared cell " + cell);
      m.assign[cell] = ref_from_json(rv, *m.dst, name + "/" + cell);
    }
    DecoratedMap dm{std::move(m), src->second, dst->second};
    if (auto e = dm.validate()) throw DocumentError(name + ": " + *e);
    doc.maps.emplace(name, std::move(dm));
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  json objects = json::object();
  for (const auto& [name, x] : doc.objects) objects[name] = object_json(*x);
  auto object_name = [&](const MBPtr& x) -> std::string {
    for (const auto& [name, o] : doc.objects)
      if (o == x || same_object(o, x)) return name;
    throw DocumentError("map references an undeclared object");
  };
  json maps = json::object();
  for (const auto& [name, m] : doc.maps) {
    json assign = json::object();
    for (const auto& [cell, r] : m.map.assign) assign[cell] = ref_json(r);
    maps[name] = json{{"assign", assign},
                      {"dst", object_name(m.dst)},
                      {"src", object_name(m.src)}};
  }
  return dump(json{{"cap", doc.cap},
                   {"maps", maps},
                   {"objects", objects},
                   {"version", doc.version}});
}

std::string emit_certificate(const Derivation& d) {
  json steps = json::array();
  for (const Step& s : d.steps) {
    json assign = json::object();
    for (const auto& [cell, r] : s.attach.assign) assign[cell] = ref_json(r);
    steps.push_back(json{{"attach", assign}, {"gen", s.id.str()}});
  }
  return dump(json{{"ambient", object_json(*d.ambient)},
                   {"cap", d.ambient->under->cap},
                   {"start", stage_json(d.start)},
                   {"steps", steps},
                   {"version", kCertificateVersion}});
}

Derivation parse_certificate(const std::string& text) {
  json v;
  try {
    v = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("syntax error: ") + e.what());
  }
  if (!v.is_object() || !v.contains("version"))
    throw DocumentError("certificate needs a \"version\" string");
  std::string ver = v.at("version").get<std::string>();
  if (ver != kCertificateVersion)
    throw DocumentError("unsupported certificate version: " + ver);
  int cap = v.value("cap", kDefaultCap);
  MBPtr ambient =
      object_from_json(v.at("ambient"), cap, false, nullptr, "ambient");
  Derivation d{ambient, stage_from_json(v.at("start"), "start"), {}};
  for (const json& sv : v.value("steps", json::array())) {
    if (!sv.is_object() || !sv.contains("gen") || !sv.contains("attach"))
      throw DocumentError("step needs gen/attach");
    GeneratorId id;
    try {
      id = GeneratorId::parse(sv.at("gen").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DocumentError(std::string("bad generator id: ") + e.what());
    }
    DecoratedMap gen;
    try {
      gen = instantiate(id, cap);
    } catch (const std::invalid_argument& e) {
      throw DocumentError(id.str() + ": " + e.what());
    }
    SSetMap attach{gen.dst->under, ambient->under, {}};
    for (const auto& [cell, rv] : sv.at("attach").items()) {
      if (!attach.src->has_cell(cell))
        throw DocumentError(id.str() + ": attachment for undeclared cell " +
                            cell);
      attach.assign[cell] =
          ref_from_json(rv, *ambient->under, id.str() + "/" + cell);
    }
    d.steps.push_back(Step{id, std::move(attach)});
  }
  return d;
}

// --- driver ----------------------------------------------------------------

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path);
  out << text;
}

struct Options {
  int cap = kDefaultCap;
  long budget = 200000;
  bool strict = false;
  std::string out_path;
  std::string format = "text";

  bool machine() const { return format == "machine"; }
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--cap", opt.cap, "dimension cap");
  cmd->add_option("--budget", opt.budget, "search budget");
  cmd->add_flag("--strict", opt.strict, "reject repairable documents");
  cmd->add_option("--out", opt.out_path, "write the result to a file");
  cmd->add_option("--format", opt.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
}

const DecoratedMap& pick_map(const Document& doc, const std::string& name) {
  if (!name.empty()) {
    auto it = doc.maps.find(name);
    if (it == doc.maps.end())
      throw DocumentError("document declares no map named " + name);
    return it->second;
  }
  if (doc.maps.size() != 1)
    throw DocumentError("--map is required when a document has " +
                        std::to_string(doc.maps.size()) + " maps");
  return doc.maps.begin()->second;
}

void deliver(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out_path.empty())
    out << text;
  else
    write_file(opt.out_path, text);
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Lifts: return kExitPass;
    case Verdict::NoLift: return kExitFail;
    default: return kExitInconclusive;
  }
}

json profile_json(const FibrationProfile& pr) {
  json conds = json::array();
  for (const ConditionRecord& c : pr.conditions)
    conds.push_back(json{{"detail", c.detail},
                         {"name", c.name},
                         {"verdict", verdict_name(c.verdict)}});
  return json{{"cap", pr.cap},
              {"cartesian", string_set_json(pr.cartesian)},
              {"cocartesian", string_set_json(pr.cocartesian)},
              {"conditions", conds},
              {"functorial", pr.functorial},
              {"inconclusive", pr.inconclusive()},
              {"locally_fibred", pr.locally_fibred},
              {"o2", pr.o2},
              {"o2c", pr.o2c},
              {"pass", pr.pass()}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"workbench for finitely presented marked biscaled simplicial "
               "sets"};
  app.require_subcommand(1);
  Options opt;

  bool gen_list = false;
  std::string gen_id;
  CLI::App* gen = app.add_subcommand("gen", "instantiate or list generators");
  gen->add_flag("--list", gen_list, "list all generator ids under the cap");
  gen->add_option("--id", gen_id, "generator id, e.g. A1:3:1");
  add_common(gen, opt);

  std::string doc_path;
  CLI::App* info = app.add_subcommand("info", "cell census of a document");
  info->add_option("document", doc_path)->required();
  add_common(info, opt);

  std::string j_name, p_name, top_name, bottom_name;
  CLI::App* lift = app.add_subcommand("lift", "solve one lifting square");
  lift->add_option("document", doc_path)->required();
  lift->add_option("--j", j_name)->required();
  lift->add_option("--p", p_name)->required();
  lift->add_option("--top", top_name)->required();
  lift->add_option("--bottom", bottom_name)->required();
  add_common(lift, opt);

  std::string map_name, class_name = "MB";
  CLI::App* rlp = app.add_subcommand("rlp", "classify a map as a fibration");
  rlp->add_option("document", doc_path)->required();
  rlp->add_option("--map", map_name);
  rlp->add_option("--class", class_name, "MB, weak-s, or trivial")
      ->check(CLI::IsMember({"MB", "weak-s", "trivial"}));
  add_common(rlp, opt);

  std::string scripted;
  int par_n = -1, par_m = -1, par_i = -1;
  std::vector<int> indices;
  CLI::App* derive =
      app.add_subcommand("derive", "derive a map from the generators");
  derive->add_option("document", doc_path);
  derive->add_option("--map", map_name);
  derive->add_option("--scripted", scripted,
                     "shuffle, nightmare, dual-nightmare, prism, indI, indII")
      ->check(CLI::IsMember(
          {"shuffle", "nightmare", "dual-nightmare", "prism", "indI", "indII"}));
  derive->add_option("--n", par_n);
  derive->add_option("--m", par_m);
  derive->add_option("--i", par_i);
  derive->add_option("--indices", indices)->delimiter(',');
  add_common(derive, opt);

  std::string cert_path;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a derivation certificate");
  verify_cmd->add_option("certificate", cert_path)->required();
  add_common(verify_cmd, opt);

  std::string cof_text, ano_text, manifest_path = "data/manifest.v1.json";
  bool table = false;
  CLI::App* pp = app.add_subcommand("pp", "verify pushout-product cases");
  pp->add_option("--cof", cof_text, "cofibration generator id");
  pp->add_option("--ano", ano_text, "anodyne generator id");
  pp->add_flag("--table", table, "run the whole manifest");
  pp->add_option("--manifest", manifest_path, "case table file");
  add_common(pp, opt);

  CLI::App* analyze =
      app.add_subcommand("analyze", "fibration profile of a map");
  analyze->add_option("document", doc_path)->required();
  analyze->add_option("--map", map_name);
  add_common(analyze, opt);

  std::vector<const char*> argv = {"mbd"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (gen->parsed()) {
      if (gen_list != gen_id.empty())
        throw DocumentError("gen needs exactly one of --list or --id");
      if (gen_list) {
        std::vector<GeneratorId> ids = scaled_anodyne_generators(opt.cap);
        for (const GeneratorId& id : anodyne_generators(opt.cap))
          ids.push_back(id);
        for (const GeneratorId& id : cofibration_generators(opt.cap))
          ids.push_back(id);
        if (opt.machine()) {
          json a = json::array();
          for (const GeneratorId& id : ids) a.push_back(id.str());
          deliver(opt, out, dump(a));
        } else {
          std::string text;
          for (const GeneratorId& id : ids) text += id.str() + "\n";
          deliver(opt, out, text);
        }
        return kExitPass;
      }
      DecoratedMap dm = instantiate(GeneratorId::parse(gen_id), opt.cap);
      Document doc;
      doc.cap = opt.cap;
      doc.objects = {{"src", dm.src}, {"dst", dm.dst}};
      doc.maps = {{"j", dm}};
      deliver(opt, out, emit_document(doc));
      return kExitPass;
    }

    if (info->parsed()) {
      std::vector<std::string> warnings;
      Document doc = parse_document(read_file(doc_path), opt.strict, &warnings);
      for (const std::string& w : warnings) err << "warning: " << w << "\n";
      std::ostringstream text;
      for (const auto& [name, x] : doc.objects) {
        text << name << ": cells";
        for (int k = 0; k <= x->under->top_dim(); ++k)
          text << (k ? "/" : " ") << x->under->cells[k].size();
        text << " marked=" << x->marked.size() << " thin=" << x->thin.size()
             << " lean=" << x->lean.size() << "\n";
      }
      for (const auto& [name, m] : doc.maps)
        text << name << ": " << (m.map.is_mono() ? "mono" : "map") << ", "
             << m.map.assign.size() << " assignments\n";
      deliver(opt, out, text.str());
      return kExitPass;
    }

    if (lift->parsed()) {
      Document doc = parse_document(read_file(doc_path), opt.strict);
      LiftSquare sq{pick_map(doc, j_name), pick_map(doc, p_name),
                    pick_map(doc, top_name), pick_map(doc, bottom_name)};
      if (auto e = sq.validate()) throw DocumentError("square: " + *e);
      LiftReport rep = solve_lift(sq, opt.budget);
      if (opt.machine()) {
        json w = json::object();
        if (rep.witness)
          for (const auto& [cell, r] : rep.witness->map.assign)
            w[cell] = ref_json(r);
        deliver(opt, out,
                dump(json{{"nodes", rep.stats.nodes},
                          {"verdict", verdict_name(rep.verdict)},
                          {"witness", w}}));
      } else {
        deliver(opt, out,
                std::string(verdict_name(rep.verdict)) + " (" +
                    std::to_string(rep.stats.nodes) + " nodes)\n");
      }
      return verdict_exit(rep.verdict);
    }

    if (rlp->parsed()) {
      Document doc = parse_document(read_file(doc_path), opt.strict);
      FibClass cls = class_name == "MB"       ? FibClass::MB
                     : class_name == "weak-s" ? FibClass::WeakS
                                              : FibClass::Trivial;
      ClassifyReport rep =
          classify_fibration(pick_map(doc, map_name), cls, opt.cap, opt.budget);
      if (opt.machine()) {
        json fails = json::array();
        for (const RlpFailure& f : rep.failures)
          fails.push_back(
              json{{"id", f.id.str()}, {"verdict", verdict_name(f.verdict)}});
        deliver(opt, out,
                dump(json{{"cap", opt.cap},
                          {"failures", fails},
                          {"inconclusive", rep.inconclusive},
                          {"pass", rep.pass}}));
      } else {
        std::ostringstream text;
        if (rep.pass) {
          text << "pass up to cap " << opt.cap << "\n";
        } else {
          text << (rep.inconclusive ? "inconclusive" : "fail");
          for (const RlpFailure& f : rep.failures)
            text << " " << f.id.str() << ":" << verdict_name(f.verdict);
          text << "\n";
        }
        deliver(opt, out, text.str());
      }
      return rep.pass          ? kExitPass
             : rep.inconclusive ? kExitInconclusive
                                : kExitFail;
    }

    if (derive->parsed()) {
      std::optional<Derivation> d;
      long examined = 0;
      if (!scripted.empty()) {
        if (scripted == "shuffle")
          d = derive_shuffle(par_n, par_m, par_i, opt.cap);
        else if (scripted == "nightmare")
          d = derive_nightmare(par_n, par_m, opt.cap);
        else if (scripted == "dual-nightmare")
          d = derive_dual_nightmare(par_n, par_m, opt.cap);
        else if (scripted == "prism")
          d = derive_prism(par_n, opt.cap);
        else if (scripted == "indI")
          d = derive_indI(par_m, indices, opt.cap);
        else
          d = derive_indII(par_m, indices, opt.cap);
      } else {
        if (doc_path.empty())
          throw DocumentError("derive needs --scripted or a document");
        Document doc = parse_document(read_file(doc_path), opt.strict);
        AutoResult ar = derive_auto(pick_map(doc, map_name), opt.budget);
        examined = ar.examined;
        d = std::move(ar.derivation);
      }
      if (!d) {
        err << "no derivation found (examined " << examined << ")\n";
        return examined > opt.budget ? kExitInconclusive : kExitFail;
      }
      VerifyResult vr = verify(*d);
      if (!vr.ok) {
        err << "derivation failed verification: " << vr.diagnostic << "\n";
        return kExitFail;
      }
      deliver(opt, out, emit_certificate(*d));
      if (!opt.out_path.empty())
        out << "derived in " << d->steps.size()
            << " steps; certificate written to " << opt.out_path << "\n";
      return kExitPass;
    }

    if (verify_cmd->parsed()) {
      Derivation d = parse_certificate(read_file(cert_path));
      VerifyResult vr = verify(d);
      if (vr.ok) {
        out << "verified: " << d.steps.size() << " steps\n";
        return kExitPass;
      }
      out << "refuted at step " << vr.failing_step << ": " << vr.diagnostic
          << "\n";
      return kExitFail;
    }

    if (pp->parsed()) {
      std::vector<PPReport> reports;
      if (table) {
        std::ifstream in(manifest_path);
        if (!in) throw DocumentError("cannot open " + manifest_path);
        reports = pp_table(load_pp_manifest(in), opt.budget, opt.cap);
      } else {
        if (cof_text.empty() || ano_text.empty())
          throw DocumentError("pp needs --table or both --cof and --ano");
        reports.push_back(verify_case(GeneratorId::parse(cof_text),
                                      GeneratorId::parse(ano_text), opt.budget,
                                      opt.cap));
      }
      if (opt.machine()) {
        deliver(opt, out, pp_table_json(reports));
      } else {
        std::ostringstream text;
        for (const PPReport& r : reports) {
          text << r.cof.str() << " x " << r.ano.str() << ": " << r.verdict
               << " (" << strategy_name(r.strategy) << ", examined "
               << r.examined << ")";
          if (!r.detail.empty()) text << " " << r.detail;
          text << "\n";
        }
        deliver(opt, out, text.str());
      }
      bool starved = false, refuted = false;
      for (const PPReport& r : reports)
        if (!r.ok()) {
          if (r.truncated || r.examined >= opt.budget)
            starved = true;
          else
            refuted = true;
        }
      return refuted ? kExitFail : starved ? kExitInconclusive : kExitPass;
    }

    if (analyze->parsed()) {
      Document doc = parse_document(read_file(doc_path), opt.strict);
      FibrationProfile pr =
          check_family(pick_map(doc, map_name), opt.cap, opt.budget);
      if (opt.machine()) {
        deliver(opt, out, dump(profile_json(pr)));
      } else {
        std::ostringstream text;
        for (const ConditionRecord& c : pr.conditions) {
          text << c.name << ": " << verdict_name(c.verdict);
          if (!c.detail.empty()) text << " (" << c.detail << ")";
          text << "\n";
        }
        text << "locally-fibred=" << pr.locally_fibred
             << " functorial=" << pr.functorial << " o2=" << pr.o2
             << " o2c=" << pr.o2c << " coCartesian=" << pr.cocartesian.size()
             << " cartesian=" << pr.cartesian.size() << "\n"
             << (pr.pass() ? "pass"
                           : pr.inconclusive() ? "inconclusive" : "fail")
             << " up to cap " << pr.cap << "\n";
        deliver(opt, out, text.str());
      }
      return pr.pass()          ? kExitPass
             : pr.inconclusive() ? kExitInconclusive
                                 : kExitFail;
    }
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no command\n";
  return kExitInputError;
}

}  // namespace mbs
