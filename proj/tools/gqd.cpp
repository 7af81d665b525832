#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gqd/registry.hpp"

using namespace gqd;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- argument helpers ----

std::vector<int> parse_ns(const std::string& s) {
  auto num = [&](const std::string& t) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (...) {
      used = 0;
    }
    if (used == 0 || used != t.size()) throw Usage("bad n value '" + t + "'");
    return v;
  };
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    if (dots == std::string::npos) out.push_back(num(part));
    else {
      int a = num(part.substr(0, dots)), b = num(part.substr(dots + 2));
      if (a > b) throw Usage("empty n range '" + part + "'");
      for (int k = a; k <= b; ++k) out.push_back(k);
    }
  }
  if (out.empty()) throw Usage("no n given");
  for (int n : out)
    if (n < 2) throw Usage("n must be at least 2");
  return out;
}

Signature parse_sig(const std::string& s) {
  try {
    return Signature::parse(s);
  } catch (const ParseError& e) {
    throw Usage(e.what());  // already carries position and caret
  }
}

Rational parse_bound(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw Usage("bad --area-bound '" + s + "': " + e.what());
  }
}

GroupPtr make_group(const std::string& fam, int n) {
  if (fam == "G") return Group::G(n);
  if (fam == "Ghat") return Group::Ghat(n);
  if (fam == "K") return Group::K(n);
  if (fam == "H") return Group::H(n);
  throw Usage("unknown group family '" + fam + "' (G, Ghat, K, H)");
}

void emit(const Json& j, bool json, const std::string& table) {
  if (json) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << table;
  }
}

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

// ---- shared options ----

struct Common {
  std::string n = "2";
  std::string format = "table";
  int workers = 0;
  std::string area_bound;
  std::string signature;
  std::string mode = "riemann";
  std::string target;
  std::string group = "G";

  bool json() const { return format == "json"; }
};

void add_format(CLI::App* c, Common& o) {
  c->add_option("--format", o.format, "table | json")->check(CLI::IsMember({"table", "json"}));
}
void add_workers(CLI::App* c, Common& o) { c->add_option("--workers", o.workers, "worker threads (0 = default, 1 = serial)"); }

ContextPtr context_from(const Common& o, int n) {
  auto G = make_group(o.group, n);
  std::optional<Subgroup> target;
  if (!o.target.empty()) {
    if (!G->is_Gn()) throw Usage("--target-subgroup applies to the G family only");
    if (o.target != "C" && o.target != "D" && o.target != "DC") throw Usage("--target-subgroup must be C, D or DC");
    target = named_index_two(G, o.target);
  }
  Mode m;
  try {
    m = parse_mode(o.mode);
  } catch (const std::exception&) {
    throw Usage("--mode must be riemann, bordered or unbordered");
  }
  return make_context(parse_sig(o.signature), G, m, target);
}

// ---- subcommands ----

int cmd_group(const Common& o, const std::string& report) {
  Json all = Json::array();
  std::ostringstream t;
  for (int n : parse_ns(o.n)) {
    auto G = make_group(o.group, n);
    Json j;
    j["group"] = o.group;
    j["n"] = n;
    j["order"] = G->order();
    t << o.group << "_" << n << " (order " << G->order() << ")\n";
    if (report == "classes" || report == "all") {
      auto cls = conjugacy_classes(*G);
      Json a = Json::array();
      t << "  conjugacy classes: " << cls.size() << "\n  " << pad("rep", 14) << pad("order", 7) << "size\n";
      for (const auto& c : cls) {
        a.push_back({{"representative", G->name(c.rep)}, {"order", G->elem_order(c.rep)}, {"size", c.size}});
        t << "  " << pad(G->name(c.rep), 14) << pad(std::to_string(G->elem_order(c.rep)), 7) << c.size << "\n";
      }
      j["class_count"] = cls.size();
      j["classes"] = a;
    }
    if (report == "involutions" || report == "all") {
      j["involutions"] = involution_count(*G);
      t << "  involutions: " << involution_count(*G) << "\n";
    }
    if (report == "automorphisms" || report == "all") {
      auto A = automorphisms(*G);
      j["automorphism_count"] = A.size();
      t << "  |Aut|: " << A.size() << "\n";
    }
    if (report == "subgroups" || report == "all") {
      if (G->is_Gn()) {
        Json s = Json::array();
        t << "  index-two subgroups:\n";
        for (auto w : {"C", "D", "DC"}) {
          auto H = named_index_two(G, w);
          auto HG = as_group(H);
          Json gens = Json::array();
          std::string gt;
          for (int g : H.gens) {
            gens.push_back(G->name(g));
            gt += (gt.empty() ? "" : ", ") + G->name(g);
          }
          s.push_back({{"name", w}, {"generators", gens}, {"order", H.order()}, {"involutions", involution_count(*HG)}});
          t << "    " << pad(w, 4) << "<" << gt << ">  order " << H.order() << ", involutions " << involution_count(*HG) << "\n";
        }
        j["index_two_subgroups"] = s;
      } else {
        auto subs = index_two_subgroups(G);
        j["index_two_subgroup_count"] = subs.size();
        t << "  index-two subgroups: " << subs.size() << "\n";
      }
    }
    all.push_back(j);
  }
  emit(Json{{"groups", all}}, o.json(), t.str());
  return 0;
}

int cmd_signature(const Common& o, int order) {
  auto sig = parse_sig(o.signature);
  auto pres = presentation(sig);
  Json j;
  j["signature"] = sig.str();
  j["area"] = to_string(reduced_area(sig));
  j["hyperbolic"] = hyperbolic(sig);
  Json gens = Json::array(), rels = Json::array();
  for (const auto& g : pres.gens) gens.push_back(g.symbol());
  for (const auto& r : pres.relations) rels.push_back(pres.relation_text(r));
  j["generators"] = gens;
  j["relations"] = rels;
  std::ostringstream t;
  t << "signature  " << sig.str() << "\narea       " << to_string(reduced_area(sig)) << "\nhyperbolic "
    << (hyperbolic(sig) ? "yes" : "no") << "\ngenerators";
  for (const auto& g : pres.gens) t << " " << g.symbol();
  t << "\nrelations\n";
  for (const auto& r : pres.relations) t << "  " << pres.relation_text(r) << "\n";
  if (order > 0) {
    KernelKind k = kernel_kind(parse_mode(o.mode));
    try {
      long g = rh_genus(sig, order, k);
      j["genus"] = g;
      t << "genus      " << g << " (|G| = " << order << ", " << to_string(k) << ")\n";
    } catch (const IncompatibleOrder& e) {
      j["genus"] = nullptr;
      j["genus_error"] = e.what();
      t << "genus      none: " << e.what() << "\n";
    }
  }
  emit(j, o.json(), t.str());
  return 0;
}

int cmd_epi(const Common& o, bool count_only, bool serial) {
  Json all = Json::array();
  std::ostringstream t;
  for (int n : parse_ns(o.n)) {
    auto ctx = context_from(o, n);
    Json j;
    j["n"] = n;
    j["signature"] = ctx->sig.str();
    j["mode"] = to_string(ctx->mode);
    long g = rh_integral(ctx->sig, ctx->group->order(), kernel_kind(ctx->mode))
                 ? rh_genus(ctx->sig, ctx->group->order(), kernel_kind(ctx->mode))
                 : -1;
    j["genus"] = g >= 0 ? Json(g) : Json(nullptr);
    if (count_only) {
      long c = count_vectors(ctx, {o.workers, true});
      j["count"] = c;
      t << "n=" << n << " " << ctx->sig.str() << " genus " << g << ": " << c << " vectors\n";
    } else {
      auto vs = serial ? enumerate_vectors_serial(ctx) : enumerate_vectors(ctx, {o.workers, true});
      j["count"] = vs.size();
      Json a = Json::array();
      t << "n=" << n << " " << ctx->sig.str() << " genus " << g << ": " << vs.size() << " vectors\n";
      for (const auto& v : vs) {
        a.push_back(to_json(v));
        std::string line;
        for (size_t k = 0; k < v.images.size(); ++k)
          line += (k ? ", " : "") + ctx->pres.gens[k].symbol() + "=" + ctx->group->name(v.images[k]);
        t << "  (" << line << ")\n";
      }
      j["vectors"] = a;
    }
    all.push_back(j);
  }
  emit(Json{{"results", all}}, o.json(), t.str());
  return 0;
}

int cmd_classify(const Common& o) {
  Json all = Json::array();
  std::ostringstream t;
  for (int n : parse_ns(o.n)) {
    auto ctx = context_from(o, n);
    auto cl = classify_all(ctx, o.workers);
    Json j = to_json(cl);
    j["n"] = n;
    j["signature"] = ctx->sig.str();
    all.push_back(j);
    t << "n=" << n << " " << ctx->sig.str() << ": " << cl.orbits.size() << " orbit(s), " << cl.distinct_invariants
      << " distinct invariant(s)" << (cl.coarse ? " [coarse: automorphisms only]" : "") << "\n";
    for (const auto& r : cl.rejected_moves) t << "  rejected move " << r << "\n";
    for (const auto& orb : cl.orbits) {
      std::string line;
      for (size_t k = 0; k < orb.representative.images.size(); ++k)
        line += (k ? ", " : "") + ctx->pres.gens[k].symbol() + "=" + ctx->group->name(orb.representative.images[k]);
      t << "  size " << pad(std::to_string(orb.size), 8) << "(" << line << ")  " << orb.invariant.str() << "\n";
    }
  }
  emit(Json{{"results", all}}, o.json(), t.str());
  return 0;
}

int cmd_dessin(const Common& o) {
  auto ns = parse_ns(o.n);
  if (o.format == "dot") {
    for (int n : ns) std::cout << dessin_data(gn_dessin(*Group::G(n)).monodromy).dot();
    return 0;
  }
  Json all = Json::array();
  std::ostringstream t;
  for (int n : ns) {
    auto G = Group::G(n);
    auto d = gn_dessin(*G);
    auto g = dessin_data(d.monodromy);
    Json j = Json::parse(g.json());
    Json out{{"n", n},
             {"eta", G->name(d.eta)},
             {"sigma", G->name(d.sigma)},
             {"tau", G->name(d.tau)},
             {"edges_total", d.monodromy.edges}};
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value();
    all.push_back(out);
    t << "n=" << n << ": genus " << g.genus << ", " << g.white_valency.size() << " white, " << g.black_valency.size()
      << " black, " << g.faces() << " faces\n";
    for (auto [w, b, m] : g.edges) t << "  w" << w << " - b" << b << " x" << m << "\n";
  }
  emit(Json{{"dessins", all}}, o.json(), t.str());
  return 0;
}

std::string verify_table(const VerifyReport& r) {
  std::ostringstream t;
  t << r.theorem << ": " << r.statement << "\n";
  for (const auto& v : r.results) {
    t << "  n=" << pad(std::to_string(v.n), 4) << to_string(v.status);
    const auto& ev = v.evidence;
    if (ev.contains("checks")) {
      std::string fails;
      for (const auto& c : ev["checks"]) {
        if (c["pass"].is_boolean() && !c["pass"].get<bool>()) fails += " " + c["check"].get<std::string>();
        if (c["pass"].is_null()) fails += " " + c["check"].get<std::string>() + "(bound)";
        if (c.contains("detail") && c["detail"].is_object() && c["detail"].contains("value") &&
            c["detail"].contains("invariant"))
          t << "  " << c["detail"]["invariant"].get<std::string>() << "=" << c["detail"]["value"];
      }
      if (!fails.empty()) t << "  failing:" << fails;
    }
    t << "\n";
  }
  return t.str();
}

int cmd_verify(const Common& o, const std::string& theorem) {
  VerifyOptions vo;
  vo.workers = o.workers;
  if (!o.area_bound.empty()) vo.area_bound = parse_bound(o.area_bound);
  VerifyReport r;
  try {
    r = verify_theorem(theorem, parse_ns(o.n), vo);
  } catch (const UnknownTheorem& e) {
    throw Usage(e.what());
  }
  emit(r.to_json(), o.json(), verify_table(r));
  return r.exit_code();
}

int cmd_search(const Common& o, const std::string& invariant, const std::string& scenario) {
  SearchOptions so;
  so.workers = o.workers;
  if (!o.area_bound.empty()) so.area_bound = parse_bound(o.area_bound);
  Json all = Json::array();
  std::ostringstream t;
  int code = 0;
  for (int n : parse_ns(o.n)) {
    try {
      GenusRecord r;
      if (invariant == "sigma0") r = strong_symmetric_genus(n, so);
      else if (invariant == "sigma_p") r = pure_symmetric_genus(n, so);
      else if (invariant == "sigma_hyp") {
        if (o.target.empty()) throw Usage("sigma_hyp needs --target-subgroup C|D|DC");
        r = symmetric_hyperbolic_genus(n, o.target, so);
      } else if (invariant == "rho") r = real_genus(n, so);
      else if (invariant == "crosscap") r = symmetric_crosscap(n, so);
      else if (invariant == "pseudo_real") r = pseudo_real_min(n, scenario, so);
      else throw Usage("unknown invariant '" + invariant + "'");
      all.push_back(to_json(r));
      t << r.invariant << (r.scenario.empty() ? "" : "[" + r.scenario + "]") << " n=" << n << ": " << r.value << " on "
        << r.witness_sig.str() << "  (" << r.certificates.size() << " smaller signatures certified, bound "
        << to_string(r.bound) << ")\n";
      for (const auto& c : r.certificates) t << "    " << pad(c.sig.str(), 30) << c.status << "\n";
      for (const auto& a : r.alternatives) t << "    also " << a.str() << "\n";
    } catch (const SearchExhausted& e) {
      all.push_back({{"invariant", invariant}, {"n", n}, {"inconclusive", e.what()}});
      t << invariant << " n=" << n << ": inconclusive, " << e.what() << "\n";
      code = 3;
    } catch (const DomainError& e) {
      throw Usage(e.what());
    }
  }
  emit(Json{{"results", all}}, o.json(), t.str());
  return code;
}

// key=value lines; theorems may be listed comma separated or with repeated keys
int cmd_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read config '" + path + "'");
  std::vector<std::string> theorems;
  std::string ns = "2..4", output, bound;
  int workers = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Usage(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k == "theorem" || k == "theorems") {
      std::stringstream ss(v);
      std::string id;
      while (std::getline(ss, id, ','))
        if (!trim(id).empty()) theorems.push_back(trim(id));
    } else if (k == "n" || k == "n_range") ns = v;
    else if (k == "area_bound") bound = v;
    else if (k == "workers") workers = std::stoi(v);
    else if (k == "output" || k == "report") output = v;
    else throw Usage(path + ":" + std::to_string(lineno) + ": unknown key '" + k + "'");
  }
  for (const auto& id : theorems) {
    const auto& reg = theorem_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const TheoremInfo& t) { return t.id == id; }))
      throw Usage("unknown theorem id '" + id + "'; valid ids: " + theorem_ids_text());
  }
  VerifyOptions vo;
  vo.workers = workers;
  if (!bound.empty()) vo.area_bound = parse_bound(bound);
  Json rep;
  rep["schema_version"] = kSchemaVersion;
  Json reports = Json::array();
  int code = 0;
  std::vector<int> nlist = theorems.empty() ? std::vector<int>{} : parse_ns(ns);
  for (const auto& id : theorems) {
    auto r = verify_theorem(id, nlist, vo);
    code = std::max(code, r.exit_code());
    reports.push_back(r.to_json());
    (output.empty() ? std::cerr : std::cout) << verify_table(r);
  }
  rep["exit_code"] = code;
  rep["reports"] = reports;
  if (output.empty()) std::cout << rep.dump(2) << "\n";
  else {
    std::ofstream out(output);
    if (!out) throw Usage("cannot write report '" + output + "'");
    out << rep.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized quasi-dihedral group actions: structure, enumeration, classification, verification"};
  app.require_subcommand(1);
  Common o;
  std::string report = "all", theorem, invariant, scenario = "conformal_antic", config;
  int order = 0;
  bool count_only = false, serial = false;

  auto* grp = app.add_subcommand("group", "group structure report");
  grp->add_option("--n,--n-range", o.n, "n, list or range a..b");
  grp->add_option("--group", o.group, "G | Ghat | K | H");
  grp->add_option("--report", report, "classes | involutions | automorphisms | subgroups | all")
      ->check(CLI::IsMember({"classes", "involutions", "automorphisms", "subgroups", "all"}));
  add_format(grp, o);

  auto* sg = app.add_subcommand("signature", "parse a signature, show area, presentation and genus");
  sg->add_option("--signature", o.signature, "e.g. \"(0;+;[2,4,8];{-})\"")->required();
  sg->add_option("--group-order", order, "group order for the Riemann-Hurwitz genus");
  sg->add_option("--mode", o.mode, "riemann | bordered | unbordered");
  add_format(sg, o);

  auto* ep = app.add_subcommand("epi", "enumerate surface-kernel epimorphisms");
  for (auto* c : {ep}) {
    c->add_option("--n,--n-range", o.n, "n, list or range a..b");
    c->add_option("--signature", o.signature)->required();
    c->add_option("--mode", o.mode, "riemann | bordered | unbordered");
    c->add_option("--target-subgroup", o.target, "C | D | DC");
    c->add_option("--group", o.group, "G | Ghat | K | H");
  }
  ep->add_flag("--count", count_only, "only count");
  ep->add_flag("--serial", serial, "use the serial reference enumerator");
  add_format(ep, o);
  add_workers(ep, o);

  auto* cl = app.add_subcommand("classify", "orbits of generating vectors under automorphisms and moves");
  cl->add_option("--n,--n-range", o.n, "n, list or range a..b");
  cl->add_option("--signature", o.signature)->required();
  cl->add_option("--mode", o.mode, "riemann | bordered | unbordered");
  cl->add_option("--target-subgroup", o.target, "C | D | DC");
  cl->add_option("--group", o.group, "G | Ghat | K | H");
  add_format(cl, o);
  add_workers(cl, o);

  auto* ds = app.add_subcommand("dessin", "regular dessin of G_n");
  ds->add_option("--n,--n-range", o.n, "n, list or range a..b");
  ds->add_option("--format", o.format, "table | json | dot")->check(CLI::IsMember({"table", "json", "dot"}));

  auto* vf = app.add_subcommand("verify", "check a registered statement");
  vf->add_option("--theorem", theorem, "theorem id")->required();
  vf->add_option("--n,--n-range", o.n, "n, list or range a..b");
  vf->add_option("--area-bound", o.area_bound, "fixed search bound p/q (no widening)");
  add_format(vf, o);
  add_workers(vf, o);

  auto* se = app.add_subcommand("search", "minimal-genus search");
  se->add_option("--invariant", invariant, "sigma0 | sigma_p | sigma_hyp | rho | crosscap | pseudo_real")->required();
  se->add_option("--scenario", scenario, "conformal_antic | conformal_only_odd | index_two_even");
  se->add_option("--target-subgroup", o.target, "C | D | DC (sigma_hyp)");
  se->add_option("--n,--n-range", o.n, "n, list or range a..b");
  se->add_option("--area-bound", o.area_bound, "search bound p/q");
  add_format(se, o);
  add_workers(se, o);

  auto* bt = app.add_subcommand("batch", "run verifications listed in a key=value config");
  bt->add_option("config", config, "config path")->required();

  auto* ls = app.add_subcommand("theorems", "list registered theorem ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*grp) return cmd_group(o, report);
    if (*sg) return cmd_signature(o, order);
    if (*ep) return cmd_epi(o, count_only, serial);
    if (*cl) return cmd_classify(o);
    if (*ds) return cmd_dessin(o);
    if (*vf) return cmd_verify(o, theorem);
    if (*se) return cmd_search(o, invariant, scenario);
    if (*bt) return cmd_batch(config);
    if (*ls) {
      for (const auto& t : theorem_registry()) std::cout << pad(t.id, 17) << (t.core ? "" : "(extra) ") << t.statement << "\n";
      return 0;
    }
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedShape& e) {
    std::cerr << "error: unsupported: " << e.what() << "\n";
    return 1;
  } catch (const IncompatibleOrder& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
