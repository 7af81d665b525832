#include "gqd/report.hpp"

namespace gqd {

Json to_json(const GeneratingVector& v) {
  Json a = Json::array();
  for (size_t k = 0; k < v.images.size(); ++k) {
    auto label = v.ctx->pres.gens[k].label();
    auto colon = label.find(':');
    a.push_back({{"gen_kind", label.substr(0, colon)},
                 {"index", label.substr(colon + 1)},
                 {"element", v.ctx->group->name(v.images[k])}});
  }
  return a;
}

Json to_json(const GenusRecord& r) {
  Json j;
  j["invariant"] = r.invariant;
  j["n"] = r.n;
  if (!r.scenario.empty()) j["scenario"] = r.scenario;
  j["value"] = r.value;
  Json w;
  w["signature"] = r.witness_sig.str();
  if (r.witness) w["vector"] = to_json(*r.witness);
  j["witness"] = w;
  j["bound"] = to_string(r.bound);
  j["searched"] = r.searched;
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json e{{"signature", c.sig.str()}, {"area", to_string(reduced_area(c.sig))}, {"status", c.status}};
    if (c.genus >= 0) e["genus"] = c.genus;
    certs.push_back(e);
  }
  j["certificates"] = certs;
  Json alts = Json::array();
  for (const auto& s : r.alternatives) alts.push_back(s.str());
  j["alternatives"] = alts;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["orbit_count"] = c.orbits.size();
  j["distinct_invariants"] = c.distinct_invariants;
  j["coarse"] = c.coarse;
  j["rejected_moves"] = c.rejected_moves;
  Json orbits = Json::array();
  for (const auto& o : c.orbits)
    orbits.push_back({{"representative", to_json(o.representative)}, {"size", o.size}, {"invariant", o.invariant.str()}});
  j["orbits"] = orbits;
  return j;
}

Json to_json(const JacobianLedger& l) {
  Json j;
  j["n"] = l.n;
  j["target_genus"] = l.target_genus;
  Json e = Json::array();
  for (const auto& x : l.entries) e.push_back({{"factor", x.factor}, {"multiplicity", x.multiplicity}, {"genus", x.genus}});
  j["entries"] = e;
  auto side = [](const std::vector<LedgerEntry>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back({{"factor", x.factor}, {"multiplicity", x.multiplicity}, {"genus", x.genus}});
    return a;
  };
  j["dropped_left"] = side(l.dropped_left);
  j["dropped_right"] = side(l.dropped_right);
  j["valid"] = l.valid();
  j["full_valid"] = l.full_valid();
  return j;
}

Json to_json(const FixedPointReport& r, const Group& G) {
  Json a = Json::array();
  for (auto [g, f] : r.by_class_rep) a.push_back({{"element", G.name(g)}, {"fixed_points", f}});
  return a;
}

Json to_json(const QuotientOrbifold& q) {
  return Json{{"genus", q.genus}, {"orientable", q.orientable}, {"cone_orders", q.cone_orders}, {"signature", q.str()}};
}

}  // namespace gqd
