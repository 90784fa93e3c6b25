#include "fusionkit/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace fusionkit {

std::string subgroup_key(const Lattice& lat, int q) {
  std::string s;
  for (int x : lat.elements(q)) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

int subgroup_from_key(const Lattice& lat, const std::string& key) {
  ElementSet s;
  std::stringstream in(key);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int x = -1;
    try {
      x = std::stoi(tok);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad subgroup key " + key);
    }
    if (x < 0 || x >= lat.group().order()) fail(ErrorCode::ParseError, "element out of range in key " + key);
    s.set(x);
  }
  return lat.id_of(s);
}

Json subgroup_json(const Lattice& lat, int q) {
  Json labels = Json::array();
  for (int x : lat.elements(q)) labels.push_back(lat.group().label(x));
  return Json{{"key", subgroup_key(lat, q)}, {"order", lat.order(q)}, {"elements", labels}};
}

Json map_json(const Map& m) {
  Json out = Json::array();
  for (size_t x = 0; x < m.size(); ++x)
    if (m[x] >= 0) out.push_back({static_cast<int>(x), static_cast<int>(m[x])});
  return out;
}

Map map_from_json(const Json& j, int host_order) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "map must be an array of pairs");
  Map m(host_order, -1);
  for (const Json& pr : j) {
    if (!pr.is_array() || pr.size() != 2) fail(ErrorCode::ParseError, "map entry must be a pair");
    int x = pr[0].get<int>();
    int y = pr[1].get<int>();
    if (x < 0 || y < 0 || x >= host_order || y >= host_order) fail(ErrorCode::ParseError, "map entry out of range");
    m[x] = static_cast<int16_t>(y);
  }
  return m;
}

namespace {

Json host_json(const Lattice& lat) {
  const Group& g = lat.group();
  Json gens = Json::array();
  for (int x : lat.gens(lat.top())) gens.push_back(g.label(x));
  return Json{{"name", g.name}, {"order", g.order()}, {"generators", gens}};
}

}  // namespace

Json fusion_to_json(const FusionSystem& f) {
  const Lattice& lat = f.lattice();
  Json classes = Json::array();
  for (const ConjClass& c : f.classes()) {
    Json members = Json::array();
    for (int m : c.members) members.push_back(subgroup_key(lat, m));
    Json gens = Json::array();
    for (const Map& a : c.aut_gens) gens.push_back(map_json(a));
    classes.push_back({{"order", lat.order(c.rep)},
                       {"members", members},
                       {"aut_order", c.aut.size()},
                       {"aut_generators", gens}});
  }
  Json gens = Json::array();
  for (const Map& m : f.generators()) gens.push_back(map_json(m));
  return Json{{"host", host_json(lat)},
              {"prime", f.prime()},
              {"base", subgroup_json(lat, f.base())},
              {"morphism_count", f.morphism_count()},
              {"classes", classes},
              {"generators", gens}};
}

FusionSystem fusion_from_json(const Json& j, std::shared_ptr<const Lattice> lat) {
  try {
    if (j.at("host").at("order").get<int>() != lat->group().order())
      fail(ErrorCode::ParseError, "host order does not match");
    int base = subgroup_from_key(*lat, j.at("base").at("key").get<std::string>());
    std::vector<Map> seeds;
    for (const Json& m : j.at("generators")) seeds.push_back(map_from_json(m, lat->group().order()));
    FusionSystem f = generated_fusion(lat, j.at("prime").get<int>(), base, seeds);
    if (j.contains("morphism_count") && j["morphism_count"].get<size_t>() != f.morphism_count())
      fail(ErrorCode::ParseError, "morphism count does not match the generators");
    return f;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Json automap_to_json(const Lattice& lat, const AutMap& a) {
  Json assign = Json::object();
  for (int u : lat.subgroups_of(a.t)) {
    if (!a.defined(u)) continue;
    Json maps = Json::array();
    for (const Map& m : a.a[u]) maps.push_back(map_json(m));
    assign[subgroup_key(lat, u)] = maps;
  }
  return Json{{"t", subgroup_key(lat, a.t)}, {"assignment", assign}};
}

AutMap automap_from_json(const Json& j, const Lattice& lat) {
  try {
    AutMap a;
    a.t = subgroup_from_key(lat, j.at("t").get<std::string>());
    a.a.assign(lat.size(), {});
    for (const auto& [key, maps] : j.at("assignment").items()) {
      int u = subgroup_from_key(lat, key);
      for (const Json& m : maps) a.a[u].push_back(map_from_json(m, lat.group().order()));
      std::sort(a.a[u].begin(), a.a[u].end());
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

}  // namespace fusionkit
