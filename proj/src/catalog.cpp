#include "fusionkit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef FUSIONKIT_CATALOG_DIR
#define FUSIONKIT_CATALOG_DIR "catalog"
#endif

namespace fusionkit {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string catalog_dir() {
  if (const char* env = std::getenv("FUSIONKIT_CATALOG")) return env;
  return FUSIONKIT_CATALOG_DIR;
}

std::vector<CatalogEntry> catalog_index() {
  std::vector<CatalogEntry> out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(catalog_dir() + "/index.json"));
    for (const auto& e : j.at("groups"))
      out.push_back({e.at("name").get<std::string>(), e.at("order").get<int>(),
                     e.at("file").get<std::string>()});
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("catalog index: ") + ex.what());
  }
  return out;
}

GroupSpec parse_group_spec(const std::string& json_text, int max_order) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, ex.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators") ||
      !j["degree"].is_number_integer() || !j["generators"].is_array())
    fail(ErrorCode::ParseError, "group spec needs integer \"degree\" and array \"generators\"");
  int degree = j["degree"].get<int>();
  std::vector<Perm> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) fail(ErrorCode::ParseError, "generators must be cycle strings");
    gens.push_back(parse_cycles(g.get<std::string>(), degree));
  }
  Group grp = Group::from_permutations(degree, gens, max_order);
  grp.name = j.value("name", std::string("G"));
  GroupSpec spec;
  spec.group = std::make_shared<const Group>(std::move(grp));
  if (j.contains("prime")) {
    if (!j["prime"].is_number_integer()) fail(ErrorCode::ParseError, "\"prime\" must be an integer");
    spec.prime = j["prime"].get<int>();
  }
  return spec;
}

GroupSpec load_group_spec(const std::string& path_or_name, int max_order) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(path_or_name, ec)) return parse_group_spec(read_file(path_or_name), max_order);
  std::string want = lower(path_or_name);
  if (want.size() > 5 && want.substr(want.size() - 5) == ".json") want.resize(want.size() - 5);
  for (const CatalogEntry& e : catalog_index()) {
    std::string stem = e.file.substr(0, e.file.size() - 5);
    if (lower(e.name) == want || stem == want)
      return parse_group_spec(read_file(catalog_dir() + "/" + e.file), max_order);
  }
  fail(ErrorCode::UnknownCatalogName, "no catalog group named \"" + path_or_name + "\"");
}

std::shared_ptr<const Group> catalog_group(const std::string& name) {
  return load_group_spec(name).group;
}

}  // namespace fusionkit
