#include "charkern/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>

namespace charkern {

namespace {

void require_keys(const ordered_json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const char* what) {
  if (!j.is_object()) throw SpecInvalid(std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key))
      throw SpecInvalid(std::string(what) + ": unknown field '" + key + "'");
  }
  for (const auto& key : required)
    if (!j.contains(key)) throw SpecInvalid(std::string(what) + ": missing field '" + key + "'");
}

std::uint64_t get_u64(const ordered_json& j, const char* key, const char* what) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw SpecInvalid(std::string(what) + ": field '" + key + "' must be an integer");
  if (v.is_number_integer() && v.get<std::int64_t>() < 0)
    throw SpecInvalid(std::string(what) + ": field '" + key + "' must be non-negative");
  return v.get<std::uint64_t>();
}

int get_int(const ordered_json& j, const char* key, const char* what) {
  std::uint64_t v = get_u64(j, key, what);
  if (v > INT32_MAX) throw SpecInvalid(std::string(what) + ": field '" + key + "' out of range");
  return static_cast<int>(v);
}

std::vector<std::vector<std::int64_t>> get_generators(const ordered_json& j, const char* what) {
  const auto& v = j.at("generators");
  if (!v.is_array() || v.empty())
    throw SpecInvalid(std::string(what) + ": 'generators' must be a non-empty array");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& gen : v) {
    if (!gen.is_array())
      throw SpecInvalid(std::string(what) + ": each generator must be an integer array");
    std::vector<std::int64_t> row;
    for (const auto& x : gen) {
      if (!x.is_number_integer() && !x.is_number_unsigned())
        throw SpecInvalid(std::string(what) + ": generator entries must be integers");
      row.push_back(x.get<std::int64_t>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

GroupSpec parse_group_spec(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw SpecInvalid("group spec: missing string field 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  GroupSpec s;
  if (kind == "cyclic") {
    require_keys(j, {"kind", "n"}, {}, "cyclic");
    s.kind = GroupSpec::Kind::cyclic;
    s.n = get_u64(j, "n", "cyclic");
  } else if (kind == "direct_product") {
    require_keys(j, {"kind", "factors"}, {}, "direct_product");
    const auto& f = j.at("factors");
    if (!f.is_array() || f.empty())
      throw SpecInvalid("direct_product: 'factors' must be a non-empty array");
    s.kind = GroupSpec::Kind::direct_product;
    for (const auto& sub : f) s.factors.push_back(parse_group_spec(sub));
  } else if (kind == "semidirect_cyclic") {
    require_keys(j, {"kind", "pa", "pb", "r"}, {}, "semidirect_cyclic");
    s.kind = GroupSpec::Kind::semidirect_cyclic;
    s.pa = get_u64(j, "pa", "semidirect_cyclic");
    s.pb = get_u64(j, "pb", "semidirect_cyclic");
    s.r = get_u64(j, "r", "semidirect_cyclic");
  } else if (kind == "matrix_group") {
    require_keys(j, {"kind", "dim", "modulus", "generators"}, {}, "matrix_group");
    s.kind = GroupSpec::Kind::matrix_group;
    s.dim = get_int(j, "dim", "matrix_group");
    s.modulus = get_u64(j, "modulus", "matrix_group");
    s.generators = get_generators(j, "matrix_group");
  } else if (kind == "permutation_group") {
    require_keys(j, {"kind", "degree", "generators"}, {}, "permutation_group");
    s.kind = GroupSpec::Kind::permutation_group;
    s.degree = get_int(j, "degree", "permutation_group");
    s.generators = get_generators(j, "permutation_group");
  } else if (kind == "unitriangular") {
    require_keys(j, {"kind", "dim", "p"}, {}, "unitriangular");
    s.kind = GroupSpec::Kind::unitriangular;
    s.dim = get_int(j, "dim", "unitriangular");
    s.p = get_u64(j, "p", "unitriangular");
  } else if (kind == "preset") {
    require_keys(j, {"kind", "name"}, {}, "preset");
    if (!j.at("name").is_string()) throw SpecInvalid("preset: 'name' must be a string");
    s.kind = GroupSpec::Kind::preset;
    s.name = j.at("name").get<std::string>();
  } else {
    throw SpecInvalid("group spec: unknown kind '" + kind + "'");
  }
  return s;
}

ordered_json group_spec_to_json(const GroupSpec& s) {
  ordered_json j;
  switch (s.kind) {
    case GroupSpec::Kind::cyclic:
      j["kind"] = "cyclic";
      j["n"] = s.n;
      break;
    case GroupSpec::Kind::direct_product: {
      j["kind"] = "direct_product";
      auto& f = j["factors"] = ordered_json::array();
      for (const auto& sub : s.factors) f.push_back(group_spec_to_json(sub));
      break;
    }
    case GroupSpec::Kind::semidirect_cyclic:
      j["kind"] = "semidirect_cyclic";
      j["pa"] = s.pa;
      j["pb"] = s.pb;
      j["r"] = s.r;
      break;
    case GroupSpec::Kind::matrix_group:
      j["kind"] = "matrix_group";
      j["dim"] = s.dim;
      j["modulus"] = s.modulus;
      j["generators"] = s.generators;
      break;
    case GroupSpec::Kind::permutation_group:
      j["kind"] = "permutation_group";
      j["degree"] = s.degree;
      j["generators"] = s.generators;
      break;
    case GroupSpec::Kind::unitriangular:
      j["kind"] = "unitriangular";
      j["dim"] = s.dim;
      j["p"] = s.p;
      break;
    case GroupSpec::Kind::preset:
      j["kind"] = "preset";
      j["name"] = s.name;
      break;
  }
  return j;
}

std::vector<CorpusEntry> parse_manifest(const ordered_json& j) {
  // "count" appears in search output so a found-manifest round-trips as input
  require_keys(j, {"entries"}, {"count"}, "manifest");
  const auto& entries = j.at("entries");
  if (!entries.is_array()) throw SpecInvalid("manifest: 'entries' must be an array");
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  for (const auto& ej : entries) {
    require_keys(ej, {"name", "spec"}, {"tags"}, "manifest entry");
    CorpusEntry e;
    if (!ej.at("name").is_string()) throw SpecInvalid("manifest entry: 'name' must be a string");
    e.name = ej.at("name").get<std::string>();
    if (!names.insert(e.name).second)
      throw SpecInvalid("manifest: duplicate entry name '" + e.name + "'");
    e.spec = parse_group_spec(ej.at("spec"));
    if (ej.contains("tags")) {
      if (!ej.at("tags").is_array()) throw SpecInvalid("manifest entry: 'tags' must be an array");
      for (const auto& t : ej.at("tags")) {
        if (!t.is_string()) throw SpecInvalid("manifest entry: tags must be strings");
        e.tags.push_back(t.get<std::string>());
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

ordered_json manifest_to_json(const std::vector<CorpusEntry>& entries) {
  ordered_json j;
  auto& arr = j["entries"] = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json ej;
    ej["name"] = e.name;
    ej["spec"] = group_spec_to_json(e.spec);
    ej["tags"] = e.tags;
    arr.push_back(std::move(ej));
  }
  return j;
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecInvalid("cannot open '" + path + "'");
  ordered_json j = ordered_json::parse(in, nullptr, false);
  if (j.is_discarded()) throw SpecInvalid("'" + path + "' is not valid JSON");
  return j;
}

void write_json_atomic(const std::string& path, const ordered_json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InternalError("cannot write '" + tmp + "'");
    out << j.dump(2) << "\n";
    if (!out) throw InternalError("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw InternalError("cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace charkern
