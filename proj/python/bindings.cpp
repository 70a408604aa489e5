// python surface: every entry point takes and returns JSON strings so the
// wrapper package stays a thin json.loads layer
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "charkern/catalog.hpp"
#include "charkern/json_io.hpp"
#include "charkern/reports.hpp"
#include "charkern/verifier.hpp"

namespace py = pybind11;
using namespace charkern;

namespace {

GroupBundle bundle_from_spec_json(const std::string& spec_json, std::uint64_t cap) {
  BuildOptions build;
  if (cap) build.element_cap = cap;
  auto spec = resolve_spec(parse_group_spec(ordered_json::parse(spec_json)));
  auto g = build_group(spec, build);
  return make_bundle(g->name, g);
}

std::string analyze_json(const std::string& spec_json, std::uint64_t cap) {
  return analyze_report(bundle_from_spec_json(spec_json, cap)).dump(2);
}

std::string table_json(const std::string& spec_json, std::uint64_t cap) {
  return table_report(bundle_from_spec_json(spec_json, cap)).dump(2);
}

std::string verify_json(const std::optional<std::string>& manifest_json,
                        const std::optional<std::vector<std::string>>& claims, int jobs,
                        bool include_p2, std::uint64_t cap) {
  std::vector<CorpusEntry> entries = manifest_json
      ? parse_manifest(ordered_json::parse(*manifest_json))
      : default_corpus(include_p2);
  const auto ids = claims ? *claims : claim_registry();
  BuildOptions build;
  if (cap) build.element_cap = cap;
  auto res = verify_corpus(entries, ids, build, jobs);
  return corpus_result_to_json(res, ids).dump(2);
}

std::string search_json(const std::string& spec_json, std::uint64_t order,
                        const std::optional<int>& nclass, int limit, std::uint64_t cap) {
  SearchOptions opts;
  opts.order = order;
  opts.nilpotency = nclass;
  opts.limit = static_cast<std::size_t>(limit);
  if (cap) opts.build.element_cap = cap;
  auto found = search_subgroups(resolve_spec(parse_group_spec(ordered_json::parse(spec_json))), opts);
  ordered_json j = manifest_to_json(found);
  j["count"] = found.size();
  return j.dump(2);
}

std::string presets_json() {
  ordered_json j = ordered_json::array();
  for (const auto& info : preset_registry()) {
    ordered_json e;
    e["name"] = info.name;
    e["order"] = info.order;
    e["tags"] = info.tags;
    j.push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace

PYBIND11_MODULE(_charkern, m) {
  m.doc() = "exact character tables and kernel invariants of finite groups";
  m.def("analyze_json", &analyze_json, py::arg("spec_json"), py::arg("cap") = 0,
        "structural report for one group spec, as a JSON string");
  m.def("table_json", &table_json, py::arg("spec_json"), py::arg("cap") = 0,
        "full character table dump, as a JSON string");
  m.def("verify_json", &verify_json, py::arg("manifest_json") = py::none(),
        py::arg("claims") = py::none(), py::arg("jobs") = 1, py::arg("include_p2") = false,
        py::arg("cap") = 0, "claim verdicts over a corpus, as a JSON string");
  m.def("search_json", &search_json, py::arg("spec_json"), py::arg("order"),
        py::arg("nilpotency") = py::none(), py::arg("limit") = 16, py::arg("cap") = 0,
        "subgroup search over an ambient group, as a JSON string");
  m.def("presets_json", &presets_json, "built-in preset list, as a JSON string");
  m.def("claim_ids", [] { return claim_registry(); }, "all checkable claim ids");
}
