// charkern: analyze a finite group's character-kernel structure, verify the
// claim registry over a corpus, search an ambient group for subgroup
// witnesses, or list the built-in presets.
//
// Exit codes: 0 success (verify: no in-scope fail), 1 verify found an
// in-scope fail, 2 input/spec/manifest error, 3 group over the element cap,
// 4 internal pipeline failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charkern/catalog.hpp"
#include "charkern/json_io.hpp"
#include "charkern/reports.hpp"
#include "charkern/verifier.hpp"

namespace {

using namespace charkern;

GroupSpec load_spec_arg(const std::string& arg) {
  constexpr const char* kPrefix = "preset:";
  if (arg.rfind(kPrefix, 0) == 0) return preset(arg.substr(7));
  return parse_group_spec(load_json_file(arg));
}

// presets keep their registry name in reports; files fall back to the
// builder-assigned structural name
std::string report_name(const std::string& arg, const GroupPtr& g) {
  if (arg.rfind("preset:", 0) == 0) return arg.substr(7);
  return g->name;
}

std::vector<std::string> parse_claims_arg(const std::string& arg) {
  if (arg.empty()) return claim_registry();
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= arg.size()) {
    std::size_t comma = arg.find(',', start);
    if (comma == std::string::npos) comma = arg.size();
    std::string id = arg.substr(start, comma - start);
    while (!id.empty() && id.front() == ' ') id.erase(id.begin());
    while (!id.empty() && id.back() == ' ') id.pop_back();
    if (!id.empty()) {
      if (!is_known_claim(id)) {
        std::string msg = "unknown claim '" + id + "'; valid ids:";
        for (const auto& known : claim_registry()) msg += " " + known;
        throw UnknownClaim(msg);
      }
      out.push_back(std::move(id));
    }
    start = comma + 1;
  }
  if (out.empty()) throw UnknownClaim("claim filter selected nothing");
  return out;
}

void emit(const ordered_json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_atomic(out_path, j);
  }
}

int cmd_analyze(const std::string& spec_arg, const std::string& out_path,
                const BuildOptions& build) {
  auto spec = load_spec_arg(spec_arg);
  auto g = build_group(resolve_spec(spec), build);
  auto bundle = make_bundle(report_name(spec_arg, g), g);
  emit(analyze_report(bundle), out_path);
  return 0;
}

int cmd_verify(const std::string& corpus_path, const std::string& claims_arg,
               const std::string& out_path, const BuildOptions& build, int jobs,
               bool include_p2) {
  std::vector<CorpusEntry> entries;
  if (corpus_path.empty()) {
    entries = default_corpus(include_p2);
  } else {
    entries = parse_manifest(load_json_file(corpus_path));
  }
  auto claims = parse_claims_arg(claims_arg);
  auto res = verify_corpus(entries, claims, build, jobs);
  emit(corpus_result_to_json(res, claims), out_path);
  for (const auto& [group, message] : res.errors)
    std::cerr << "error: " << group << ": " << message << "\n";
  return has_in_scope_fail(res) ? 1 : 0;
}

int cmd_search(const std::string& spec_arg, std::uint64_t order, int nclass, int limit,
               const std::string& out_path, const BuildOptions& build) {
  SearchOptions opts;
  opts.order = order;
  if (nclass >= 0) opts.nilpotency = nclass;
  opts.limit = static_cast<std::size_t>(limit);
  opts.build = build;
  auto found = search_subgroups(resolve_spec(load_spec_arg(spec_arg)), opts);
  ordered_json j = manifest_to_json(found);
  j["count"] = found.size();
  emit(j, out_path);
  return 0;
}

int cmd_list(const std::string& out_path) {
  ordered_json j;
  auto& presets = j["presets"] = ordered_json::array();
  for (const auto& info : preset_registry()) {
    ordered_json e;
    e["name"] = info.name;
    e["order"] = info.order;
    e["tags"] = info.tags;
    presets.push_back(std::move(e));
  }
  emit(j, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character tables and kernel invariants of finite groups"};
  app.require_subcommand(1);

  std::string spec_arg, corpus_path, claims_arg, out_path;
  std::uint64_t order = 0;
  int nclass = -1, limit = 16, jobs = 1;
  bool include_p2 = false;
  BuildOptions build;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (stdout when omitted)");
    sub->add_option("--cap", build.element_cap, "element-count cap for group construction");
  };

  auto* analyze = app.add_subcommand("analyze", "full structural report for one group");
  analyze->add_option("--spec", spec_arg, "spec file path or preset:NAME")->required();
  add_common(analyze);

  auto* verify = app.add_subcommand("verify", "run claim checks over a corpus");
  verify->add_option("--corpus", corpus_path, "manifest file (built-in corpus when omitted)");
  verify->add_option("--claims", claims_arg, "comma-separated claim ids (default: all)");
  verify->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
  verify->add_flag("--include-p2", include_p2, "add the exploratory p=2 presets to the corpus");
  add_common(verify);

  auto* search = app.add_subcommand("search", "enumerate subgroups of an ambient group");
  search->add_option("--spec", spec_arg, "ambient spec file path or preset:NAME")->required();
  search->add_option("--order", order, "subgroup order to collect")->required();
  search->add_option("--class", nclass, "keep only this nilpotency class");
  search->add_option("--limit", limit, "stop after this many hits")->check(CLI::NonNegativeNumber);
  add_common(search);

  auto* list = app.add_subcommand("list", "list built-in presets");
  add_common(list);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(spec_arg, out_path, build);
    if (verify->parsed()) return cmd_verify(corpus_path, claims_arg, out_path, build, jobs, include_p2);
    if (search->parsed()) return cmd_search(spec_arg, order, nclass, limit, out_path, build);
    return cmd_list(out_path);
  } catch (const SpecInvalid& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownPreset& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownClaim& e) {
    std::cerr << "claims error: " << e.what() << "\n";
    return 2;
  } catch (const GroupTooLarge& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return 3;
  } catch (const AmbientTooLarge& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
