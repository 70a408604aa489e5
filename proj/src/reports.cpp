#include "charkern/reports.hpp"

#include <map>
#include <string>

namespace charkern {

namespace {

ordered_json subgroup_summary(const Subgroup& s) {
  ordered_json j;
  j["order"] = s.members.size();
  j["type"] = abelian_type(subgroup_to_group(s));
  return j;
}

}  // namespace

ordered_json analyze_report(const GroupBundle& b) {
  ordered_json j;
  j["group"] = b.name;
  j["order"] = b.group->n;
  j["exponent"] = exponent_of(*b.group);
  if (b.nclass >= 0)
    j["nilpotency_class"] = b.nclass;
  else
    j["nilpotency_class"] = nullptr;
  j["abelian"] = b.abelian;
  if (b.p != 0) {
    j["p"] = b.p;
    j["log_order"] = b.k;
  }
  j["center"] = subgroup_summary(b.zg);
  j["derived"] = subgroup_summary(b.gp);

  std::map<std::uint64_t, std::uint64_t> degmult;
  for (const auto& row : b.table.rows) ++degmult[row.degree];
  auto& degrees = j["degrees"];
  for (const auto& [d, c] : degmult) degrees[std::to_string(d)] = c;
  j["num_characters"] = b.table.num_rows();
  j["num_classes"] = b.table.num_classes();

  auto& kp = j["kernels"];
  kp["sk"] = b.kprof.sk;
  kp["skn"] = b.kprof.skn;
  kp["cd"] = b.kprof.cd;
  if (b.kprof.m_max)
    kp["m_max"] = *b.kprof.m_max;
  else
    kp["m_max"] = nullptr;
  auto& distinct = kp["distinct_nonlinear"] = ordered_json::array();
  for (std::size_t i = 0; i < b.kprof.kern.size(); ++i) {
    ordered_json e;
    e["order"] = b.kprof.kern[i].members.size();
    e["characters"] = b.kprof.kern_char_count[i];
    distinct.push_back(std::move(e));
  }

  auto& pred = j["predicates"];
  auto opt_bool = [](const std::optional<bool>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  pred["gvz"] = opt_bool(b.pprof.gvz);
  pred["gcp_with_center"] = opt_bool(b.pprof.gcp_with_center);
  pred["j_group"] = opt_bool(b.pprof.j_group);
  pred["strong_condition"] = b.pprof.strong_condition;
  pred["weak_condition"] = b.pprof.weak_condition;
  if (b.pprof.k_m) {
    pred["k_m"] = *b.pprof.k_m;
    pred["k_n"] = *b.pprof.k_n;
  } else {
    pred["k_m"] = nullptr;
    pred["k_n"] = nullptr;
  }
  pred["elementary_abelian_center"] = b.pprof.elementary_abelian_center;

  auto& lat = j["normal_lattice"];
  lat["count"] = b.normals.size();
  auto& orders = lat["orders"];
  for (const auto& [order, cnt] : b.pprof.normal_order_counts)
    orders[std::to_string(order)] = cnt;
  return j;
}

ordered_json table_report(const GroupBundle& b) {
  ordered_json j;
  j["group"] = b.name;
  j["order"] = b.group->n;
  j["exponent_e"] = b.table.e;
  auto& classes = j["classes"] = ordered_json::array();
  for (std::size_t c = 0; c < b.table.num_classes(); ++c) {
    ordered_json e;
    e["rep"] = b.table.classes.classes[c].rep;
    e["size"] = b.table.classes.classes[c].members.size();
    classes.push_back(std::move(e));
  }
  auto& rows = j["rows"] = ordered_json::array();
  for (const auto& row : b.table.rows) {
    ordered_json r;
    r["degree"] = row.degree;
    auto& vals = r["values"] = ordered_json::array();
    for (const auto& mult : row.mult) {
      ordered_json v = ordered_json::array();
      for (const auto& [exp, cnt] : mult) v.push_back(ordered_json::array({exp, cnt}));
      vals.push_back(std::move(v));
    }
    rows.push_back(std::move(r));
  }
  return j;
}

}  // namespace charkern
