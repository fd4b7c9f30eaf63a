#include "conditions/reports.hpp"

#include <cmath>

namespace blab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string SumTrace::to_csv() const {
  std::string out = "k,abs_zk,partial_sum\n";
  for (std::size_t i = 0; i < partial_sums.size(); ++i)
    out += std::to_string(index[i]) + "," + format_g15(abs_zk[i]) + "," +
           format_g15(partial_sums[i]) + "\n";
  return out;
}

TraceAnalysis classify_trace(const SumTrace& trace, std::optional<double> user_bound) {
  TraceAnalysis out;
  if (user_bound) {
    out.bound = *user_bound;
    if (trace.final_sum > *user_bound) {
      out.exceeded_bound = true;
      out.cls = TraceClass::Divergent;
      return out;
    }
  }
  std::vector<double> terms;
  terms.reserve(trace.partial_sums.size());
  double prev = 0.0;
  for (double s : trace.partial_sums) {
    terms.push_back(s - prev);
    prev = s;
  }
  const int n = static_cast<int>(terms.size());
  if (n < 64) {
    out.cls = TraceClass::TooShort;
    return out;
  }
  // Least squares of log(term) against log(k) over the trailing half.
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  int m = 0;
  for (int k = n / 2; k < n; ++k) {
    if (!(terms[k] > 0.0)) continue;
    const double x = std::log(static_cast<double>(k + 1));
    const double y = std::log(terms[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    ++m;
  }
  if (m < 16) {
    out.cls = TraceClass::Inconclusive;
    return out;
  }
  const double det = m * sxx - sx * sx;
  if (std::abs(det) < 1e-12) {
    out.cls = TraceClass::Inconclusive;
    return out;
  }
  out.slope = (m * sxy - sx * sy) / det;
  out.fitted_terms = m;
  const double var_y = syy - sy * sy / m;
  if (var_y > 1e-30) {
    const double ss_res = var_y - out.slope * (sxy - sx * sy / m);
    out.r_squared = 1.0 - ss_res / var_y;
  } else {
    out.r_squared = 1.0;  // perfectly flat terms
  }
  out.cls = out.slope >= -1.0 ? TraceClass::Divergent : TraceClass::Convergent;
  return out;
}

std::string ConditionReport::to_json() const {
  nlohmann::ordered_json j;
  j["condition"] = condition;
  j["verdict"] = verdict_name(verdict);
  j["lhs"] = round_g15(lhs);
  j["rhs"] = round_g15(rhs);
  j["constants"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : constants) j["constants"][k] = round_g15(v);
  if (trace) {
    nlohmann::ordered_json t;
    t["k"] = trace->index;
    nlohmann::ordered_json abs_arr = nlohmann::ordered_json::array();
    for (double a : trace->abs_zk) abs_arr.push_back(round_g15(a));
    t["abs_zk"] = std::move(abs_arr);
    nlohmann::ordered_json sum_arr = nlohmann::ordered_json::array();
    for (double s : trace->partial_sums) sum_arr.push_back(round_g15(s));
    t["partial_sum"] = std::move(sum_arr);
    t["final_sum"] = round_g15(trace->final_sum);
    t["skipped_inner"] = trace->skipped_inner;
    j["trace"] = std::move(t);
  } else {
    j["trace"] = nullptr;
  }
  j["grid"] = {{"h", round_g15(grid_h)}, {"nodes", grid_nodes}};
  j["tolerances"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : tolerances) j["tolerances"][k] = round_g15(v);
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs) j["inputs"][k] = v;
  j["notes"] = notes;
  if (!extra.is_null())
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

std::string ConditionReport::to_csv() const {
  if (trace) return trace->to_csv();
  std::string out = "key,value\n";
  out += "condition," + condition + "\n";
  out += "verdict," + verdict_name(verdict) + "\n";
  out += "lhs," + format_g15(lhs) + "\n";
  out += "rhs," + format_g15(rhs) + "\n";
  for (const auto& [k, v] : constants) out += k + "," + format_g15(v) + "\n";
  return out;
}

}  // namespace blab
