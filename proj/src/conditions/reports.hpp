#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "json.hpp"

namespace blab {

enum class Verdict { Holds, Fails, Inconclusive };
std::string verdict_name(Verdict v);

// Monotone partial sums of a nonnegative functional over an ordered zero
// sequence, kept term by term for traces and divergence diagnostics.
struct SumTrace {
  std::vector<int> index;
  std::vector<double> abs_zk;
  std::vector<double> partial_sums;
  double final_sum = 0.0;
  int skipped_inner = 0;  // entries inside D0

  std::string to_csv() const;  // k,abs_zk,partial_sum
};

enum class TraceClass { Convergent, Divergent, Inconclusive, TooShort };

// Finite data proves no divergence; the tail model (log-log slope of the
// terms >= -1 over the trailing half, at least 64 terms) or an explicit bound
// is required before a trace is called divergent.
struct TraceAnalysis {
  TraceClass cls = TraceClass::TooShort;
  double slope = 0.0;
  double r_squared = 0.0;
  int fitted_terms = 0;
  bool exceeded_bound = false;
  double bound = 0.0;
};
TraceAnalysis classify_trace(const SumTrace& trace,
                             std::optional<double> user_bound = std::nullopt);

struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::Holds;
  double lhs = 0.0;
  double rhs = 0.0;
  std::map<std::string, double> constants;
  std::optional<SumTrace> trace;
  double grid_h = 0.0;
  long grid_nodes = 0;
  std::map<std::string, double> tolerances;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> notes;
  nlohmann::ordered_json extra;  // per-condition details

  std::string to_json() const;
  // Trace rows when a trace is present, key,value rows otherwise.
  std::string to_csv() const;
};

}  // namespace blab
