#include "common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace blab {

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

namespace {

GaussRule make_gauss(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton on Legendre P_n with Chebyshev-like initial guesses.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

std::mutex g_gauss_mutex;
std::map<int, GaussRule> g_gauss_cache;

std::atomic<int> g_thread_cap{0};  // 0 = uninitialized

int env_thread_cap() {
  const char* s = std::getenv("BLASCHKE_LAB_THREADS");
  if (!s || !*s) return 1;
  long v = std::strtol(s, nullptr, 10);
  if (v < 1) return 1;
  return static_cast<int>(std::min<long>(v, 256));
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "gauss_legendre: n must be >= 1");
  std::lock_guard<std::mutex> lock(g_gauss_mutex);
  auto it = g_gauss_cache.find(n);
  if (it == g_gauss_cache.end()) it = g_gauss_cache.emplace(n, make_gauss(n)).first;
  return it->second;
}

int effective_threads() {
  int cap = g_thread_cap.load();
  if (cap == 0) {
    cap = env_thread_cap();
    g_thread_cap.store(cap);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::max(1, std::min<int>(cap, static_cast<int>(hw)));
}

void set_thread_cap(int n) { g_thread_cap.store(std::max(1, n)); }

void parallel_for(std::int64_t count,
                  const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (count <= 0) return;
  const int nthreads = effective_threads();
  if (nthreads <= 1 || count < 1024) {
    fn(0, count);
    return;
  }
  const std::int64_t chunk = (count + nthreads - 1) / nthreads;
  std::vector<std::thread> workers;
  for (std::int64_t begin = 0; begin < count; begin += chunk) {
    const std::int64_t end = std::min(count, begin + chunk);
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& w : workers) w.join();
}

std::string format_g15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

double round_g15(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_g15(x).c_str(), nullptr);
}

std::string format_complex(Complex z) {
  const double re = z.real(), im = z.imag();
  if (im == 0.0) return format_g15(re);
  if (re == 0.0) return format_g15(im) + "i";
  char buf[160];
  std::snprintf(buf, sizeof(buf), "(%s%s%si)", format_g15(re).c_str(),
                im < 0 ? "" : "+", format_g15(im).c_str());
  return buf;
}

}  // namespace blab
