#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace blab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

enum class ErrorCode : int {
  Parse = 1,
  Domain = 2,
  Eval = 3,
  Precondition = 4,
  Validation = 5,
  Numeric = 6,
  Io = 7,
  InvalidArgument = 8,
};

// Single exception type for the whole library; the C boundary maps code() to
// an integer status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Deterministic reduction: result does not depend on any thread schedule
// because callers fill the buffer first and reduce single-threaded.
double pairwise_sum(std::span<const double> values);

// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// Data-parallel width; BLASCHKE_LAB_THREADS caps it, default 1.
int effective_threads();
void set_thread_cap(int n);

// Runs fn(begin, end) over [0, count) split into contiguous chunks. Chunks are
// disjoint so output written by index is schedule independent.
void parallel_for(std::int64_t count,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

// Shortest text for a double rounded to 15 significant digits.
std::string format_g15(double x);
// Rounds through the 15-digit decimal form; used so JSON numbers diff cleanly.
double round_g15(double x);

std::string format_complex(Complex z);

}  // namespace blab
