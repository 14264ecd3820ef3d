// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Truncated formal series c0 + c1/z + ... + cN/z^N and the z-transform of
// recurrence solutions.
//
// Two forms of z(f) are assembled for every system kind:
//
//   direct:  coefficient n+1 (single) or n+2 (composed) is the closed-form
//            solver value, coefficients below that are zero;
//   theorem: coefficient K collects S(n)_m x(n) over all m + n + 1 = K
//            (single, x = g) or m + n + 2 = K (composed, x = h), where S is
//            one of the kernel series
//              S_A        m -> A^m
//              S_A(n)     m -> A^(m)(m+n)
//              S_AB       m -> sum_i A^(m-i) B^i
//              S_AB(n)    m -> sum_i A^(m-i)(m+1+n) B^(i)(i+n).
//
// Every coefficient is a finite sum, so truncation limits extent, never
// accuracy.

#ifndef ZREC_ZTRANSFORM_HPP_
#define ZREC_ZTRANSFORM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zrec/errors.hpp"
#include "zrec/falling_product.hpp"
#include "zrec/matrix.hpp"
#include "zrec/recurrence.hpp"
#include "zrec/sequence.hpp"

namespace zrec {

template <typename T>
class TruncatedSeries {
 public:
  TruncatedSeries(const Semiring& s, std::vector<T> coefficients)
      : semiring_(&s), coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw RangeError("a truncated series needs at least c0");
  }

  std::size_t order() const { return coefficients_.size() - 1; }
  const Semiring& semiring() const { return *semiring_; }
  const T& operator[](std::size_t m) const { return coefficients_[m]; }
  const std::vector<T>& coefficients() const { return coefficients_; }

  bool operator==(const TruncatedSeries& other) const {
    return semiring_ == other.semiring_ && coefficients_ == other.coefficients_;
  }

 private:
  const Semiring* semiring_;
  std::vector<T> coefficients_;
};

template <typename T>
TruncatedSeries<T> series_of_sequence(const Semiring& s, const Seq<T>& f, std::size_t N) {
  std::vector<T> c;
  c.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c.push_back(f(n));
  return TruncatedSeries<T>(s, std::move(c));
}

// Both sum and product truncate to the smaller order.
template <typename T>
TruncatedSeries<T> series_add(const TruncatedSeries<T>& x, const TruncatedSeries<T>& y) {
  const Semiring& s = x.semiring();
  const std::size_t N = std::min(x.order(), y.order());
  std::vector<T> c;
  c.reserve(N + 1);
  for (std::size_t m = 0; m <= N; ++m) c.push_back(plus(s, x[m], y[m]));
  return TruncatedSeries<T>(s, std::move(c));
}

// Cauchy product (XY)_m = X_0 Y_m + X_1 Y_(m-1) + ... + X_m Y_0, with the left
// factor's coefficients always on the left.
template <typename L, typename R>
auto series_mul(const TruncatedSeries<L>& x, const TruncatedSeries<R>& y) {
  const Semiring& s = x.semiring();
  const std::size_t N = std::min(x.order(), y.order());
  using Out = decltype(times(s, x[0], y[0]));
  std::vector<Out> c;
  c.reserve(N + 1);
  for (std::size_t m = 0; m <= N; ++m) {
    Out acc = times(s, x[0], y[m]);
    for (std::size_t i = 1; i <= m; ++i) acc = plus(s, acc, times(s, x[i], y[m - i]));
    c.push_back(std::move(acc));
  }
  return TruncatedSeries<Out>(s, std::move(c));
}

// Component i of a vector-coefficient series, as a scalar series.
TruncatedSeries<Value> component_series(const TruncatedSeries<Vec>& x, std::size_t i);

// Kernel series, to order N.
TruncatedSeries<Mat> s_constant(const Mat& a, std::size_t N);
TruncatedSeries<Mat> s_variable(const FallingProducts& a, std::size_t n, std::size_t N);
TruncatedSeries<Mat> s_variable(const Seq<Mat>& a, std::size_t n, std::size_t N);
TruncatedSeries<Mat> s_composed_constant(const Mat& a, const Mat& b, std::size_t N);
TruncatedSeries<Mat> s_composed_variable(const FallingProducts& a, const FallingProducts& b,
                                         std::size_t n, std::size_t N);
TruncatedSeries<Mat> s_composed_variable(const Seq<Mat>& a, const Seq<Mat>& b, std::size_t n,
                                         std::size_t N);

enum class Theorem {
  constant_single = 1,
  variable_single = 2,
  constant_composed = 3,
  variable_composed = 4,
};

// Theorem 1 for constant systems, 2 otherwise (3 / 4 for compositions).
Theorem default_theorem(const RecurrenceSystem& sys);
Theorem default_theorem(const ComposedSystem& sys);
// Throws KindMismatchError when `which` is a composed theorem for a single
// system (or vice versa), or a constant-coefficient theorem for a system with
// variable coefficients. Variable theorems accept constant systems.
void check_theorem_kind(const RecurrenceSystem& sys, Theorem which);
void check_theorem_kind(const ComposedSystem& sys, Theorem which);

// Throw InitialConditionError for nonzero initial vectors.
TruncatedSeries<Vec> z_direct(const RecurrenceSystem& sys, std::size_t N);
TruncatedSeries<Vec> z_direct(const RecurrenceSystem& sys, Theorem which, std::size_t N);
TruncatedSeries<Vec> z_direct(const ComposedSystem& sys, std::size_t N);
TruncatedSeries<Vec> z_direct(const ComposedSystem& sys, Theorem which, std::size_t N);

TruncatedSeries<Vec> z_theorem(const RecurrenceSystem& sys, std::size_t N);
TruncatedSeries<Vec> z_theorem(const RecurrenceSystem& sys, Theorem which, std::size_t N);
TruncatedSeries<Vec> z_theorem(const ComposedSystem& sys, std::size_t N);
TruncatedSeries<Vec> z_theorem(const ComposedSystem& sys, Theorem which, std::size_t N);

struct VerificationReport {
  Theorem theorem = Theorem::constant_single;
  std::size_t order = 0;
  bool passed = true;
  // Set on failure: first differing order and both coefficients.
  std::optional<std::size_t> mismatch_order;
  std::string direct_value;
  std::string theorem_value;
};

// Coefficient-by-coefficient exact comparison up to the smaller order.
VerificationReport compare_series(const TruncatedSeries<Vec>& direct,
                                  const TruncatedSeries<Vec>& theorem_form, Theorem which);

VerificationReport verify_theorem(const RecurrenceSystem& sys, Theorem which, std::size_t N);
VerificationReport verify_theorem(const ComposedSystem& sys, Theorem which, std::size_t N);

// "c0 + c1/z + c2/z^2 + ... + cN/z^N".
std::string render_series(const TruncatedSeries<Value>& x);
std::string render_series(const TruncatedSeries<Vec>& x);

}  // namespace zrec

#endif  // ZREC_ZTRANSFORM_HPP_
