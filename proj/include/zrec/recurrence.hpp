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
// First-order systems f(n+1) = A(n) f(n) + g(n) over a semiring, the
// composition of two such systems, a direct-iteration oracle and the
// convolution closed forms.
//
// The closed forms only hold for zero initial vectors:
//
//   constant   f(n+1) = sum_i A^(n-i) g(i)
//   variable   f(n+1) = sum_i A(n) A(n-1) ... A(i+1) g(i)
//   composed   f(n+2) = sum_i A^(n-i) G(i),          G(i) = sum_j B^(i-j) h(j)
//   composed,  f(n+2) = sum_i A^(n-i)(n+1) G(i),     G(i) = sum_j B^(i-j)(i) h(j)
//   variable
//
// where X^(m)(t) is the falling product X(t) X(t-1) ... X(t-m+1).

#ifndef ZREC_RECURRENCE_HPP_
#define ZREC_RECURRENCE_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "zrec/falling_product.hpp"
#include "zrec/matrix.hpp"
#include "zrec/sequence.hpp"

namespace zrec {

// A k x k coefficient sequence. When built entrywise, the scalar entry
// sequences (and any declarative specs behind them) are kept.
class SeqMatrix {
 public:
  SeqMatrix(const Semiring& s, std::size_t k, std::vector<Seq<Value>> entries);
  SeqMatrix(const Semiring& s, std::size_t k, Seq<Mat> sequence);

  std::size_t dim() const { return k_; }
  const Semiring& semiring() const { return *semiring_; }
  const Seq<Mat>& sequence() const { return sequence_; }
  // Entry (i, j) as a scalar sequence.
  const Seq<Value>& entry(std::size_t i, std::size_t j) const { return entries_[i * k_ + j]; }

 private:
  const Semiring* semiring_;
  std::size_t k_;
  std::vector<Seq<Value>> entries_;
  Seq<Mat> sequence_;
};

// A k x 1 input sequence, with the same entrywise bookkeeping as SeqMatrix.
class SeqVector {
 public:
  SeqVector(const Semiring& s, std::vector<Seq<Value>> components);
  SeqVector(const Semiring& s, std::size_t k, Seq<Vec> sequence);

  static SeqVector zero(std::size_t k, const Semiring& s);

  std::size_t dim() const { return components_.size(); }
  const Semiring& semiring() const { return *semiring_; }
  const Seq<Vec>& sequence() const { return sequence_; }
  const Seq<Value>& component(std::size_t i) const { return components_[i]; }

 private:
  const Semiring* semiring_;
  std::vector<Seq<Value>> components_;
  Seq<Vec> sequence_;
};

using Coefficients = std::variant<Mat, SeqMatrix>;

std::size_t dim(const Coefficients& c);
const Semiring& semiring_of(const Coefficients& c);
// Constant coefficients become a constant sequence.
Seq<Mat> as_sequence(const Coefficients& c);
// Entry (i, j) as a scalar sequence.
Seq<Value> entry_sequence(const Coefficients& c, std::size_t i, std::size_t j);

// f(n+1) = A(n) f(n) + g(n), f(0) = initial.
class RecurrenceSystem {
 public:
  // Throws DimensionError / SemiringMismatchError on inconsistent parts.
  RecurrenceSystem(Coefficients coefficients, SeqVector input, Vec initial);

  std::size_t dim() const { return zrec::dim(coefficients_); }
  const Semiring& semiring() const { return semiring_of(coefficients_); }
  bool has_constant_coefficients() const { return std::holds_alternative<Mat>(coefficients_); }

  const Coefficients& coefficients() const { return coefficients_; }
  const Seq<Mat>& coefficient_sequence() const { return coefficient_sequence_; }
  const SeqVector& input() const { return input_; }
  const Vec& initial() const { return initial_; }

 private:
  Coefficients coefficients_;
  Seq<Mat> coefficient_sequence_;
  SeqVector input_;
  Vec initial_;
};

// f(n+1) = A(n) f(n) + g(n) fed by g(n+1) = B(n) g(n) + h(n).
class ComposedSystem {
 public:
  ComposedSystem(Coefficients outer, Coefficients inner, SeqVector h, Vec initial_f,
                 Vec initial_g);

  std::size_t dim() const { return zrec::dim(outer_); }
  const Semiring& semiring() const { return semiring_of(outer_); }
  bool has_constant_coefficients() const {
    return std::holds_alternative<Mat>(outer_) && std::holds_alternative<Mat>(inner_);
  }

  const Coefficients& outer() const { return outer_; }
  const Coefficients& inner() const { return inner_; }
  const SeqVector& input() const { return h_; }
  const Vec& initial_f() const { return initial_f_; }
  const Vec& initial_g() const { return initial_g_; }

  // The g-system: coefficients B, input h, initial g(0).
  RecurrenceSystem inner_system() const;
  // The f-system, whose input is the iterated solution of inner_system().
  RecurrenceSystem outer_system() const;

 private:
  Coefficients outer_;
  Coefficients inner_;
  SeqVector h_;
  Vec initial_f_;
  Vec initial_g_;
};

// Direct iteration; accepts any initial vector. The returned sequence is
// lazily extended and memoized.
Seq<Vec> solution(const RecurrenceSystem& sys);
// f(0..N) by direct iteration.
std::vector<Vec> iterate(const RecurrenceSystem& sys, std::size_t N);
// f(0..N) by iterating the inner system, then the outer one.
std::vector<Vec> iterate(const ComposedSystem& sys, std::size_t N);

// Closed forms returning f(n+1) (single) or f(n+2) (composed), assuming zero
// initial vectors.
Vec solve_constant(const Mat& a, const Seq<Vec>& g, std::size_t n);
Vec solve_variable(const Seq<Mat>& a, const Seq<Vec>& g, std::size_t n);
Vec solve_variable(const FallingProducts& a, const Seq<Vec>& g, std::size_t n);
Vec solve_composed_constant(const Mat& a, const Mat& b, const Seq<Vec>& h, std::size_t n);
Vec solve_composed_variable(const Seq<Mat>& a, const Seq<Mat>& b, const Seq<Vec>& h,
                            std::size_t n);
Vec solve_composed_variable(const FallingProducts& a, const FallingProducts& b,
                            const Seq<Vec>& h, std::size_t n);

// Dispatch on the coefficient kind. Throw InitialConditionError when an
// initial vector is nonzero.
Vec solve(const RecurrenceSystem& sys, std::size_t n);
Vec solve(const ComposedSystem& sys, std::size_t n);

// f(0..N) from the closed forms, sharing memoized falling products across n.
std::vector<Vec> closed_form_solution(const RecurrenceSystem& sys, std::size_t N);
std::vector<Vec> closed_form_solution(const ComposedSystem& sys, std::size_t N);

// Throws InitialConditionError unless the initial vector(s) are zero.
void require_zero_initial(const RecurrenceSystem& sys);
void require_zero_initial(const ComposedSystem& sys);

}  // namespace zrec

#endif  // ZREC_RECURRENCE_HPP_
