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

#ifndef ZREC_MATRIX_HPP_
#define ZREC_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zrec/semiring.hpp"

namespace zrec {

inline constexpr std::size_t kMaxDimension = 64;

// Throws DimensionError unless 1 <= k <= kMaxDimension.
void check_dimension(std::size_t k);

// Square k x k matrix over a semiring, stored row-major. The semiring must
// outlive the matrix.
class Mat {
 public:
  Mat(const Semiring& s, std::size_t k, std::vector<Value> entries);

  static Mat identity(std::size_t k, const Semiring& s);
  static Mat zero(std::size_t k, const Semiring& s);

  std::size_t dim() const { return k_; }
  const Semiring& semiring() const { return *semiring_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return entries_[i * k_ + j]; }
  std::span<const Value> entries() const { return entries_; }

  bool operator==(const Mat& other) const;

 private:
  const Semiring* semiring_;
  std::size_t k_;
  std::vector<Value> entries_;
};

class Vec {
 public:
  Vec(const Semiring& s, std::vector<Value> entries);

  static Vec zero(std::size_t k, const Semiring& s);

  std::size_t dim() const { return entries_.size(); }
  const Semiring& semiring() const { return *semiring_; }
  const Value& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Value> entries() const { return entries_; }

  bool is_zero() const;
  bool operator==(const Vec& other) const;

 private:
  const Semiring* semiring_;
  std::vector<Value> entries_;
};

// Entrywise sum. Throws DimensionError / SemiringMismatchError.
Mat operator+(const Mat& x, const Mat& y);
Vec operator+(const Vec& x, const Vec& y);

// (X Y)_ij = X_i1 Y_1j + ... + X_ik Y_kj, summed left to right.
Mat operator*(const Mat& x, const Mat& y);
Vec operator*(const Mat& x, const Vec& v);

// X^0 = I, X^m = X X^(m-1), by plain repeated multiplication.
Mat power(const Mat& x, std::size_t m);

std::string to_string(const Mat& m);
// "[v1, ..., vk]"
std::string to_string(const Vec& v);

// Uniform product/sum over scalars, matrices and vectors, used by the
// convolution and series code. Scalar versions take the semiring explicitly.
inline Value times(const Semiring& s, const Value& a, const Value& b) { return s.mul(a, b); }
inline Value plus(const Semiring& s, const Value& a, const Value& b) { return s.add(a, b); }
Mat times(const Semiring& s, const Mat& a, const Mat& b);
Vec times(const Semiring& s, const Mat& a, const Vec& b);
Mat plus(const Semiring& s, const Mat& a, const Mat& b);
Vec plus(const Semiring& s, const Vec& a, const Vec& b);

}  // namespace zrec

#endif  // ZREC_MATRIX_HPP_
