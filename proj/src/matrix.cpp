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

#include "zrec/matrix.hpp"

#include <algorithm>

#include "zrec/errors.hpp"

namespace zrec {

void check_dimension(std::size_t k) {
  if (k == 0 || k > kMaxDimension) {
    throw DimensionError("dimension " + std::to_string(k) + " outside 1.." +
                         std::to_string(kMaxDimension));
  }
}

namespace {

void require_same_semiring(const Semiring& a, const Semiring& b) {
  if (&a != &b) {
    throw SemiringMismatchError("operands belong to different semirings (" + a.name() + ", " +
                                b.name() + ")");
  }
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

}  // namespace

Mat::Mat(const Semiring& s, std::size_t k, std::vector<Value> entries)
    : semiring_(&s), k_(k), entries_(std::move(entries)) {
  check_dimension(k);
  if (entries_.size() != k * k) {
    throw DimensionError("matrix of dimension " + std::to_string(k) + " needs " +
                         std::to_string(k * k) + " entries, got " +
                         std::to_string(entries_.size()));
  }
}

Mat Mat::identity(std::size_t k, const Semiring& s) {
  check_dimension(k);
  std::vector<Value> e(k * k, s.zero());
  for (std::size_t i = 0; i < k; ++i) e[i * k + i] = s.one();
  return Mat(s, k, std::move(e));
}

Mat Mat::zero(std::size_t k, const Semiring& s) {
  check_dimension(k);
  return Mat(s, k, std::vector<Value>(k * k, s.zero()));
}

bool Mat::operator==(const Mat& other) const {
  return semiring_ == other.semiring_ && k_ == other.k_ && entries_ == other.entries_;
}

Vec::Vec(const Semiring& s, std::vector<Value> entries)
    : semiring_(&s), entries_(std::move(entries)) {
  check_dimension(entries_.size());
}

Vec Vec::zero(std::size_t k, const Semiring& s) {
  check_dimension(k);
  return Vec(s, std::vector<Value>(k, s.zero()));
}

bool Vec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [this](const Value& v) { return v == semiring_->zero(); });
}

bool Vec::operator==(const Vec& other) const {
  return semiring_ == other.semiring_ && entries_ == other.entries_;
}

Mat operator+(const Mat& x, const Mat& y) {
  require_same_semiring(x.semiring(), y.semiring());
  require_same_dim(x.dim(), y.dim());
  const Semiring& s = x.semiring();
  std::vector<Value> e;
  e.reserve(x.entries().size());
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    e.push_back(s.add(x.entries()[i], y.entries()[i]));
  }
  return Mat(s, x.dim(), std::move(e));
}

Vec operator+(const Vec& x, const Vec& y) {
  require_same_semiring(x.semiring(), y.semiring());
  require_same_dim(x.dim(), y.dim());
  const Semiring& s = x.semiring();
  std::vector<Value> e;
  e.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) e.push_back(s.add(x[i], y[i]));
  return Vec(s, std::move(e));
}

Mat operator*(const Mat& x, const Mat& y) {
  require_same_semiring(x.semiring(), y.semiring());
  require_same_dim(x.dim(), y.dim());
  const Semiring& s = x.semiring();
  const std::size_t k = x.dim();
  std::vector<Value> e;
  e.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Value acc = s.mul(x(i, 0), y(0, j));
      for (std::size_t l = 1; l < k; ++l) acc = s.add(acc, s.mul(x(i, l), y(l, j)));
      e.push_back(std::move(acc));
    }
  }
  return Mat(s, k, std::move(e));
}

Vec operator*(const Mat& x, const Vec& v) {
  require_same_semiring(x.semiring(), v.semiring());
  require_same_dim(x.dim(), v.dim());
  const Semiring& s = x.semiring();
  const std::size_t k = x.dim();
  std::vector<Value> e;
  e.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Value acc = s.mul(x(i, 0), v[0]);
    for (std::size_t l = 1; l < k; ++l) acc = s.add(acc, s.mul(x(i, l), v[l]));
    e.push_back(std::move(acc));
  }
  return Vec(s, std::move(e));
}

Mat power(const Mat& x, std::size_t m) {
  Mat result = Mat::identity(x.dim(), x.semiring());
  for (std::size_t i = 0; i < m; ++i) result = x * result;
  return result;
}

std::string to_string(const Mat& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ", ";
      out += m.semiring().render(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string to_string(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += v.semiring().render(v[i]);
  }
  return out + "]";
}

Mat times(const Semiring& s, const Mat& a, const Mat& b) {
  require_same_semiring(s, a.semiring());
  return a * b;
}

Vec times(const Semiring& s, const Mat& a, const Vec& b) {
  require_same_semiring(s, a.semiring());
  return a * b;
}

Mat plus(const Semiring& s, const Mat& a, const Mat& b) {
  require_same_semiring(s, a.semiring());
  return a + b;
}

Vec plus(const Semiring& s, const Vec& a, const Vec& b) {
  require_same_semiring(s, a.semiring());
  return a + b;
}

}  // namespace zrec
