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

#include "zrec/falling_product.hpp"

#include <string>

#include "zrec/errors.hpp"

namespace zrec {

namespace {

void check_range(std::size_t n, std::size_t m) {
  if (m > n + 1) {
    throw RangeError("falling product of " + std::to_string(m) + " factors ending at index " +
                     std::to_string(n) + " would need negative indices");
  }
}

}  // namespace

Mat falling_product(const Seq<Mat>& a, std::size_t n, std::size_t m) {
  check_range(n, m);
  if (m == 0) {
    Mat first = a(n);
    return Mat::identity(first.dim(), first.semiring());
  }
  Mat result = a(n);
  for (std::size_t i = 1; i < m; ++i) result = result * a(n - i);
  return result;
}

FallingProducts::FallingProducts(Seq<Mat> a, std::size_t k, const Semiring& s)
    : a_(std::move(a)), k_(k), semiring_(&s), cache_(std::make_shared<Cache>()) {}

Mat FallingProducts::operator()(std::size_t m, std::size_t n) const {
  check_range(n, m);
  if (m == 0) return Mat::identity(k_, *semiring_);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->products.find({m, n});
    if (it != cache_->products.end()) return it->second;
  }
  Mat value = m == 1 ? a_(n) : (*this)(m - 1, n) * a_(n - m + 1);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->products.try_emplace({m, n}, std::move(value)).first->second;
}

}  // namespace zrec
