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

#ifndef ZREC_FALLING_PRODUCT_HPP_
#define ZREC_FALLING_PRODUCT_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "zrec/matrix.hpp"
#include "zrec/sequence.hpp"

namespace zrec {

// A(n) A(n-1) ... A(n-m+1), multiplied left to right; m = 0 gives I.
// Throws RangeError if m > n + 1.
Mat falling_product(const Seq<Mat>& a, std::size_t n, std::size_t m);

// Memoized falling products of one coefficient sequence, built by
// A^(m)(n) = A^(m-1)(n) A(n-m+1). Copies share the cache.
class FallingProducts {
 public:
  FallingProducts(Seq<Mat> a, std::size_t k, const Semiring& s);

  Mat operator()(std::size_t m, std::size_t n) const;
  const Seq<Mat>& sequence() const { return a_; }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<std::size_t, std::size_t>, Mat> products;
  };

  Seq<Mat> a_;
  std::size_t k_;
  const Semiring* semiring_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace zrec

#endif  // ZREC_FALLING_PRODUCT_HPP_
