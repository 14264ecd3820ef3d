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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zrec/errors.hpp"
#include "zrec/matrix.hpp"
#include "zrec/random_systems.hpp"

namespace zrec {
namespace {

const Semiring& nat() { return builtin_semiring("natural"); }

Mat m(const Semiring& s, std::size_t k, std::vector<Value> v) { return Mat(s, k, std::move(v)); }

TEST(Matrix, OneByOneProduct) { EXPECT_EQ(m(nat(), 1, {4}) * m(nat(), 1, {3}), m(nat(), 1, {12})); }

TEST(Matrix, IdentityIsNeutral) {
  Rng rng(11);
  for (const auto& name : builtin_semiring_names()) {
    const Semiring& s = builtin_semiring(name);
    for (std::size_t k = 1; k <= 3; ++k) {
      Mat x = random_matrix(s, rng, k);
      EXPECT_EQ(Mat::identity(k, s) * x, x);
      EXPECT_EQ(x * Mat::identity(k, s), x);
      EXPECT_EQ(x + Mat::zero(k, s), x);
      EXPECT_EQ(x * Mat::zero(k, s), Mat::zero(k, s));
    }
  }
}

TEST(Matrix, MinPlusSquare) {
  const Semiring& s = builtin_semiring("tropical_min_plus");
  Value inf = Value::pos_infinity();
  Mat x = m(s, 2, {0, 1, inf, 0});
  EXPECT_EQ(x * x, x);
}

TEST(Matrix, Powers) {
  EXPECT_EQ(power(m(nat(), 1, {2}), 3), m(nat(), 1, {8}));
  EXPECT_EQ(power(m(nat(), 2, {1, 2, 3, 4}), 0), Mat::identity(2, nat()));
  const Semiring& b = builtin_semiring("boolean");
  EXPECT_EQ(power(m(b, 2, {0, 1, 1, 0}), 2), Mat::identity(2, b));
}

TEST(Matrix, AgreesWithOracle) {
  Rng rng(5);
  for (const auto& name : builtin_semiring_names()) {
    const Semiring& s = builtin_semiring(name);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t k = 1 + rng.below(3);
      Mat x = random_matrix(s, rng, k), y = random_matrix(s, rng, k);
      EXPECT_EQ(oracle::grid(x * y), oracle::mul(s, oracle::grid(x), oracle::grid(y)));
      EXPECT_EQ(oracle::grid(power(x, 4)), oracle::pow(s, oracle::grid(x), 4));
    }
  }
}

TEST(Matrix, AssociativeOnRandomMatrices) {
  Rng rng(99);
  for (const auto& name : builtin_semiring_names()) {
    const Semiring& s = builtin_semiring(name);
    for (int trial = 0; trial < 20; ++trial) {
      Mat x = random_matrix(s, rng, 3), y = random_matrix(s, rng, 3), z = random_matrix(s, rng, 3);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
    }
  }
}

TEST(Matrix, MatrixVector) {
  Vec v(nat(), {1, 2});
  EXPECT_EQ(m(nat(), 2, {1, 2, 3, 4}) * v, Vec(nat(), {5, 11}));
  EXPECT_TRUE(Vec::zero(2, nat()).is_zero());
  EXPECT_EQ(to_string(v), "[1, 2]");
}

TEST(Matrix, Errors) {
  EXPECT_THROW(Mat(nat(), 0, {}), DimensionError);
  EXPECT_THROW(Mat(nat(), 65, std::vector<Value>(65 * 65, 0)), DimensionError);
  EXPECT_THROW(Mat(nat(), 2, {1, 2, 3}), DimensionError);
  EXPECT_THROW(m(nat(), 2, {1, 2, 3, 4}) * m(nat(), 1, {1}), DimensionError);
  const Semiring& z = builtin_semiring("integer");
  EXPECT_THROW(m(nat(), 1, {1}) * m(z, 1, {1}), SemiringMismatchError);
  EXPECT_THROW(m(nat(), 1, {1}) + m(z, 1, {1}), SemiringMismatchError);
}

}  // namespace
}  // namespace zrec
