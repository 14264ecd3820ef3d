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

#include "fixtures.hpp"
#include "oracle.hpp"
#include "zrec/errors.hpp"
#include "zrec/falling_product.hpp"
#include "zrec/random_systems.hpp"
#include "zrec/ztransform.hpp"

namespace zrec {
namespace {

using fixtures::nat;

std::vector<Value> scalar_coeffs(const TruncatedSeries<Mat>& s) {
  std::vector<Value> out;
  for (const auto& m : s.coefficients()) out.push_back(m(0, 0));
  return out;
}

std::vector<Value> scalar_coeffs(const TruncatedSeries<Vec>& s) {
  std::vector<Value> out;
  for (const auto& v : s.coefficients()) out.push_back(v[0]);
  return out;
}

using V = std::vector<Value>;

TEST(Series, OfSequences) {
  auto d = series_of_sequence(nat(), delta(nat()), 4);
  EXPECT_EQ(d.coefficients(), (V{1, 0, 0, 0, 0}));
  auto ones = series_of_sequence(nat(), Seq<Value>::constant(1), 3);
  EXPECT_EQ(ones.coefficients(), (V{1, 1, 1, 1}));
  EXPECT_EQ(series_mul(ones, ones).coefficients(), (V{1, 2, 3, 4}));
  EXPECT_EQ(series_mul(ones, d).coefficients(), ones.coefficients());
  auto zero = series_of_sequence(nat(), Seq<Value>::constant(0), 3);
  EXPECT_EQ(series_mul(zero, ones).coefficients(), (V{0, 0, 0, 0}));
  EXPECT_EQ(series_add(ones, zero), ones);
  EXPECT_THROW(TruncatedSeries<Value>(nat(), {}), RangeError);
}

TEST(Series, Example1Direct) {
  auto z = z_direct(fixtures::example1(), 4);
  EXPECT_EQ(scalar_coeffs(z), (V{0, 0, 1, 6, 33}));
  EXPECT_EQ(render_series(component_series(z, 0)), "0 + 0/z + 1/z^2 + 6/z^3 + 33/z^4");
  EXPECT_EQ(render_series(component_series(z_direct(fixtures::example1(), 0), 0)), "0");
}

TEST(Kernels, Constant) {
  EXPECT_EQ(scalar_coeffs(s_constant(Mat(nat(), 1, {2}), 4)), (V{1, 2, 4, 8, 16}));
  auto z = s_constant(Mat::zero(2, nat()), 3);
  EXPECT_EQ(z[0], Mat::identity(2, nat()));
  EXPECT_EQ(z[2], Mat::zero(2, nat()));
  auto id = s_constant(Mat::identity(2, nat()), 3);
  for (const auto& c : id.coefficients()) EXPECT_EQ(c, Mat::identity(2, nat()));
}

TEST(Kernels, Variable) {
  Seq<Mat> a = fixtures::scalar("n+1").sequence();
  EXPECT_EQ(scalar_coeffs(s_variable(a, 0, 3)), (V{1, 2, 6, 24}));
  EXPECT_EQ(scalar_coeffs(s_variable(a, 1, 2)), (V{1, 3, 12}));
  Mat c(nat(), 2, {1, 2, 0, 3});
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(s_variable(Seq<Mat>::constant(c), n, 6), s_constant(c, 6));
}

TEST(Kernels, Composed) {
  Mat one(nat(), 1, {1});
  EXPECT_EQ(scalar_coeffs(s_composed_constant(one, one, 4)), (V{1, 2, 3, 4, 5}));
  Mat a(nat(), 2, {1, 2, 0, 3}), b(nat(), 2, {0, 1, 1, 1}), z = Mat::zero(2, nat());
  EXPECT_EQ(s_composed_constant(a, z, 5), s_constant(a, 5));
  EXPECT_EQ(s_composed_constant(z, b, 5), s_constant(b, 5));

  Seq<Mat> av = fixtures::scalar("n+1").sequence();
  Seq<Mat> bv = fixtures::scalar("n").sequence();
  auto s0 = s_composed_variable(av, bv, 0, 3);
  EXPECT_EQ(s0[0], Mat::identity(1, nat()));
  EXPECT_EQ(s0[1], Mat(nat(), 1, {4}));
  for (std::size_t n = 0; n < 4; ++n)
    EXPECT_EQ(s_composed_variable(Seq<Mat>::constant(a), Seq<Mat>::constant(b), n, 5),
              s_composed_constant(a, b, 5));
}

TEST(Theorems, ConstantPowersOfTwo) {
  RecurrenceSystem sys = fixtures::constant_system({2}, "1");
  auto z = z_theorem(sys, Theorem::constant_single, 4);
  EXPECT_EQ(scalar_coeffs(z), (V{0, 1, 3, 7, 15}));
  EXPECT_EQ(z_direct(sys, 4), z);
  EXPECT_EQ(render_series(component_series(z, 0)), "0 + 1/z + 3/z^2 + 7/z^3 + 15/z^4");
}

TEST(Theorems, Example1) {
  auto z = z_theorem(fixtures::example1(), Theorem::variable_composed, 8);
  EXPECT_EQ(z[4], Vec(nat(), {33}));
  EXPECT_TRUE(verify_theorem(fixtures::example1(), Theorem::variable_composed, 8).passed);
}

TEST(Theorems, ZeroInputGivesZeroSeries) {
  RecurrenceSystem single = fixtures::constant_system({1, 2, 3, 4}, "0", 2);
  for (Theorem t : {Theorem::constant_single, Theorem::variable_single}) {
    auto z = z_theorem(single, t, 6);
    for (const auto& c : z.coefficients()) EXPECT_TRUE(c.is_zero());
  }
  ComposedSystem comp(fixtures::scalar("n+1"), fixtures::scalar("n"), fixtures::input("0"),
                      Vec::zero(1, nat()), Vec::zero(1, nat()));
  auto zc = z_theorem(comp, Theorem::variable_composed, 6);
  for (const auto& c : zc.coefficients()) EXPECT_TRUE(c.is_zero());
}

TEST(Theorems, KindChecks) {
  RecurrenceSystem constant = fixtures::constant_system({2}, "1");
  RecurrenceSystem variable(fixtures::scalar("n"), fixtures::input("1"), Vec::zero(1, nat()));
  EXPECT_NO_THROW(check_theorem_kind(constant, Theorem::variable_single));
  EXPECT_THROW(check_theorem_kind(variable, Theorem::constant_single), KindMismatchError);
  EXPECT_THROW(check_theorem_kind(constant, Theorem::constant_composed), KindMismatchError);
  EXPECT_THROW(check_theorem_kind(fixtures::example1(), Theorem::constant_composed), KindMismatchError);
  EXPECT_THROW(check_theorem_kind(fixtures::example1(), Theorem::variable_single), KindMismatchError);
  EXPECT_EQ(default_theorem(variable), Theorem::variable_single);
  EXPECT_EQ(default_theorem(fixtures::example1()), Theorem::variable_composed);
}

TEST(Theorems, RandomBooleanConstant) {
  const Semiring& b = builtin_semiring("boolean");
  Rng rng(7);
  RecurrenceSystem sys = random_system(b, rng, 2, false);
  EXPECT_TRUE(verify_theorem(sys, Theorem::constant_single, 12).passed);
}

TEST(Theorems, DirectSeriesMatchesIterationOracle) {
  Rng rng(31);
  for (const auto& name : builtin_semiring_names()) {
    const Semiring& s = builtin_semiring(name);
    RecurrenceSystem sys = random_system(s, rng, 2, true);
    auto expected = oracle::iterate(sys, 12);
    auto z = z_direct(sys, 12);
    for (std::size_t m = 0; m <= 12; ++m) EXPECT_EQ(oracle::values(z[m]), expected[m]);
  }
}

// Shifting the falling-product window by one (t = m+n+1 instead of m+n) must
// be caught; with g(0) != 0 the first disagreement is the 1/z^2 coefficient.
TEST(Theorems, PerturbedAssemblyIsCaught) {
  RecurrenceSystem sys(fixtures::scalar("n+1"), fixtures::input("n+1"), Vec::zero(1, nat()));
  FallingProducts a(sys.coefficient_sequence(), 1, nat());
  const auto& g = sys.input().sequence();
  const std::size_t N = 6;
  std::vector<Vec> coeffs;
  for (std::size_t K = 0; K <= N; ++K) {
    Vec acc = Vec::zero(1, nat());
    for (std::size_t n = 0; n + 1 <= K; ++n) acc = acc + a(K - 1 - n, K - 1 + 1) * g(n);
    coeffs.push_back(acc);
  }
  TruncatedSeries<Vec> perturbed(nat(), coeffs);
  auto report = compare_series(z_direct(sys, N), perturbed, Theorem::variable_single);
  EXPECT_FALSE(report.passed);
  ASSERT_TRUE(report.mismatch_order.has_value());
  EXPECT_EQ(*report.mismatch_order, 2u);
  EXPECT_TRUE(verify_theorem(sys, Theorem::variable_single, N).passed);
}

}  // namespace
}  // namespace zrec
