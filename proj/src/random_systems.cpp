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

#include "zrec/random_systems.hpp"

#include <string>

namespace zrec {

std::vector<Value> sample_pool(const Semiring& s) {
  if (s.name() == "natural") return {0, 1, 2, 3};
  if (s.name() == "integer") return {0, 1, -1, 2};
  if (s.name() == "tropical_min_plus") return {Value::pos_infinity(), 0, 2, -1};
  if (s.name() == "max_plus") return {Value::neg_infinity(), 0, 1, -2};
  return {s.zero(), s.one()};
}

namespace {

// Polynomials whose values stay inside the carrier for every n.
const std::vector<std::string>& polynomial_pool(const Semiring& s) {
  static const std::vector<std::string> none;
  static const std::vector<std::string> nonnegative = {"n", "n+1", "2*n+1", "n*n",
                                                       "(n+1)*(n+2)"};
  static const std::vector<std::string> signed_pool = {"n", "n+1", "n-3", "1-n", "n*n-2*n"};
  if (s.name() == "boolean") return none;
  if (s.name() == "natural") return nonnegative;
  return signed_pool;
}

}  // namespace

SeqSpec random_seq_spec(const Semiring& s, Rng& rng) {
  const auto pool = sample_pool(s);
  const auto& polys = polynomial_pool(s);
  const std::size_t forms = polys.empty() ? 2 : 3;
  switch (rng.below(forms)) {
    case 0:
      return SeqSpec::constant(s.render(rng.pick(pool)));
    case 1: {
      std::vector<std::pair<std::size_t, std::string>> entries;
      const std::size_t len = 1 + rng.below(4);
      for (std::size_t i = 0; i < len; ++i) entries.emplace_back(i, s.render(rng.pick(pool)));
      auto tail = rng.below(2) == 0 ? SeqSpec::Tail::zero : SeqSpec::Tail::repeat_last;
      return SeqSpec::table(std::move(entries), tail);
    }
    default:
      return SeqSpec::polynomial(rng.pick(polys));
  }
}

Mat random_matrix(const Semiring& s, Rng& rng, std::size_t k) {
  const auto pool = sample_pool(s);
  std::vector<Value> entries;
  for (std::size_t i = 0; i < k * k; ++i) entries.push_back(rng.pick(pool));
  return Mat(s, k, std::move(entries));
}

Coefficients random_coefficients(const Semiring& s, Rng& rng, std::size_t k, bool variable) {
  if (!variable) return random_matrix(s, rng, k);
  std::vector<Seq<Value>> entries;
  for (std::size_t i = 0; i < k * k; ++i) entries.push_back(seq_from_spec(random_seq_spec(s, rng), s));
  return SeqMatrix(s, k, std::move(entries));
}

SeqVector random_input(const Semiring& s, Rng& rng, std::size_t k) {
  std::vector<Seq<Value>> components;
  for (std::size_t i = 0; i < k; ++i) {
    components.push_back(seq_from_spec(random_seq_spec(s, rng), s));
  }
  return SeqVector(s, std::move(components));
}

RecurrenceSystem random_system(const Semiring& s, Rng& rng, std::size_t k, bool variable) {
  Coefficients a = random_coefficients(s, rng, k, variable);
  SeqVector g = random_input(s, rng, k);
  return RecurrenceSystem(std::move(a), std::move(g), Vec::zero(k, s));
}

ComposedSystem random_composed_system(const Semiring& s, Rng& rng, std::size_t k, bool variable) {
  Coefficients a = random_coefficients(s, rng, k, variable);
  Coefficients b = random_coefficients(s, rng, k, variable);
  SeqVector h = random_input(s, rng, k);
  return ComposedSystem(std::move(a), std::move(b), std::move(h), Vec::zero(k, s),
                        Vec::zero(k, s));
}

}  // namespace zrec
