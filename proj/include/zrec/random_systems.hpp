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
// Seeded random systems for property runs. Entries come from a small pool
// (zero, one and two semiring-specific elements) so that annihilators and
// identities show up often. Every generated sequence is declarative, so a
// failing case can be written back out as a file.

#ifndef ZREC_RANDOM_SYSTEMS_HPP_
#define ZREC_RANDOM_SYSTEMS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "zrec/matrix.hpp"
#include "zrec/recurrence.hpp"
#include "zrec/seq_spec.hpp"

namespace zrec {

// Reproducible across standard libraries: draws are reduced from raw
// mt19937_64 output instead of going through <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<Value> sample_pool(const Semiring& s);

SeqSpec random_seq_spec(const Semiring& s, Rng& rng);
Mat random_matrix(const Semiring& s, Rng& rng, std::size_t k);
Coefficients random_coefficients(const Semiring& s, Rng& rng, std::size_t k, bool variable);
SeqVector random_input(const Semiring& s, Rng& rng, std::size_t k);

// Zero initial vectors.
RecurrenceSystem random_system(const Semiring& s, Rng& rng, std::size_t k, bool variable);
ComposedSystem random_composed_system(const Semiring& s, Rng& rng, std::size_t k, bool variable);

}  // namespace zrec

#endif  // ZREC_RANDOM_SYSTEMS_HPP_
