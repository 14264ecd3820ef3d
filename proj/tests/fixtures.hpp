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

#ifndef ZREC_TESTS_FIXTURES_HPP_
#define ZREC_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "zrec/recurrence.hpp"
#include "zrec/seq_spec.hpp"

namespace fixtures {

inline const zrec::Semiring& nat() { return zrec::builtin_semiring("natural"); }

inline zrec::Seq<zrec::Value> poly(const std::string& text, const zrec::Semiring& s = nat()) {
  return zrec::seq_from_spec(zrec::SeqSpec::polynomial(text), s);
}

inline zrec::Seq<zrec::Value> constant(const std::string& literal,
                                       const zrec::Semiring& s = nat()) {
  return zrec::seq_from_spec(zrec::SeqSpec::constant(literal), s);
}

inline zrec::SeqMatrix scalar(const std::string& text, const zrec::Semiring& s = nat()) {
  return zrec::SeqMatrix(s, 1, {poly(text, s)});
}

inline zrec::SeqVector input(const std::string& text, const zrec::Semiring& s = nat()) {
  return zrec::SeqVector(s, {poly(text, s)});
}

// A(n) = n+1, B(n) = n, h(n) = n+1, zero initial values.
inline zrec::ComposedSystem example1() {
  return zrec::ComposedSystem(scalar("n+1"), scalar("n"), input("n+1"), zrec::Vec::zero(1, nat()),
                              zrec::Vec::zero(1, nat()));
}

inline zrec::RecurrenceSystem constant_system(std::vector<zrec::Value> a, const std::string& g,
                                              std::size_t k = 1) {
  std::vector<zrec::Seq<zrec::Value>> comps(k, poly(g));
  return zrec::RecurrenceSystem(zrec::Mat(nat(), k, std::move(a)), zrec::SeqVector(nat(), comps),
                                zrec::Vec::zero(k, nat()));
}

inline std::vector<zrec::Value> scalars(const std::vector<zrec::Vec>& v) {
  std::vector<zrec::Value> out;
  for (const auto& x : v) out.push_back(x[0]);
  return out;
}

}  // namespace fixtures

#endif  // ZREC_TESTS_FIXTURES_HPP_
