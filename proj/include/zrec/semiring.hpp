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
// Semiring descriptors and carrier values.
//
// All computation in the library is parameterized at run time over a
// Semiring, which bundles the two operations, their identities and a literal
// grammar. Carrier values are exact: arbitrary-precision integers, optionally
// extended with a symbolic +inf or -inf for the tropical semirings.

#ifndef ZREC_SEMIRING_HPP_
#define ZREC_SEMIRING_HPP_

#include <concepts>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zrec {

using Integer = boost::multiprecision::cpp_int;

// An element of some semiring carrier. Which values are legal depends on the
// semiring; Value itself only guarantees exact equality.
class Value {
 public:
  enum class Kind : unsigned char { finite, pos_inf, neg_inf };

  Value() = default;
  Value(Integer v) : number_(std::move(v)) {}  // NOLINT: implicit on purpose
  template <std::integral I>
  Value(I v) : number_(v) {}  // NOLINT

  static Value pos_infinity() { return Value(Kind::pos_inf); }
  static Value neg_infinity() { return Value(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  // Meaningful only for finite values; zero otherwise.
  const Integer& number() const { return number_; }

  bool operator==(const Value&) const = default;

 private:
  explicit Value(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  Integer number_ = 0;
};

// "inf", "-inf", or the decimal integer.
std::string to_string(const Value& v);
std::ostream& operator<<(std::ostream& os, const Value& v);

class Semiring {
 public:
  using BinaryOp = std::function<Value(const Value&, const Value&)>;
  using Parser = std::function<Value(std::string_view)>;
  using Renderer = std::function<std::string(const Value&)>;

  struct Ops {
    std::string name;
    BinaryOp add;
    BinaryOp mul;
    Value zero;
    Value one;
    bool is_commutative_mul = true;
    Parser parse_literal;
    Renderer render;
  };

  explicit Semiring(Ops ops) : ops_(std::move(ops)) {}

  Semiring(const Semiring&) = delete;
  Semiring& operator=(const Semiring&) = delete;

  const std::string& name() const { return ops_.name; }
  Value add(const Value& a, const Value& b) const { return ops_.add(a, b); }
  Value mul(const Value& a, const Value& b) const { return ops_.mul(a, b); }
  const Value& zero() const { return ops_.zero; }
  const Value& one() const { return ops_.one; }
  bool is_commutative_mul() const { return ops_.is_commutative_mul; }

  // Throws LiteralError.
  Value parse_literal(std::string_view text) const { return ops_.parse_literal(text); }
  std::string render(const Value& v) const { return ops_.render(v); }

  // Maps an ordinary integer into the carrier through the literal parser, so
  // that 5 means the number five in every semiring (not 1+1+1+1+1).
  Value from_integer(const Integer& i) const;

 private:
  Ops ops_;
};

// Canonical names: natural, boolean, tropical_min_plus, max_plus, integer.
const std::vector<std::string>& builtin_semiring_names();

// Returns a process-lifetime descriptor. Throws UnknownSemiringError listing
// the valid names.
const Semiring& builtin_semiring(std::string_view name);

struct LawResult {
  std::string law;
  bool passed = true;
  // Number of failing instances over all sample tuples.
  std::size_t failures = 0;
  // Operands of the first failing instance, in sample order.
  std::vector<Value> counterexample;
};

struct LawReport {
  std::string semiring;
  std::vector<LawResult> laws;

  bool all_passed() const;
  const LawResult* find(std::string_view law) const;
};

// Exhaustive check over all pairs and triples drawn from `samples`. Failures
// are reported as data. Commutativity of multiplication is only checked when
// the descriptor declares it.
LawReport check_semiring_laws(const Semiring& s, const std::vector<Value>& samples);

// Eight-element sample pool per builtin, used by `zrec laws` and the
// acceptance suite. Boolean has only two carrier values, so its pool repeats.
std::vector<Value> default_law_samples(const Semiring& s);

std::string render(const LawReport& report);

}  // namespace zrec

#endif  // ZREC_SEMIRING_HPP_
