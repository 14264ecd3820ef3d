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

#include "zrec/semiring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "zrec/errors.hpp"

namespace zrec {

std::string to_string(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::pos_inf:
      return "inf";
    case Value::Kind::neg_inf:
      return "-inf";
    case Value::Kind::finite:
      break;
  }
  return v.number().str();
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << to_string(v); }

Value Semiring::from_integer(const Integer& i) const { return parse_literal(i.str()); }

namespace {

[[noreturn]] void malformed(std::string_view semiring, std::string_view token) {
  throw LiteralError(LiteralError::Reason::malformed, std::string(token),
                     "malformed " + std::string(semiring) + " literal '" + std::string(token) +
                         "'");
}

[[noreturn]] void out_of_carrier(std::string_view semiring, std::string_view token) {
  throw LiteralError(LiteralError::Reason::out_of_carrier, std::string(token),
                     "literal '" + std::string(token) + "' is not in the " +
                         std::string(semiring) + " carrier");
}

// Accepts an optional '-' followed by one or more decimal digits.
bool is_integer_token(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (start == text.size()) return false;
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Integer parse_integer(std::string_view text) { return Integer(std::string(text)); }

std::string render_value(const Value& v) { return to_string(v); }

Semiring make_natural() {
  Semiring::Ops ops;
  ops.name = "natural";
  ops.add = [](const Value& a, const Value& b) { return Value(a.number() + b.number()); };
  ops.mul = [](const Value& a, const Value& b) { return Value(a.number() * b.number()); };
  ops.zero = 0;
  ops.one = 1;
  ops.parse_literal = [](std::string_view text) {
    if (!is_integer_token(text)) malformed("natural", text);
    Integer i = parse_integer(text);
    if (i < 0) out_of_carrier("natural", text);
    return Value(std::move(i));
  };
  ops.render = render_value;
  return Semiring(std::move(ops));
}

Semiring make_integer() {
  Semiring::Ops ops;
  ops.name = "integer";
  ops.add = [](const Value& a, const Value& b) { return Value(a.number() + b.number()); };
  ops.mul = [](const Value& a, const Value& b) { return Value(a.number() * b.number()); };
  ops.zero = 0;
  ops.one = 1;
  ops.parse_literal = [](std::string_view text) {
    if (!is_integer_token(text)) malformed("integer", text);
    return Value(parse_integer(text));
  };
  ops.render = render_value;
  return Semiring(std::move(ops));
}

Semiring make_boolean() {
  Semiring::Ops ops;
  ops.name = "boolean";
  ops.add = [](const Value& a, const Value& b) {
    return Value(a.number() != 0 || b.number() != 0 ? 1 : 0);
  };
  ops.mul = [](const Value& a, const Value& b) {
    return Value(a.number() != 0 && b.number() != 0 ? 1 : 0);
  };
  ops.zero = 0;
  ops.one = 1;
  ops.parse_literal = [](std::string_view text) {
    if (text == "true") return Value(1);
    if (text == "false") return Value(0);
    if (!is_integer_token(text)) malformed("boolean", text);
    Integer i = parse_integer(text);
    if (i != 0 && i != 1) out_of_carrier("boolean", text);
    return Value(std::move(i));
  };
  ops.render = render_value;
  return Semiring(std::move(ops));
}

// Shared by min-plus and max-plus: `absorbing` is the semiring zero, the only
// infinity the carrier admits.
Semiring make_tropical(std::string name, Value absorbing, bool use_min) {
  Semiring::Ops ops;
  ops.name = name;
  ops.add = [absorbing, use_min](const Value& a, const Value& b) {
    if (a == absorbing) return b;
    if (b == absorbing) return a;
    if (use_min) return Value(std::min(a.number(), b.number()));
    return Value(std::max(a.number(), b.number()));
  };
  ops.mul = [absorbing](const Value& a, const Value& b) {
    if (a == absorbing || b == absorbing) return absorbing;
    return Value(a.number() + b.number());
  };
  ops.zero = absorbing;
  ops.one = 0;
  ops.parse_literal = [name, absorbing](std::string_view text) {
    if (text == "inf" || text == "-inf") {
      Value v = text == "inf" ? Value::pos_infinity() : Value::neg_infinity();
      if (v != absorbing) out_of_carrier(name, text);
      return v;
    }
    if (!is_integer_token(text)) malformed(name, text);
    return Value(parse_integer(text));
  };
  ops.render = render_value;
  return Semiring(std::move(ops));
}

}  // namespace

const std::vector<std::string>& builtin_semiring_names() {
  static const std::vector<std::string> names = {"natural", "boolean", "tropical_min_plus",
                                                 "max_plus", "integer"};
  return names;
}

const Semiring& builtin_semiring(std::string_view name) {
  static const Semiring natural = make_natural();
  static const Semiring boolean = make_boolean();
  static const Semiring min_plus =
      make_tropical("tropical_min_plus", Value::pos_infinity(), /*use_min=*/true);
  static const Semiring max_plus =
      make_tropical("max_plus", Value::neg_infinity(), /*use_min=*/false);
  static const Semiring integer = make_integer();

  if (name == "natural") return natural;
  if (name == "boolean") return boolean;
  if (name == "tropical_min_plus") return min_plus;
  if (name == "max_plus") return max_plus;
  if (name == "integer") return integer;

  std::string valid;
  for (const auto& n : builtin_semiring_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw UnknownSemiringError("unknown semiring '" + std::string(name) +
                             "'; valid names: " + valid);
}

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(std::string_view law) const {
  for (const auto& r : laws) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

namespace {

class LawAccumulator {
 public:
  explicit LawAccumulator(std::string law) { result_.law = std::move(law); }

  void record(bool holds, std::initializer_list<Value> operands) {
    if (holds) return;
    if (result_.passed) result_.counterexample.assign(operands);
    result_.passed = false;
    ++result_.failures;
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
};

}  // namespace

LawReport check_semiring_laws(const Semiring& s, const std::vector<Value>& samples) {
  const Value& zero = s.zero();
  const Value& one = s.one();

  LawAccumulator add_assoc("add_associative");
  LawAccumulator add_comm("add_commutative");
  LawAccumulator add_ident("add_identity");
  LawAccumulator mul_assoc("mul_associative");
  LawAccumulator mul_ident("mul_identity");
  LawAccumulator annihil("zero_annihilates");
  LawAccumulator left_dist("left_distributive");
  LawAccumulator right_dist("right_distributive");
  LawAccumulator mul_comm("mul_commutative");
  LawAccumulator literal("literal_round_trip");

  for (const auto& a : samples) {
    add_ident.record(s.add(a, zero) == a && s.add(zero, a) == a, {a});
    mul_ident.record(s.mul(a, one) == a && s.mul(one, a) == a, {a});
    annihil.record(s.mul(a, zero) == zero && s.mul(zero, a) == zero, {a});
    bool round_trips = false;
    try {
      round_trips = s.parse_literal(s.render(a)) == a;
    } catch (const LiteralError&) {
    }
    literal.record(round_trips, {a});

    for (const auto& b : samples) {
      add_comm.record(s.add(a, b) == s.add(b, a), {a, b});
      if (s.is_commutative_mul()) mul_comm.record(s.mul(a, b) == s.mul(b, a), {a, b});

      for (const auto& c : samples) {
        add_assoc.record(s.add(s.add(a, b), c) == s.add(a, s.add(b, c)), {a, b, c});
        mul_assoc.record(s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)), {a, b, c});
        left_dist.record(s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c)), {a, b, c});
        right_dist.record(s.mul(s.add(b, c), a) == s.add(s.mul(b, a), s.mul(c, a)), {a, b, c});
      }
    }
  }

  LawReport report;
  report.semiring = s.name();
  report.laws.push_back(add_assoc.take());
  report.laws.push_back(add_comm.take());
  report.laws.push_back(add_ident.take());
  report.laws.push_back(mul_assoc.take());
  report.laws.push_back(mul_ident.take());
  report.laws.push_back(annihil.take());
  report.laws.push_back(left_dist.take());
  report.laws.push_back(right_dist.take());
  if (s.is_commutative_mul()) report.laws.push_back(mul_comm.take());
  report.laws.push_back(literal.take());
  return report;
}

std::vector<Value> default_law_samples(const Semiring& s) {
  if (s.name() == "natural") return {0, 1, 2, 3, 5, 7, 10, Integer("123456789012345678901234")};
  if (s.name() == "integer") return {0, 1, -1, 2, -3, 5, 7, Integer("-98765432109876543210")};
  if (s.name() == "boolean") return {0, 1, 0, 1, 1, 0, 1, 0};
  if (s.name() == "tropical_min_plus") return {Value::pos_infinity(), 0, 1, 2, -3, 5, 7, -10};
  if (s.name() == "max_plus") return {Value::neg_infinity(), 0, 1, 2, -3, 5, 7, -10};
  return {s.zero(), s.one()};
}

std::string render(const LawReport& report) {
  std::ostringstream out;
  out << "laws for " << report.semiring << "\n";
  for (const auto& law : report.laws) {
    out << "  " << (law.passed ? "PASS" : "FAIL") << "  " << law.law;
    if (!law.passed) {
      out << "  (" << law.failures << " failing instances; counterexample (";
      for (std::size_t i = 0; i < law.counterexample.size(); ++i) {
        if (i) out << ", ";
        out << law.counterexample[i];
      }
      out << "))";
    }
    out << "\n";
  }
  out << (report.all_passed() ? "all laws hold" : "law violations found") << "\n";
  return out.str();
}

}  // namespace zrec
