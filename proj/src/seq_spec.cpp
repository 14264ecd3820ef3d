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

#include "zrec/seq_spec.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "zrec/errors.hpp"

namespace zrec {

namespace {

void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b, int sign) {
  IntPolynomial r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
  trim(r);
  return r;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    IntPolynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  IntPolynomial expression() {
    IntPolynomial acc = term();
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        acc = add(acc, term(), 1);
      } else if (peek() == '-') {
        ++pos_;
        acc = add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  IntPolynomial term() {
    IntPolynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') return acc;
      ++pos_;
      acc = multiply(acc, factor());
    }
  }

  IntPolynomial factor() {
    skip_space();
    char c = peek();
    if (c == 'n') {
      ++pos_;
      return {0, 1};
    }
    if (c == '(') {
      ++pos_;
      IntPolynomial inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      IntPolynomial p{Integer(std::string(text_.substr(start, pos_ - start)))};
      trim(p);
      return p;
    }
    fail(c == '\0' ? "unexpected end of expression" : "expected integer, 'n' or '('");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at column " +
                     std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

Integer evaluate(const IntPolynomial& p, const Integer& n) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * n + *it;
  return acc;
}

SeqSpec SeqSpec::constant(std::string literal) { return SeqSpec(Constant{std::move(literal)}); }

SeqSpec SeqSpec::polynomial(std::string text) {
  IntPolynomial coefficients = parse_polynomial(text);
  return SeqSpec(Polynomial{std::move(text), std::move(coefficients)});
}

SeqSpec SeqSpec::table(std::vector<std::pair<std::size_t, std::string>> entries, Tail tail) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) {
      throw ParseError("table index " + std::to_string(entries[i].first) + " listed twice");
    }
  }
  return SeqSpec(Table{std::move(entries), tail});
}

bool SeqSpec::is_identically_zero(const Semiring& s) const {
  if (const auto* c = std::get_if<Constant>(&form_)) return s.parse_literal(c->literal) == s.zero();
  if (const auto* p = std::get_if<Polynomial>(&form_)) {
    return p->coefficients.empty() && s.from_integer(0) == s.zero();
  }
  const auto& t = std::get<Table>(form_);
  return std::all_of(t.entries.begin(), t.entries.end(),
                     [&s](const auto& e) { return s.parse_literal(e.second) == s.zero(); });
}

std::optional<Value> SeqSpec::constant_value(const Semiring& s) const {
  if (const auto* c = std::get_if<Constant>(&form_)) return s.parse_literal(c->literal);
  if (const auto* p = std::get_if<Polynomial>(&form_)) {
    if (p->coefficients.size() <= 1) return s.from_integer(evaluate(p->coefficients, 0));
    return std::nullopt;
  }
  if (is_identically_zero(s)) return s.zero();
  return std::nullopt;
}

std::string SeqSpec::describe() const {
  if (const auto* c = std::get_if<Constant>(&form_)) return c->literal;
  if (const auto* p = std::get_if<Polynomial>(&form_)) return p->text;
  const auto& t = std::get<Table>(form_);
  std::string out = "table{";
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(t.entries[i].first) + ":" + t.entries[i].second;
  }
  out += t.tail == Tail::zero ? "; zero}" : "; repeat_last}";
  return out;
}

Seq<Value> seq_from_spec(const SeqSpec& spec, const Semiring& s) {
  auto shared = std::make_shared<const SeqSpec>(spec);
  const auto& form = spec.form();

  if (const auto* c = std::get_if<SeqSpec::Constant>(&form)) {
    Value v = s.parse_literal(c->literal);
    return Seq<Value>([v](std::size_t) { return v; }, spec.describe(), shared);
  }

  if (const auto* p = std::get_if<SeqSpec::Polynomial>(&form)) {
    IntPolynomial coefficients = p->coefficients;
    std::string text = p->text;
    return Seq<Value>(
        [&s, coefficients, text](std::size_t n) {
          Integer value = evaluate(coefficients, Integer(n));
          try {
            return s.from_integer(value);
          } catch (const LiteralError& e) {
            throw LiteralError(e.reason(), e.token(),
                               "sequence '" + text + "' at n=" + std::to_string(n) + ": " +
                                   e.what());
          }
        },
        spec.describe(), shared);
  }

  const auto& t = std::get<SeqSpec::Table>(form);
  std::map<std::size_t, Value> values;
  for (const auto& [index, literal] : t.entries) values.emplace(index, s.parse_literal(literal));
  const SeqSpec::Tail tail = t.tail;
  return Seq<Value>(
      [&s, values = std::move(values), tail](std::size_t n) {
        if (values.empty()) return s.zero();
        auto it = values.find(n);
        if (it != values.end()) return it->second;
        const auto& last = *values.rbegin();
        if (n > last.first) return tail == SeqSpec::Tail::repeat_last ? last.second : s.zero();
        return s.zero();
      },
      spec.describe(), shared);
}

bool is_identically_zero(const Seq<Value>& seq, const Semiring& s) {
  return seq.spec() != nullptr && seq.spec()->is_identically_zero(s);
}

}  // namespace zrec
