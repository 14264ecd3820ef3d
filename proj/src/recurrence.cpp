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

#include "zrec/recurrence.hpp"

#include <memory>
#include <mutex>
#include <string>

#include "zrec/errors.hpp"
#include "zrec/seq_spec.hpp"

namespace zrec {

namespace {

void require_same(const Semiring& a, const Semiring& b, const char* what) {
  if (&a != &b) {
    throw SemiringMismatchError(std::string(what) + " is over " + b.name() + ", expected " +
                                a.name());
  }
}

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + " has dimension " + std::to_string(got) +
                         ", expected " + std::to_string(expected));
  }
}

Seq<Mat> powers(const Mat& a) {
  return Seq<Mat>([a](std::size_t m) { return power(a, m); }, "powers");
}

}  // namespace

SeqMatrix::SeqMatrix(const Semiring& s, std::size_t k, std::vector<Seq<Value>> entries)
    : semiring_(&s),
      k_(k),
      entries_(std::move(entries)),
      sequence_([&s, k, es = entries_](std::size_t n) {
        std::vector<Value> values;
        values.reserve(es.size());
        for (const auto& e : es) values.push_back(e(n));
        return Mat(s, k, std::move(values));
      }) {
  check_dimension(k);
  require_dim(k * k, entries_.size(), "coefficient entry list");
}

SeqMatrix::SeqMatrix(const Semiring& s, std::size_t k, Seq<Mat> sequence)
    : semiring_(&s), k_(k), sequence_(std::move(sequence)) {
  check_dimension(k);
  entries_.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      entries_.emplace_back([seq = sequence_, i, j](std::size_t n) { return seq(n)(i, j); });
    }
  }
}

SeqVector::SeqVector(const Semiring& s, std::vector<Seq<Value>> components)
    : semiring_(&s),
      components_(std::move(components)),
      sequence_([&s, cs = components_](std::size_t n) {
        std::vector<Value> values;
        values.reserve(cs.size());
        for (const auto& c : cs) values.push_back(c(n));
        return Vec(s, std::move(values));
      }) {
  check_dimension(components_.size());
}

SeqVector::SeqVector(const Semiring& s, std::size_t k, Seq<Vec> sequence)
    : semiring_(&s), sequence_(std::move(sequence)) {
  check_dimension(k);
  components_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    components_.emplace_back([seq = sequence_, i](std::size_t n) { return seq(n)[i]; });
  }
}

SeqVector SeqVector::zero(std::size_t k, const Semiring& s) {
  check_dimension(k);
  std::vector<Seq<Value>> components;
  for (std::size_t i = 0; i < k; ++i) {
    components.emplace_back([&s](std::size_t) { return s.zero(); }, "0",
                            std::make_shared<const SeqSpec>(SeqSpec::constant(
                                s.render(s.zero()))));
  }
  return SeqVector(s, std::move(components));
}

std::size_t dim(const Coefficients& c) {
  return std::visit([](const auto& x) { return x.dim(); }, c);
}

const Semiring& semiring_of(const Coefficients& c) {
  return std::visit([](const auto& x) -> const Semiring& { return x.semiring(); }, c);
}

Seq<Mat> as_sequence(const Coefficients& c) {
  if (const auto* m = std::get_if<Mat>(&c)) return Seq<Mat>::constant(*m, to_string(*m));
  return std::get<SeqMatrix>(c).sequence();
}

Seq<Value> entry_sequence(const Coefficients& c, std::size_t i, std::size_t j) {
  if (const auto* m = std::get_if<Mat>(&c)) {
    const Semiring& s = m->semiring();
    Value v = (*m)(i, j);
    std::string literal = s.render(v);
    return Seq<Value>([v](std::size_t) { return v; }, literal,
                      std::make_shared<const SeqSpec>(SeqSpec::constant(literal)));
  }
  return std::get<SeqMatrix>(c).entry(i, j);
}

RecurrenceSystem::RecurrenceSystem(Coefficients coefficients, SeqVector input, Vec initial)
    : coefficients_(std::move(coefficients)),
      coefficient_sequence_(as_sequence(coefficients_)),
      input_(std::move(input)),
      initial_(std::move(initial)) {
  const Semiring& s = semiring();
  require_same(s, input_.semiring(), "input");
  require_same(s, initial_.semiring(), "initial vector");
  require_dim(dim(), input_.dim(), "input");
  require_dim(dim(), initial_.dim(), "initial vector");
}

ComposedSystem::ComposedSystem(Coefficients outer, Coefficients inner, SeqVector h,
                               Vec initial_f, Vec initial_g)
    : outer_(std::move(outer)),
      inner_(std::move(inner)),
      h_(std::move(h)),
      initial_f_(std::move(initial_f)),
      initial_g_(std::move(initial_g)) {
  const Semiring& s = semiring();
  require_same(s, semiring_of(inner_), "inner coefficients");
  require_same(s, h_.semiring(), "input h");
  require_same(s, initial_f_.semiring(), "initial f");
  require_same(s, initial_g_.semiring(), "initial g");
  require_dim(dim(), zrec::dim(inner_), "inner coefficients");
  require_dim(dim(), h_.dim(), "input h");
  require_dim(dim(), initial_f_.dim(), "initial f");
  require_dim(dim(), initial_g_.dim(), "initial g");
}

RecurrenceSystem ComposedSystem::inner_system() const {
  return RecurrenceSystem(inner_, h_, initial_g_);
}

RecurrenceSystem ComposedSystem::outer_system() const {
  return RecurrenceSystem(outer_, SeqVector(semiring(), dim(), solution(inner_system())),
                          initial_f_);
}

Seq<Vec> solution(const RecurrenceSystem& sys) {
  struct State {
    State(Seq<Mat> coefficients, Seq<Vec> input) : a(std::move(coefficients)), g(std::move(input)) {}
    Seq<Mat> a;
    Seq<Vec> g;
    std::mutex mu;
    std::vector<Vec> values;
  };
  auto state = std::make_shared<State>(sys.coefficient_sequence(), sys.input().sequence());
  state->values.push_back(sys.initial());
  return Seq<Vec>(
      [state](std::size_t n) {
        std::lock_guard<std::mutex> lock(state->mu);
        while (state->values.size() <= n) {
          std::size_t i = state->values.size() - 1;
          state->values.push_back(state->a(i) * state->values.back() + state->g(i));
        }
        return state->values[n];
      },
      "iterated solution");
}

std::vector<Vec> iterate(const RecurrenceSystem& sys, std::size_t N) {
  std::vector<Vec> f{sys.initial()};
  f.reserve(N + 1);
  const auto& a = sys.coefficient_sequence();
  const auto& g = sys.input().sequence();
  for (std::size_t n = 0; n < N; ++n) f.push_back(a(n) * f.back() + g(n));
  return f;
}

std::vector<Vec> iterate(const ComposedSystem& sys, std::size_t N) {
  return iterate(sys.outer_system(), N);
}

Vec solve_constant(const Mat& a, const Seq<Vec>& g, std::size_t n) {
  return convolve(a.semiring(), powers(a), g, n);
}

Vec solve_variable(const Seq<Mat>& a, const Seq<Vec>& g, std::size_t n) {
  const Mat a0 = a(0);
  return solve_variable(FallingProducts(a, a0.dim(), a0.semiring()), g, n);
}

Vec solve_variable(const FallingProducts& a, const Seq<Vec>& g, std::size_t n) {
  const Semiring& s = a.sequence()(0).semiring();
  return convolve_fixed(s, a, g, n, n);
}

Vec solve_composed_constant(const Mat& a, const Mat& b, const Seq<Vec>& h, std::size_t n) {
  const Semiring& s = a.semiring();
  // The bracketed inner convolution, as a sequence in its own variable.
  Seq<Vec> inner = convolution(s, powers(b), h);
  return convolve(s, powers(a), inner, n);
}

Vec solve_composed_variable(const Seq<Mat>& a, const Seq<Mat>& b, const Seq<Vec>& h,
                            std::size_t n) {
  const Mat a0 = a(0);
  return solve_composed_variable(FallingProducts(a, a0.dim(), a0.semiring()),
                                 FallingProducts(b, a0.dim(), a0.semiring()), h, n);
}

Vec solve_composed_variable(const FallingProducts& a, const FallingProducts& b,
                            const Seq<Vec>& h, std::size_t n) {
  const Semiring& s = a.sequence()(0).semiring();
  // Inner bracket: for each convolution index m, B's argument is fixed at m.
  Seq<Vec> inner([&s, b, h](std::size_t m) { return convolve_fixed(s, b, h, m, m); },
                 "inner bracket");
  // Outer bracket: A's argument is fixed at n + 1.
  return convolve_fixed(s, a, inner, n, n + 1);
}

void require_zero_initial(const RecurrenceSystem& sys) {
  if (!sys.initial().is_zero()) {
    throw InitialConditionError(
        "closed-form solution requires f(0) = 0, got f(0) = " + to_string(sys.initial()) +
        "; use --method iterate for nonzero initial vectors");
  }
}

void require_zero_initial(const ComposedSystem& sys) {
  if (!sys.initial_f().is_zero() || !sys.initial_g().is_zero()) {
    throw InitialConditionError(
        "closed-form solution requires f(0) = g(0) = 0, got f(0) = " +
        to_string(sys.initial_f()) + ", g(0) = " + to_string(sys.initial_g()) +
        "; use --method iterate for nonzero initial vectors");
  }
}

Vec solve(const RecurrenceSystem& sys, std::size_t n) {
  require_zero_initial(sys);
  const auto& g = sys.input().sequence();
  if (const auto* a = std::get_if<Mat>(&sys.coefficients())) return solve_constant(*a, g, n);
  return solve_variable(sys.coefficient_sequence(), g, n);
}

Vec solve(const ComposedSystem& sys, std::size_t n) {
  require_zero_initial(sys);
  const auto& h = sys.input().sequence();
  const auto* a = std::get_if<Mat>(&sys.outer());
  const auto* b = std::get_if<Mat>(&sys.inner());
  if (a && b) return solve_composed_constant(*a, *b, h, n);
  return solve_composed_variable(as_sequence(sys.outer()), as_sequence(sys.inner()), h, n);
}

std::vector<Vec> closed_form_solution(const RecurrenceSystem& sys, std::size_t N) {
  require_zero_initial(sys);
  const Semiring& s = sys.semiring();
  const auto& g = sys.input().sequence();
  FallingProducts falling(sys.coefficient_sequence(), sys.dim(), s);
  std::vector<Vec> f{Vec::zero(sys.dim(), s)};
  for (std::size_t n = 0; n < N; ++n) {
    if (const auto* a = std::get_if<Mat>(&sys.coefficients())) {
      f.push_back(solve_constant(*a, g, n));
    } else {
      f.push_back(solve_variable(falling, g, n));
    }
  }
  return f;
}

std::vector<Vec> closed_form_solution(const ComposedSystem& sys, std::size_t N) {
  require_zero_initial(sys);
  const Semiring& s = sys.semiring();
  const auto& h = sys.input().sequence();
  FallingProducts fa(as_sequence(sys.outer()), sys.dim(), s);
  FallingProducts fb(as_sequence(sys.inner()), sys.dim(), s);
  std::vector<Vec> f;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n < 2) {
      // f(1) = A(0) f(0) + g(0) = 0 under zero initial vectors.
      f.push_back(Vec::zero(sys.dim(), s));
    } else if (sys.has_constant_coefficients()) {
      f.push_back(solve_composed_constant(std::get<Mat>(sys.outer()), std::get<Mat>(sys.inner()),
                                          h, n - 2));
    } else {
      f.push_back(solve_composed_variable(fa, fb, h, n - 2));
    }
  }
  return f;
}

}  // namespace zrec
