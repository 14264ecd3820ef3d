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

#include "zrec/ztransform.hpp"

namespace zrec {

TruncatedSeries<Value> component_series(const TruncatedSeries<Vec>& x, std::size_t i) {
  std::vector<Value> c;
  c.reserve(x.order() + 1);
  for (const auto& v : x.coefficients()) c.push_back(v[i]);
  return TruncatedSeries<Value>(x.semiring(), std::move(c));
}

TruncatedSeries<Mat> s_constant(const Mat& a, std::size_t N) {
  std::vector<Mat> c{Mat::identity(a.dim(), a.semiring())};
  for (std::size_t m = 1; m <= N; ++m) c.push_back(a * c.back());
  return TruncatedSeries<Mat>(a.semiring(), std::move(c));
}

TruncatedSeries<Mat> s_variable(const FallingProducts& a, std::size_t n, std::size_t N) {
  const Semiring& s = a.sequence()(0).semiring();
  std::vector<Mat> c;
  c.reserve(N + 1);
  for (std::size_t m = 0; m <= N; ++m) c.push_back(a(m, m + n));
  return TruncatedSeries<Mat>(s, std::move(c));
}

TruncatedSeries<Mat> s_variable(const Seq<Mat>& a, std::size_t n, std::size_t N) {
  const Mat a0 = a(0);
  return s_variable(FallingProducts(a, a0.dim(), a0.semiring()), n, N);
}

TruncatedSeries<Mat> s_composed_constant(const Mat& a, const Mat& b, std::size_t N) {
  if (a.dim() != b.dim()) throw DimensionError("S_AB needs A and B of the same dimension");
  const Semiring& s = a.semiring();
  const auto pa = s_constant(a, N);
  const auto pb = s_constant(b, N);
  std::vector<Mat> c;
  c.reserve(N + 1);
  for (std::size_t m = 0; m <= N; ++m) {
    Mat acc = pa[m] * pb[0];
    for (std::size_t i = 1; i <= m; ++i) acc = acc + pa[m - i] * pb[i];
    c.push_back(std::move(acc));
  }
  return TruncatedSeries<Mat>(s, std::move(c));
}

TruncatedSeries<Mat> s_composed_variable(const FallingProducts& a, const FallingProducts& b,
                                         std::size_t n, std::size_t N) {
  const Mat a0 = a.sequence()(0);
  if (a0.dim() != b.sequence()(0).dim()) {
    throw DimensionError("S_AB(n) needs A and B of the same dimension");
  }
  std::vector<Mat> c;
  c.reserve(N + 1);
  for (std::size_t m = 0; m <= N; ++m) {
    // A's argument is substituted by m + 1 (shifted by n) only after the
    // convolution over the superscript has been expanded.
    const std::size_t t = m + 1 + n;
    Mat acc = a(m, t) * b(0, n);
    for (std::size_t i = 1; i <= m; ++i) acc = acc + a(m - i, t) * b(i, i + n);
    c.push_back(std::move(acc));
  }
  return TruncatedSeries<Mat>(a0.semiring(), std::move(c));
}

TruncatedSeries<Mat> s_composed_variable(const Seq<Mat>& a, const Seq<Mat>& b, std::size_t n,
                                         std::size_t N) {
  const Mat a0 = a(0);
  return s_composed_variable(FallingProducts(a, a0.dim(), a0.semiring()),
                             FallingProducts(b, a0.dim(), a0.semiring()), n, N);
}

Theorem default_theorem(const RecurrenceSystem& sys) {
  return sys.has_constant_coefficients() ? Theorem::constant_single : Theorem::variable_single;
}

Theorem default_theorem(const ComposedSystem& sys) {
  return sys.has_constant_coefficients() ? Theorem::constant_composed
                                         : Theorem::variable_composed;
}

namespace {

std::string theorem_name(Theorem which) {
  return "theorem " + std::to_string(static_cast<int>(which));
}

}  // namespace

void check_theorem_kind(const RecurrenceSystem& sys, Theorem which) {
  if (which == Theorem::constant_composed || which == Theorem::variable_composed) {
    throw KindMismatchError(theorem_name(which) +
                            " is about a composition of two systems, got a single system");
  }
  if (which == Theorem::constant_single && !sys.has_constant_coefficients()) {
    throw KindMismatchError(theorem_name(which) +
                            " needs constant coefficients; use theorem 2 for variable ones");
  }
}

void check_theorem_kind(const ComposedSystem& sys, Theorem which) {
  if (which == Theorem::constant_single || which == Theorem::variable_single) {
    throw KindMismatchError(theorem_name(which) +
                            " is about a single system, got a composition of two systems");
  }
  if (which == Theorem::constant_composed && !sys.has_constant_coefficients()) {
    throw KindMismatchError(theorem_name(which) +
                            " needs constant coefficients; use theorem 4 for variable ones");
  }
}

TruncatedSeries<Vec> z_direct(const RecurrenceSystem& sys, std::size_t N) {
  return z_direct(sys, default_theorem(sys), N);
}

TruncatedSeries<Vec> z_direct(const RecurrenceSystem& sys, Theorem which, std::size_t N) {
  check_theorem_kind(sys, which);
  require_zero_initial(sys);
  const Semiring& s = sys.semiring();
  const auto& g = sys.input().sequence();
  FallingProducts falling(sys.coefficient_sequence(), sys.dim(), s);

  std::vector<Vec> c{Vec::zero(sys.dim(), s)};
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    if (which == Theorem::constant_single) {
      c.push_back(solve_constant(std::get<Mat>(sys.coefficients()), g, n));
    } else {
      c.push_back(solve_variable(falling, g, n));
    }
  }
  return TruncatedSeries<Vec>(s, std::move(c));
}

TruncatedSeries<Vec> z_direct(const ComposedSystem& sys, std::size_t N) {
  return z_direct(sys, default_theorem(sys), N);
}

TruncatedSeries<Vec> z_direct(const ComposedSystem& sys, Theorem which, std::size_t N) {
  check_theorem_kind(sys, which);
  require_zero_initial(sys);
  const Semiring& s = sys.semiring();
  const auto& h = sys.input().sequence();
  FallingProducts fa(as_sequence(sys.outer()), sys.dim(), s);
  FallingProducts fb(as_sequence(sys.inner()), sys.dim(), s);

  std::vector<Vec> c;
  for (std::size_t K = 0; K <= N; ++K) {
    if (K < 2) {
      c.push_back(Vec::zero(sys.dim(), s));
    } else if (which == Theorem::constant_composed) {
      c.push_back(solve_composed_constant(std::get<Mat>(sys.outer()), std::get<Mat>(sys.inner()),
                                          h, K - 2));
    } else {
      c.push_back(solve_composed_variable(fa, fb, h, K - 2));
    }
  }
  return TruncatedSeries<Vec>(s, std::move(c));
}

namespace {

// Coefficient K = sum over n of kernel(n)[K - shift - n] x(n), n ascending;
// the empty sum (K < shift) is zero.
template <typename KernelAt>
TruncatedSeries<Vec> assemble(const Semiring& s, std::size_t k, const Seq<Vec>& x,
                              std::size_t shift, std::size_t N, const KernelAt& kernel) {
  std::vector<Vec> c;
  c.reserve(N + 1);
  for (std::size_t K = 0; K <= N; ++K) {
    Vec acc = Vec::zero(k, s);
    for (std::size_t n = 0; n + shift <= K; ++n) {
      const std::size_t m = K - shift - n;
      acc = acc + kernel(n)[m] * x(n);
    }
    c.push_back(std::move(acc));
  }
  return TruncatedSeries<Vec>(s, std::move(c));
}

}  // namespace

TruncatedSeries<Vec> z_theorem(const RecurrenceSystem& sys, std::size_t N) {
  return z_theorem(sys, default_theorem(sys), N);
}

TruncatedSeries<Vec> z_theorem(const RecurrenceSystem& sys, Theorem which, std::size_t N) {
  check_theorem_kind(sys, which);
  require_zero_initial(sys);
  const Semiring& s = sys.semiring();
  const auto& g = sys.input().sequence();

  if (which == Theorem::constant_single) {
    const auto sa = s_constant(std::get<Mat>(sys.coefficients()), N);
    return assemble(s, sys.dim(), g, 1, N, [&sa](std::size_t) -> const auto& { return sa; });
  }
  FallingProducts falling(sys.coefficient_sequence(), sys.dim(), s);
  std::vector<TruncatedSeries<Mat>> kernels;
  for (std::size_t n = 0; n + 1 <= N; ++n) kernels.push_back(s_variable(falling, n, N - 1 - n));
  return assemble(s, sys.dim(), g, 1, N,
                  [&kernels](std::size_t n) -> const auto& { return kernels[n]; });
}

TruncatedSeries<Vec> z_theorem(const ComposedSystem& sys, std::size_t N) {
  return z_theorem(sys, default_theorem(sys), N);
}

TruncatedSeries<Vec> z_theorem(const ComposedSystem& sys, Theorem which, std::size_t N) {
  check_theorem_kind(sys, which);
  require_zero_initial(sys);
  const Semiring& s = sys.semiring();
  const auto& h = sys.input().sequence();

  if (which == Theorem::constant_composed) {
    const auto sab =
        s_composed_constant(std::get<Mat>(sys.outer()), std::get<Mat>(sys.inner()), N);
    return assemble(s, sys.dim(), h, 2, N, [&sab](std::size_t) -> const auto& { return sab; });
  }
  FallingProducts fa(as_sequence(sys.outer()), sys.dim(), s);
  FallingProducts fb(as_sequence(sys.inner()), sys.dim(), s);
  std::vector<TruncatedSeries<Mat>> kernels;
  for (std::size_t n = 0; n + 2 <= N; ++n) {
    kernels.push_back(s_composed_variable(fa, fb, n, N - 2 - n));
  }
  return assemble(s, sys.dim(), h, 2, N,
                  [&kernels](std::size_t n) -> const auto& { return kernels[n]; });
}

VerificationReport compare_series(const TruncatedSeries<Vec>& direct,
                                  const TruncatedSeries<Vec>& theorem_form, Theorem which) {
  VerificationReport report;
  report.theorem = which;
  report.order = std::min(direct.order(), theorem_form.order());
  for (std::size_t K = 0; K <= report.order; ++K) {
    if (direct[K] == theorem_form[K]) continue;
    report.passed = false;
    report.mismatch_order = K;
    report.direct_value = to_string(direct[K]);
    report.theorem_value = to_string(theorem_form[K]);
    break;
  }
  return report;
}

VerificationReport verify_theorem(const RecurrenceSystem& sys, Theorem which, std::size_t N) {
  check_theorem_kind(sys, which);
  return compare_series(z_direct(sys, which, N), z_theorem(sys, which, N), which);
}

VerificationReport verify_theorem(const ComposedSystem& sys, Theorem which, std::size_t N) {
  check_theorem_kind(sys, which);
  return compare_series(z_direct(sys, which, N), z_theorem(sys, which, N), which);
}

namespace {

std::string power_suffix(std::size_t m) {
  if (m == 0) return "";
  if (m == 1) return "/z";
  return "/z^" + std::to_string(m);
}

template <typename T, typename Render>
std::string render_terms(const TruncatedSeries<T>& x, const Render& render) {
  std::string out;
  for (std::size_t m = 0; m <= x.order(); ++m) {
    if (m) out += " + ";
    out += render(x[m]) + power_suffix(m);
  }
  return out;
}

}  // namespace

std::string render_series(const TruncatedSeries<Value>& x) {
  return render_terms(x, [&x](const Value& v) { return x.semiring().render(v); });
}

std::string render_series(const TruncatedSeries<Vec>& x) {
  return render_terms(x, [](const Vec& v) { return to_string(v); });
}

}  // namespace zrec
