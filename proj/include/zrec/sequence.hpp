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
// Total sequences N -> T with a memo table, and discrete convolution.

#ifndef ZREC_SEQUENCE_HPP_
#define ZREC_SEQUENCE_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "zrec/matrix.hpp"
#include "zrec/semiring.hpp"

namespace zrec {

class SeqSpec;

// A total function from the naturals to T (Value, Mat or Vec). Copies share
// the generator and the memo table. Evaluation is thread-safe: the memo is
// guarded by a mutex, and the generator runs outside the lock, so a generator
// may recursively evaluate its own sequence.
template <typename T>
class Seq {
 public:
  using Generator = std::function<T(std::size_t)>;

  explicit Seq(Generator gen, std::string description = {},
               std::shared_ptr<const SeqSpec> spec = nullptr)
      : state_(std::make_shared<State>(std::move(gen), std::move(description), std::move(spec))) {}

  static Seq constant(T value, std::string description = {}) {
    return Seq([value = std::move(value)](std::size_t) { return value; }, std::move(description));
  }

  T operator()(std::size_t n) const {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      auto it = state_->memo.find(n);
      if (it != state_->memo.end()) return it->second;
    }
    T value = state_->gen(n);
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->memo.try_emplace(n, std::move(value)).first->second;
  }

  void clear_memo() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->memo.clear();
  }

  std::size_t memo_size() const {
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->memo.size();
  }

  const std::string& description() const { return state_->description; }

  // The declarative form this sequence was built from, or null.
  const SeqSpec* spec() const { return state_->spec.get(); }

 private:
  struct State {
    State(Generator g, std::string d, std::shared_ptr<const SeqSpec> s)
        : gen(std::move(g)), description(std::move(d)), spec(std::move(s)) {}
    Generator gen;
    std::string description;
    std::shared_ptr<const SeqSpec> spec;
    mutable std::mutex mu;
    std::unordered_map<std::size_t, T> memo;
  };

  std::shared_ptr<State> state_;
};

// 1 at n = 0, 0 afterwards.
Seq<Value> delta(const Semiring& s);

// (alpha * beta)(n) = alpha(n) beta(0) + alpha(n-1) beta(1) + ... + alpha(0) beta(n),
// summed with i ascending. Factor order is never swapped.
template <typename L, typename R>
auto convolve(const Semiring& s, const Seq<L>& alpha, const Seq<R>& beta, std::size_t n) {
  auto acc = times(s, alpha(n), beta(0));
  for (std::size_t i = 1; i <= n; ++i) acc = plus(s, acc, times(s, alpha(n - i), beta(i)));
  return acc;
}

// The sequence m -> (alpha * beta)(m).
template <typename L, typename R>
auto convolution(const Semiring& s, const Seq<L>& alpha, const Seq<R>& beta) {
  using Out = decltype(convolve(s, alpha, beta, 0));
  return Seq<Out>([&s, alpha, beta](std::size_t m) { return convolve(s, alpha, beta, m); },
                  "(" + alpha.description() + " * " + beta.description() + ")");
}

// Convolution over the superscript of a two-argument kernel with the second
// argument held at `t` throughout:
//   kernel(n, t) beta(0) + kernel(n-1, t) beta(1) + ... + kernel(0, t) beta(n).
template <typename Kernel, typename R>
auto convolve_fixed(const Semiring& s, const Kernel& kernel, const Seq<R>& beta, std::size_t n,
                    std::size_t t) {
  auto acc = times(s, kernel(n, t), beta(0));
  for (std::size_t i = 1; i <= n; ++i) acc = plus(s, acc, times(s, kernel(n - i, t), beta(i)));
  return acc;
}

}  // namespace zrec

#endif  // ZREC_SEQUENCE_HPP_
