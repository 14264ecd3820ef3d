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
// Weighted automata over the one-letter alphabet {z}.
//
// Output states f_1..f_k come first; input states g_i, if any, follow. An edge
// f_i -> f_j with weight sequence a_ij is the transition read by paths leaving
// f_i, and along it the value of f_j flows back into f_i:
//
//   f_i(n+1) = sum_j a_ij(n) f_j(n) + g_i(n).
//
// Each input state has exactly one outgoing edge, to its f state, with
// constant weight one, and no incoming edges.

#ifndef ZREC_AUTOMATON_HPP_
#define ZREC_AUTOMATON_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zrec/recurrence.hpp"
#include "zrec/sequence.hpp"

namespace zrec {

struct Edge {
  std::size_t from;
  std::size_t to;
  Seq<Value> weight;
};

class WeightedAutomaton {
 public:
  enum class Kind { homogeneous, nonhomogeneous };

  // Edge endpoints index into states followed by inputs. Input sequences and
  // initial values are keyed by state index; missing ones read as zero.
  // Throws StructureError on invariant violations.
  WeightedAutomaton(const Semiring& s, std::vector<std::string> states,
                    std::vector<std::string> inputs, std::vector<Edge> edges,
                    std::map<std::size_t, Seq<Value>> input_sequences = {},
                    std::map<std::size_t, Value> initial = {});

  const Semiring& semiring() const { return *semiring_; }
  Kind kind() const { return inputs_.empty() ? Kind::homogeneous : Kind::nonhomogeneous; }

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_inputs() const { return inputs_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<std::size_t, Seq<Value>>& input_sequences() const { return input_sequences_; }
  const std::map<std::size_t, Value>& initial() const { return initial_; }

  bool is_input(std::size_t state) const { return state >= states_.size(); }
  const std::string& name(std::size_t state) const;
  // Throws StructureError for unknown names.
  std::size_t index(const std::string& name) const;

 private:
  const Semiring* semiring_;
  std::vector<std::string> states_;
  std::vector<std::string> inputs_;
  std::vector<Edge> edges_;
  std::map<std::size_t, Seq<Value>> input_sequences_;
  std::map<std::size_t, Value> initial_;
};

// States f_1..f_k, one edge per coefficient entry not provably zero, and,
// when the input is not provably zero, input states g_1..g_k.
WeightedAutomaton system_to_automaton(const RecurrenceSystem& sys);

// Parallel edges are summed. Coefficients are constant when every edge weight
// is provably constant.
RecurrenceSystem automaton_to_system(const WeightedAutomaton& aut);

struct Path {
  std::size_t start;
  std::vector<std::size_t> edges;  // indices into WeightedAutomaton::edges()

  std::size_t length() const { return edges.size(); }
};

struct PathLimits {
  std::size_t max_length = 10;
  std::size_t max_paths = 1'000'000;
};

// All length-n paths from `from` over output states, depth first, edges in
// declared order. Throws BoundError past the limits.
std::vector<Path> enumerate_paths(const WeightedAutomaton& aut, std::size_t from, std::size_t n,
                                  const PathLimits& limits = {});

// Product of the edge weights along `p`, read at times n-1, n-2, ..., 0.
Value path_weight(const WeightedAutomaton& aut, const Path& p);

// Sum of path weights over all length-n paths from `from`. Homogeneous
// automata only (KindMismatchError otherwise).
Value path_weight_sum(const WeightedAutomaton& aut, std::size_t from, std::size_t n,
                      const PathLimits& limits = {});

std::string render(const WeightedAutomaton& aut, const Path& p);

}  // namespace zrec

#endif  // ZREC_AUTOMATON_HPP_
