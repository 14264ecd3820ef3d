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

#include "zrec/automaton.hpp"

#include <memory>
#include <set>

#include "zrec/errors.hpp"
#include "zrec/seq_spec.hpp"

namespace zrec {

namespace {

Seq<Value> constant_seq(const Semiring& s, const Value& v) {
  std::string literal = s.render(v);
  return Seq<Value>([v](std::size_t) { return v; }, literal,
                    std::make_shared<const SeqSpec>(SeqSpec::constant(literal)));
}

std::optional<Value> constant_weight(const Seq<Value>& w, const Semiring& s) {
  if (w.spec() == nullptr) return std::nullopt;
  return w.spec()->constant_value(s);
}

}  // namespace

WeightedAutomaton::WeightedAutomaton(const Semiring& s, std::vector<std::string> states,
                                     std::vector<std::string> inputs, std::vector<Edge> edges,
                                     std::map<std::size_t, Seq<Value>> input_sequences,
                                     std::map<std::size_t, Value> initial)
    : semiring_(&s),
      states_(std::move(states)),
      inputs_(std::move(inputs)),
      edges_(std::move(edges)),
      input_sequences_(std::move(input_sequences)),
      initial_(std::move(initial)) {
  check_dimension(states_.size());

  std::set<std::string> seen;
  for (std::size_t i = 0; i < states_.size() + inputs_.size(); ++i) {
    if (!seen.insert(name(i)).second) {
      throw StructureError(name(i), "state '" + name(i) + "' declared twice");
    }
  }

  const std::size_t total = states_.size() + inputs_.size();
  std::vector<std::size_t> outgoing(total, 0);
  std::vector<std::size_t> feeds(states_.size(), 0);
  for (const auto& e : edges_) {
    if (e.from >= total || e.to >= total) {
      throw StructureError("", "edge endpoint outside the declared states");
    }
    if (is_input(e.to)) {
      throw StructureError(name(e.to), "input state '" + name(e.to) + "' has an incoming edge");
    }
    if (!is_input(e.from)) continue;
    const std::string& g = name(e.from);
    if (++outgoing[e.from] > 1) {
      throw StructureError(g, "input state '" + g + "' has more than one outgoing edge");
    }
    if (constant_weight(e.weight, s) != s.one()) {
      throw StructureError(g, "input state '" + g + "' must feed its state with constant weight " +
                                  s.render(s.one()));
    }
    if (++feeds[e.to] > 1) {
      throw StructureError(name(e.to), "state '" + name(e.to) + "' is fed by two input states");
    }
  }
  for (std::size_t i = states_.size(); i < total; ++i) {
    if (outgoing[i] == 0) {
      throw StructureError(name(i), "input state '" + name(i) + "' has no outgoing edge");
    }
  }
  for (const auto& [index, seq] : input_sequences_) {
    if (index >= total || !is_input(index)) {
      throw StructureError(index < total ? name(index) : "",
                           "input sequence attached to a non-input state");
    }
  }
  for (const auto& [index, value] : initial_) {
    if (index >= states_.size()) {
      throw StructureError(index < total ? name(index) : "",
                           "initial value attached to a non-output state");
    }
  }
}

const std::string& WeightedAutomaton::name(std::size_t state) const {
  return is_input(state) ? inputs_.at(state - states_.size()) : states_.at(state);
}

std::size_t WeightedAutomaton::index(const std::string& name) const {
  for (std::size_t i = 0; i < states_.size() + inputs_.size(); ++i) {
    if (this->name(i) == name) return i;
  }
  throw StructureError(name, "unknown state '" + name + "'");
}

WeightedAutomaton system_to_automaton(const RecurrenceSystem& sys) {
  const Semiring& s = sys.semiring();
  const std::size_t k = sys.dim();

  std::vector<std::string> states;
  for (std::size_t i = 0; i < k; ++i) states.push_back("f_" + std::to_string(i + 1));

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Seq<Value> a = entry_sequence(sys.coefficients(), i, j);
      if (!is_identically_zero(a, s)) edges.push_back(Edge{i, j, a});
    }
  }

  bool has_input = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_identically_zero(sys.input().component(i), s)) has_input = true;
  }

  std::vector<std::string> inputs;
  std::map<std::size_t, Seq<Value>> input_sequences;
  if (has_input) {
    for (std::size_t i = 0; i < k; ++i) {
      inputs.push_back("g_" + std::to_string(i + 1));
      edges.push_back(Edge{k + i, i, constant_seq(s, s.one())});
      input_sequences.emplace(k + i, sys.input().component(i));
    }
  }

  std::map<std::size_t, Value> initial;
  for (std::size_t i = 0; i < k; ++i) {
    if (sys.initial()[i] != s.zero()) initial.emplace(i, sys.initial()[i]);
  }
  return WeightedAutomaton(s, std::move(states), std::move(inputs), std::move(edges),
                           std::move(input_sequences), std::move(initial));
}

RecurrenceSystem automaton_to_system(const WeightedAutomaton& aut) {
  const Semiring& s = aut.semiring();
  const std::size_t k = aut.num_states();

  std::vector<std::vector<Seq<Value>>> parallel(k * k);
  std::vector<std::optional<std::size_t>> feeder(k);
  for (const auto& e : aut.edges()) {
    if (aut.is_input(e.from)) {
      feeder[e.to] = e.from;
    } else {
      parallel[e.from * k + e.to].push_back(e.weight);
    }
  }

  bool all_constant = true;
  for (const auto& weights : parallel) {
    for (const auto& w : weights) {
      if (!constant_weight(w, s)) all_constant = false;
    }
  }

  auto coefficients = [&]() -> Coefficients {
    if (all_constant) {
      std::vector<Value> entries;
      for (const auto& weights : parallel) {
        Value acc = s.zero();
        for (const auto& w : weights) acc = s.add(acc, *constant_weight(w, s));
        entries.push_back(std::move(acc));
      }
      return Mat(s, k, std::move(entries));
    }
    std::vector<Seq<Value>> entries;
    for (const auto& weights : parallel) {
      if (weights.empty()) {
        entries.push_back(constant_seq(s, s.zero()));
      } else if (weights.size() == 1) {
        entries.push_back(weights.front());
      } else {
        entries.emplace_back([&s, weights](std::size_t n) {
          Value acc = s.zero();
          for (const auto& w : weights) acc = s.add(acc, w(n));
          return acc;
        });
      }
    }
    return SeqMatrix(s, k, std::move(entries));
  }();

  std::vector<Seq<Value>> input;
  for (std::size_t i = 0; i < k; ++i) {
    auto it = feeder[i] ? aut.input_sequences().find(*feeder[i]) : aut.input_sequences().end();
    input.push_back(it != aut.input_sequences().end() ? it->second : constant_seq(s, s.zero()));
  }

  std::vector<Value> initial(k, s.zero());
  for (const auto& [index, value] : aut.initial()) initial[index] = value;

  return RecurrenceSystem(std::move(coefficients), SeqVector(s, std::move(input)),
                          Vec(s, std::move(initial)));
}

std::vector<Path> enumerate_paths(const WeightedAutomaton& aut, std::size_t from, std::size_t n,
                                  const PathLimits& limits) {
  if (n > limits.max_length) {
    throw BoundError("path length " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(limits.max_length));
  }
  if (from >= aut.num_states()) {
    throw StructureError(from < aut.num_states() + aut.num_inputs() ? aut.name(from) : "",
                         "paths start at output states only");
  }

  std::vector<Path> paths;
  Path current{from, {}};
  auto extend = [&](auto&& self, std::size_t state) -> void {
    if (current.length() == n) {
      if (paths.size() == limits.max_paths) {
        throw BoundError("more than " + std::to_string(limits.max_paths) + " paths of length " +
                         std::to_string(n));
      }
      paths.push_back(current);
      return;
    }
    const auto& edges = aut.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].from != state || aut.is_input(edges[e].to)) continue;
      current.edges.push_back(e);
      self(self, edges[e].to);
      current.edges.pop_back();
    }
  };
  extend(extend, from);
  return paths;
}

Value path_weight(const WeightedAutomaton& aut, const Path& p) {
  const Semiring& s = aut.semiring();
  const std::size_t n = p.length();
  Value w = s.one();
  for (std::size_t i = 0; i < n; ++i) w = s.mul(w, aut.edges()[p.edges[i]].weight(n - 1 - i));
  return w;
}

Value path_weight_sum(const WeightedAutomaton& aut, std::size_t from, std::size_t n,
                      const PathLimits& limits) {
  if (aut.kind() != WeightedAutomaton::Kind::homogeneous) {
    throw KindMismatchError(
        "path sums are defined for homogeneous automata; iterate the system instead");
  }
  const Semiring& s = aut.semiring();
  Value total = s.zero();
  for (const auto& p : enumerate_paths(aut, from, n, limits)) {
    total = s.add(total, path_weight(aut, p));
  }
  return total;
}

std::string render(const WeightedAutomaton& aut, const Path& p) {
  std::string out = aut.name(p.start);
  for (std::size_t e : p.edges) out += " -> " + aut.name(aut.edges()[e].to);
  return out;
}

}  // namespace zrec
