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
// JSON documents for systems, compositions and automata (format 1).
//
// Literals are JSON strings ("33", "inf", "true") or JSON integers. A
// sequence is either a string, read as a literal when it parses as one and as
// a polynomial in n otherwise, or one of
//   {"constant": literal}
//   {"polynomial": "n+1"}
//   {"table": [[0, "1"], [1, "3"]], "tail": "zero" | "repeat_last"}

#ifndef ZREC_IO_HPP_
#define ZREC_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zrec/automaton.hpp"
#include "zrec/recurrence.hpp"
#include "zrec/seq_spec.hpp"

namespace zrec {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

enum class DocumentKind { system, composition, automaton };

struct Document {
  DocumentKind kind;
  const Semiring* semiring;
  std::optional<RecurrenceSystem> system;
  std::optional<ComposedSystem> composition;
  std::optional<WeightedAutomaton> automaton;
};

// Throws ParseError (with line or field context), UnknownSemiringError and
// LiteralError. A non-empty `semiring_override` replaces the document's
// semiring name.
Document parse_document(std::string_view text, std::string_view semiring_override = {});
Document load_document(const std::string& path, std::string_view semiring_override = {});

SeqSpec seq_spec_from_json(const Json& j, const Semiring& s, const std::string& where = "");
Json to_json(const SeqSpec& spec);

// Sequences without a declarative form cannot be written; those throw Error.
Json to_json(const RecurrenceSystem& sys);
Json to_json(const ComposedSystem& sys);
Json to_json(const WeightedAutomaton& aut);

// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace zrec

#endif  // ZREC_IO_HPP_
