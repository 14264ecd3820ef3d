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

#include "zrec/io.hpp"

#include <fstream>
#include <sstream>

#include "zrec/errors.hpp"

namespace zrec {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("document") : where) + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string literal_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail(where, "expected a literal (string or integer), got " + j.dump());
}

Value literal(const Json& j, const Semiring& s, const std::string& where) {
  std::string text = literal_text(j, where);
  try {
    return s.parse_literal(text);
  } catch (const LiteralError& e) {
    throw LiteralError(e.reason(), e.token(), where + ": " + e.what());
  }
}

std::size_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where, "expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != size) {
    fail(where, "expected " + std::to_string(size) + " elements, got " + std::to_string(j.size()));
  }
  return j;
}

Coefficients coefficients_from_json(const Json& j, const Semiring& s, std::size_t k,
                                    const std::string& where) {
  if (!j.is_object() || j.size() != 1 || (!j.contains("constant") && !j.contains("variable"))) {
    fail(where, "expected {\"constant\": [[...]]} or {\"variable\": [[...]]}");
  }
  const bool constant = j.contains("constant");
  const std::string base = where + (constant ? "/constant" : "/variable");
  const Json& rows = array_of(constant ? j["constant"] : j["variable"], k, base);

  std::vector<Value> values;
  std::vector<Seq<Value>> seqs;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string row_where = base + "/" + std::to_string(i);
    const Json& row = array_of(rows[i], k, row_where);
    for (std::size_t jj = 0; jj < k; ++jj) {
      const std::string cell = row_where + "/" + std::to_string(jj);
      if (constant) {
        values.push_back(literal(row[jj], s, cell));
      } else {
        seqs.push_back(seq_from_spec(seq_spec_from_json(row[jj], s, cell), s));
      }
    }
  }
  if (constant) return Mat(s, k, std::move(values));
  return SeqMatrix(s, k, std::move(seqs));
}

SeqVector seq_vector_from_json(const Json& j, const Semiring& s, std::size_t k,
                               const std::string& where) {
  array_of(j, k, where);
  std::vector<Seq<Value>> components;
  for (std::size_t i = 0; i < k; ++i) {
    components.push_back(
        seq_from_spec(seq_spec_from_json(j[i], s, where + "/" + std::to_string(i)), s));
  }
  return SeqVector(s, std::move(components));
}

Vec vec_from_json(const Json& j, const Semiring& s, std::size_t k, const std::string& where) {
  array_of(j, k, where);
  std::vector<Value> values;
  for (std::size_t i = 0; i < k; ++i) {
    values.push_back(literal(j[i], s, where + "/" + std::to_string(i)));
  }
  return Vec(s, std::move(values));
}

std::size_t dimension(const Json& doc) {
  const Json& k = field(doc, "k", "");
  std::size_t value = as_index(k, "/k");
  try {
    check_dimension(value);
  } catch (const DimensionError& e) {
    fail("/k", e.what());
  }
  return value;
}

WeightedAutomaton automaton_from_json(const Json& doc, const Semiring& s) {
  std::vector<std::string> states;
  std::vector<std::string> inputs;
  const Json& js = field(doc, "states", "");
  if (!js.is_array()) fail("/states", "expected an array of names");
  for (std::size_t i = 0; i < js.size(); ++i) {
    if (!js[i].is_string()) fail("/states/" + std::to_string(i), "expected a name");
    states.push_back(js[i].get<std::string>());
  }
  if (doc.contains("inputs")) {
    const Json& ji = doc["inputs"];
    if (!ji.is_array()) fail("/inputs", "expected an array of names");
    for (std::size_t i = 0; i < ji.size(); ++i) {
      if (!ji[i].is_string()) fail("/inputs/" + std::to_string(i), "expected a name");
      inputs.push_back(ji[i].get<std::string>());
    }
  }

  auto index_of = [&](const Json& name, const std::string& where) -> std::size_t {
    if (!name.is_string()) fail(where, "expected a state name");
    const std::string n = name.get<std::string>();
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i] == n) return i;
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (inputs[i] == n) return states.size() + i;
    }
    fail(where, "unknown state \"" + n + "\"");
  };

  std::vector<Edge> edges;
  const Json& je = field(doc, "edges", "");
  if (!je.is_array()) fail("/edges", "expected an array");
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const Json& e = je[i];
    std::size_t from = index_of(field(e, "from", where), where + "/from");
    std::size_t to = index_of(field(e, "to", where), where + "/to");
    SeqSpec w = seq_spec_from_json(field(e, "weight", where), s, where + "/weight");
    edges.push_back(Edge{from, to, seq_from_spec(w, s)});
  }

  std::map<std::size_t, Seq<Value>> input_sequences;
  if (doc.contains("input_sequences")) {
    const Json& jq = doc["input_sequences"];
    if (!jq.is_object()) fail("/input_sequences", "expected an object keyed by input state");
    for (const auto& [name, spec] : jq.items()) {
      const std::string where = "/input_sequences/" + name;
      std::size_t idx = index_of(Json(name), where);
      input_sequences.emplace(idx, seq_from_spec(seq_spec_from_json(spec, s, where), s));
    }
  }
  std::map<std::size_t, Value> initial;
  if (doc.contains("initial")) {
    const Json& jinit = doc["initial"];
    if (!jinit.is_object()) fail("/initial", "expected an object keyed by state");
    for (const auto& [name, lit] : jinit.items()) {
      const std::string where = "/initial/" + name;
      initial.emplace(index_of(Json(name), where), literal(lit, s, where));
    }
  }
  return WeightedAutomaton(s, std::move(states), std::move(inputs), std::move(edges),
                           std::move(input_sequences), std::move(initial));
}

std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

SeqSpec seq_spec_from_json(const Json& j, const Semiring& s, const std::string& where) {
  if (j.is_number_integer()) return SeqSpec::constant(j.dump());
  if (j.is_string()) {
    std::string text = j.get<std::string>();
    try {
      s.parse_literal(text);
      return SeqSpec::constant(text);
    } catch (const LiteralError& e) {
      if (e.reason() == LiteralError::Reason::out_of_carrier) {
        throw LiteralError(e.reason(), e.token(), where + ": " + e.what());
      }
    }
    try {
      return SeqSpec::polynomial(text);
    } catch (const ParseError& e) {
      fail(where, "'" + text + "' is neither a " + s.name() + " literal nor a polynomial (" +
                      e.what() + ")");
    }
  }
  if (!j.is_object() || j.empty()) fail(where, "expected a sequence, got " + j.dump());

  if (j.contains("constant")) {
    SeqSpec spec = SeqSpec::constant(literal_text(j["constant"], where + "/constant"));
    literal(j["constant"], s, where + "/constant");
    return spec;
  }
  if (j.contains("polynomial")) {
    const Json& p = j["polynomial"];
    if (!p.is_string()) fail(where + "/polynomial", "expected an expression string");
    try {
      return SeqSpec::polynomial(p.get<std::string>());
    } catch (const ParseError& e) {
      fail(where + "/polynomial", e.what());
    }
  }
  if (j.contains("table")) {
    const Json& t = j["table"];
    if (!t.is_array()) fail(where + "/table", "expected an array of [index, literal] pairs");
    std::vector<std::pair<std::size_t, std::string>> entries;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string at = where + "/table/" + std::to_string(i);
      if (!t[i].is_array() || t[i].size() != 2) fail(at, "expected an [index, literal] pair");
      literal(t[i][1], s, at + "/1");
      entries.emplace_back(as_index(t[i][0], at + "/0"), literal_text(t[i][1], at + "/1"));
    }
    SeqSpec::Tail tail = SeqSpec::Tail::zero;
    if (j.contains("tail")) {
      const Json& jt = j["tail"];
      if (jt == "zero") {
        tail = SeqSpec::Tail::zero;
      } else if (jt == "repeat_last") {
        tail = SeqSpec::Tail::repeat_last;
      } else {
        fail(where + "/tail", "expected \"zero\" or \"repeat_last\"");
      }
    }
    try {
      return SeqSpec::table(std::move(entries), tail);
    } catch (const ParseError& e) {
      fail(where + "/table", e.what());
    }
  }
  fail(where, "expected one of \"constant\", \"polynomial\", \"table\"");
}

Json to_json(const SeqSpec& spec) {
  const auto& form = spec.form();
  if (const auto* c = std::get_if<SeqSpec::Constant>(&form)) return c->literal;
  if (const auto* p = std::get_if<SeqSpec::Polynomial>(&form)) return p->text;
  const auto& t = std::get<SeqSpec::Table>(form);
  Json entries = Json::array();
  for (const auto& [index, lit] : t.entries) entries.push_back(Json::array({index, lit}));
  Json out;
  out["table"] = std::move(entries);
  out["tail"] = t.tail == SeqSpec::Tail::zero ? "zero" : "repeat_last";
  return out;
}

namespace {

Json seq_to_json(const Seq<Value>& seq, const std::string& what) {
  if (seq.spec() == nullptr) {
    throw Error(what + " has no declarative form and cannot be written to a file");
  }
  return to_json(*seq.spec());
}

Json coefficients_to_json(const Coefficients& c) {
  const std::size_t k = dim(c);
  Json rows = Json::array();
  const bool constant = std::holds_alternative<Mat>(c);
  for (std::size_t i = 0; i < k; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < k; ++j) {
      if (constant) {
        const Mat& m = std::get<Mat>(c);
        row.push_back(m.semiring().render(m(i, j)));
      } else {
        row.push_back(seq_to_json(entry_sequence(c, i, j), "coefficient entry"));
      }
    }
    rows.push_back(std::move(row));
  }
  Json out;
  out[constant ? "constant" : "variable"] = std::move(rows);
  return out;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v.entries()) out.push_back(v.semiring().render(x));
  return out;
}

Json seq_vector_to_json(const SeqVector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out.push_back(seq_to_json(v.component(i), "input component"));
  }
  return out;
}

}  // namespace

Json to_json(const RecurrenceSystem& sys) {
  Json out;
  out["format"] = kFormatVersion;
  out["semiring"] = sys.semiring().name();
  out["k"] = sys.dim();
  out["coefficients"] = coefficients_to_json(sys.coefficients());
  out["input"] = seq_vector_to_json(sys.input());
  out["initial"] = vec_to_json(sys.initial());
  return out;
}

Json to_json(const ComposedSystem& sys) {
  Json out;
  out["format"] = kFormatVersion;
  out["semiring"] = sys.semiring().name();
  out["k"] = sys.dim();
  out["outer"] = coefficients_to_json(sys.outer());
  out["inner"] = coefficients_to_json(sys.inner());
  out["input_h"] = seq_vector_to_json(sys.input());
  out["initial_f"] = vec_to_json(sys.initial_f());
  out["initial_g"] = vec_to_json(sys.initial_g());
  return out;
}

Json to_json(const WeightedAutomaton& aut) {
  Json out;
  out["format"] = kFormatVersion;
  out["semiring"] = aut.semiring().name();
  out["states"] = aut.states();
  out["inputs"] = aut.inputs();
  Json edges = Json::array();
  for (const auto& e : aut.edges()) {
    Json je;
    je["from"] = aut.name(e.from);
    je["to"] = aut.name(e.to);
    je["weight"] = seq_to_json(e.weight, "edge weight");
    edges.push_back(std::move(je));
  }
  out["edges"] = std::move(edges);
  if (!aut.input_sequences().empty()) {
    Json seqs = Json::object();
    for (const auto& [index, seq] : aut.input_sequences()) {
      seqs[aut.name(index)] = seq_to_json(seq, "input sequence");
    }
    out["input_sequences"] = std::move(seqs);
  }
  if (!aut.initial().empty()) {
    Json init = Json::object();
    for (const auto& [index, value] : aut.initial()) {
      init[aut.name(index)] = aut.semiring().render(value);
    }
    out["initial"] = std::move(init);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Document parse_document(std::string_view text, std::string_view semiring_override) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON at " + line_context(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": " + e.what());
  }
  if (!doc.is_object()) fail("", "expected a JSON object at the top level");

  if (doc.contains("format")) {
    if (doc["format"] != kFormatVersion) {
      fail("/format", "unsupported format " + doc["format"].dump() + ", expected " +
                          std::to_string(kFormatVersion));
    }
  }

  std::string name;
  if (!semiring_override.empty()) {
    name = std::string(semiring_override);
  } else {
    const Json& js = field(doc, "semiring", "");
    if (!js.is_string()) fail("/semiring", "expected a semiring name");
    name = js.get<std::string>();
  }
  const Semiring& s = builtin_semiring(name);

  if (doc.contains("edges") || doc.contains("states")) {
    return Document{DocumentKind::automaton, &s, std::nullopt, std::nullopt,
                    automaton_from_json(doc, s)};
  }

  const std::size_t k = dimension(doc);
  if (doc.contains("outer")) {
    ComposedSystem sys(coefficients_from_json(field(doc, "outer", ""), s, k, "/outer"),
                       coefficients_from_json(field(doc, "inner", ""), s, k, "/inner"),
                       seq_vector_from_json(field(doc, "input_h", ""), s, k, "/input_h"),
                       doc.contains("initial_f") ? vec_from_json(doc["initial_f"], s, k, "/initial_f")
                                                 : Vec::zero(k, s),
                       doc.contains("initial_g") ? vec_from_json(doc["initial_g"], s, k, "/initial_g")
                                                 : Vec::zero(k, s));
    return Document{DocumentKind::composition, &s, std::nullopt, std::move(sys), std::nullopt};
  }
  RecurrenceSystem sys(
      coefficients_from_json(field(doc, "coefficients", ""), s, k, "/coefficients"),
      seq_vector_from_json(field(doc, "input", ""), s, k, "/input"),
      doc.contains("initial") ? vec_from_json(doc["initial"], s, k, "/initial") : Vec::zero(k, s));
  return Document{DocumentKind::system, &s, std::move(sys), std::nullopt, std::nullopt};
}

Document load_document(const std::string& path, std::string_view semiring_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str(), semiring_override);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace zrec
