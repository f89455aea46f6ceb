#include "eventify/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace eventify {

namespace {

using json = nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& error) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < error.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column), "invalid JSON");
  }
}

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

const json& field(const json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(path + "/" + escape_pointer(key), "missing field");
  return *it;
}

std::string text_of(const json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError(path, "expected a string");
  return value.get<std::string>();
}

std::vector<std::string> list_of(const json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError(path, "expected a list of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(text_of(value[i], path + "/" + std::to_string(i)));
  return out;
}

SymbolSet set_of(const json& value, const std::string& path) {
  auto items = list_of(value, path);
  return SymbolSet(items.begin(), items.end());
}

void check_schema(const json& document, std::string_view expected) {
  auto schema = text_of(field(document, "schema", ""), "/schema");
  if (schema != expected) {
    throw ParseError("/schema", "expected '" + std::string(expected) + "', found '" + schema + "'");
  }
}

std::string dump(const json& document) { return document.dump(2) + "\n"; }

}  // namespace

Device parse_device(std::string_view text) {
  json document = parse_json(text);
  check_schema(document, kDeviceSchema);

  auto states = list_of(field(document, "states", ""), "/states");
  std::set<std::string> known;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!known.insert(states[i]).second) {
      throw ParseError("/states/" + std::to_string(i), "duplicate state '" + states[i] + "'");
    }
  }
  SymbolSet observations = set_of(field(document, "observations", ""), "/observations");
  std::optional<SymbolSet> declared_outputs;
  if (document.contains("output_alphabet")) declared_outputs = set_of(document["output_alphabet"], "/output_alphabet");

  DeviceBuilder builder;
  builder.add_observations(observations);
  if (declared_outputs) builder.add_outputs(*declared_outputs);

  const json& outputs = field(document, "outputs", "");
  if (!outputs.is_object()) throw ParseError("/outputs", "expected an object");
  for (const auto& [name, value] : outputs.items()) {
    if (!known.contains(name)) throw ParseError("/outputs/" + escape_pointer(name), "unknown state '" + name + "'");
  }
  for (const auto& state : states) {
    std::string path = "/outputs/" + escape_pointer(state);
    if (!outputs.contains(state)) throw ParseError(path, "output_map must be total");
    SymbolSet produced = set_of(outputs[state], path);
    if (produced.empty()) throw ParseError(path, "output sets must be nonempty");
    if (declared_outputs) {
      for (const auto& symbol : produced) {
        if (!declared_outputs->contains(symbol)) throw ParseError(path, "'" + symbol + "' is not in output_alphabet");
      }
    }
    builder.add_state(state, std::move(produced));
  }

  auto initials = list_of(field(document, "initial", ""), "/initial");
  if (initials.empty()) throw ParseError("/initial", "at least one initial state is required");
  for (std::size_t i = 0; i < initials.size(); ++i) {
    if (!known.contains(initials[i])) {
      throw ParseError("/initial/" + std::to_string(i), "unknown state '" + initials[i] + "'");
    }
    builder.add_initial(initials[i]);
  }

  const json& transitions = field(document, "transitions", "");
  if (!transitions.is_array()) throw ParseError("/transitions", "expected a list");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    std::string path = "/transitions/" + std::to_string(i);
    const json& edge = transitions[i];
    auto from = text_of(field(edge, "from", path), path + "/from");
    auto to = text_of(field(edge, "to", path), path + "/to");
    if (!known.contains(from)) throw ParseError(path + "/from", "unknown state '" + from + "'");
    if (!known.contains(to)) throw ParseError(path + "/to", "unknown state '" + to + "'");
    auto labels = list_of(field(edge, "labels", path), path + "/labels");
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (!observations.contains(labels[j])) {
        throw ParseError(path + "/labels/" + std::to_string(j), "'" + labels[j] + "' is not an observation");
      }
    }
    builder.add_edge(from, to, SymbolSet(labels.begin(), labels.end()));
  }
  return builder.build();
}

std::string serialize_device(const Device& device) {
  json document;
  document["schema"] = kDeviceSchema;
  document["states"] = device.names();
  std::vector<std::string> initials;
  for (StateId state : device.initials()) initials.push_back(device.name(state));
  document["initial"] = initials;
  document["observations"] = device.observations();
  document["output_alphabet"] = device.output_alphabet();
  json outputs = json::object();
  for (StateId state = 0; state < device.size(); ++state) outputs[device.name(state)] = device.output(state);
  document["outputs"] = outputs;
  json transitions = json::array();
  for (const auto& edge : device.edges()) {
    transitions.push_back({{"from", device.name(edge.from)}, {"to", device.name(edge.to)}, {"labels", edge.labels}});
  }
  document["transitions"] = transitions;
  return dump(document);
}

VariatorDocument parse_variator(std::string_view text) {
  json document = parse_json(text);
  check_schema(document, kVariatorSchema);
  VariatorDocument out;
  out.variator.differences = set_of(field(document, "differences", ""), "/differences");
  if (document.contains("observations")) out.observations = set_of(document["observations"], "/observations");
  const json& triples = field(document, "triples", "");
  if (!triples.is_array()) throw ParseError("/triples", "expected a list");
  for (std::size_t i = 0; i < triples.size(); ++i) {
    std::string path = "/triples/" + std::to_string(i);
    auto items = list_of(triples[i], path);
    if (items.size() != 3) throw ParseError(path, "a triple has exactly three entries");
    if (!out.variator.differences.contains(items[1])) {
      throw ParseError(path + "/1", "'" + items[1] + "' is not a declared difference");
    }
    if (out.observations) {
      for (std::size_t slot : {0u, 2u}) {
        if (!out.observations->contains(items[slot])) {
          throw ParseError(path + "/" + std::to_string(slot), "'" + items[slot] + "' is not an observation");
        }
      }
    }
    out.variator.triples.emplace(items[0], items[1], items[2]);
  }
  return out;
}

std::string serialize_variator(const Variator& variator, const std::optional<SymbolSet>& observations) {
  json document;
  document["schema"] = kVariatorSchema;
  document["differences"] = variator.differences;
  json triples = json::array();
  for (const auto& [before, difference, after] : variator.triples) triples.push_back({before, difference, after});
  document["triples"] = triples;
  if (observations) document["observations"] = *observations;
  return dump(document);
}

MonoidVariator parse_monoid(std::string_view text) {
  json document = parse_json(text);
  check_schema(document, kMonoidSchema);
  MonoidVariator out;
  out.elements = list_of(field(document, "elements", ""), "/elements");
  std::set<std::string> unique(out.elements.begin(), out.elements.end());
  if (unique.size() != out.elements.size()) throw ParseError("/elements", "duplicate element");
  out.identity = text_of(field(document, "identity", ""), "/identity");
  out.observations = set_of(field(document, "observations", ""), "/observations");

  auto table = [&](const char* key, std::map<std::pair<Symbol, Symbol>, Symbol>& into) {
    std::string path = std::string("/") + key;
    const json& rows = field(document, key, "");
    if (!rows.is_object()) throw ParseError(path, "expected a nested object");
    for (const auto& [row, cells] : rows.items()) {
      std::string row_path = path + "/" + escape_pointer(row);
      if (!cells.is_object()) throw ParseError(row_path, "expected an object");
      for (const auto& [column, value] : cells.items()) {
        into[{row, column}] = text_of(value, row_path + "/" + escape_pointer(column));
      }
    }
  };
  table("op", out.op);
  table("action", out.action);
  return out;
}

MonoidVariator load_monoid(std::string_view text) {
  MonoidVariator monoid = parse_monoid(text);
  auto violations = validate_monoid(monoid);
  if (!violations.empty()) throw ParseError("", violations.front().kind + ": " + violations.front().detail);
  return monoid;
}

std::string serialize_monoid(const MonoidVariator& monoid) {
  json document;
  document["schema"] = kMonoidSchema;
  document["elements"] = SymbolSet(monoid.elements.begin(), monoid.elements.end());
  document["identity"] = monoid.identity;
  document["observations"] = monoid.observations;
  json op = json::object();
  for (const auto& [key, value] : monoid.op) op[key.first][key.second] = value;
  document["op"] = op;
  json action = json::object();
  for (const auto& [key, value] : monoid.action) action[key.first][key.second] = value;
  document["action"] = action;
  return dump(document);
}

Graph parse_graph(std::string_view text) {
  Graph graph;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string token; words >> token;) tokens.push_back(token);
    std::string where = "line " + std::to_string(number);
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw ParseError(where, "expected 'a b' or 'a'");
    if (tokens.size() == 1) {
      graph.vertices.insert(tokens[0]);
      continue;
    }
    if (tokens[0] == tokens[1]) throw ParseError(where, "self-loop on '" + tokens[0] + "'");
    graph.add_edge(tokens[0], tokens[1]);
  }
  return graph;
}

std::string serialize_graph(const Graph& graph) {
  std::string out;
  std::set<std::string> covered;
  for (const auto& [a, b] : graph.edges) {
    out += a + " " + b + "\n";
    covered.insert(a);
    covered.insert(b);
  }
  for (const auto& vertex : graph.vertices) {
    if (!covered.contains(vertex)) out += vertex + "\n";
  }
  return out;
}

namespace {

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\n");
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(" \t\n");
  return std::string(text.substr(begin, end - begin + 1));
}

SymbolSet symbol_list(const std::string& text) {
  SymbolSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string item = trim(std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) out.insert(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::size_t positive(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0) throw ParseError(spec, "expected a positive integer, found '" + text + "'");
  return value;
}

/// Splits "head@K" into head and the bound, if present.
std::pair<std::string, std::optional<std::size_t>> split_bound(const std::string& text, const std::string& spec) {
  auto at = text.rfind('@');
  if (at == std::string::npos) return {text, std::nullopt};
  return {text.substr(0, at), positive(text.substr(at + 1), spec)};
}

}  // namespace

RelationSpec parse_relation(std::string_view raw, const std::function<std::string(const std::string&)>& read_file) {
  std::string text = trim(raw);
  auto fail = [&](const std::string& message) -> RelationSpec { throw ParseError("relation '" + text + "'", message); };
  if (text == "id") return RelationSpec::identity();
  if (text.starts_with("compose(")) {
    if (!text.ends_with(")")) return fail("unbalanced parentheses");
    std::string body = text.substr(8, text.size() - 9);
    std::vector<RelationSpec> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ';' && depth == 0)) {
        parts.push_back(parse_relation(std::string_view(body).substr(start, i - start), read_file));
        start = i + 1;
      } else if (body[i] == '(') {
        ++depth;
      } else if (body[i] == ')') {
        if (--depth < 0) return fail("unbalanced parentheses");
      }
    }
    if (depth != 0) return fail("unbalanced parentheses");
    return RelationSpec::compose(std::move(parts));
  }
  auto colon = text.find(':');
  if (colon == std::string::npos) return fail("unknown relation");
  std::string kind = text.substr(0, colon);
  std::string argument = text.substr(colon + 1);
  if (kind == "delta") return RelationSpec::delta(parse_variator(read_file(argument)).variator);
  if (kind == "shave") return RelationSpec::shave(positive(argument, text));
  if (kind == "shrink") return RelationSpec::shrink(symbol_list(argument));
  if (kind == "pump") {
    auto [list, bound] = split_bound(argument, text);
    return RelationSpec::pump(symbol_list(list), bound.value_or(2));
  }
  if (kind == "integrator") return RelationSpec::integrator(load_monoid(read_file(argument)));
  if (kind == "disaggregator") {
    auto [path, bound] = split_bound(argument, text);
    return RelationSpec::disaggregator(load_monoid(read_file(path)), bound);
  }
  return fail("unknown relation kind '" + kind + "'");
}

namespace {

std::string escaped(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string quoted(const std::string& text) { return "\"" + escaped(text) + "\""; }

std::string joined(const SymbolSet& symbols) {
  std::string out;
  for (const auto& symbol : symbols) out += (out.empty() ? "" : ",") + symbol;
  return out;
}

}  // namespace

std::string export_dot(const Device& device) {
  std::ostringstream out;
  out << "digraph device {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=ellipse];\n";
  for (StateId state = 0; state < device.size(); ++state) {
    out << "  " << quoted(device.name(state)) << " [label=\"" << escaped(device.name(state)) << "\\n"
        << escaped(format_set(device.output(state))) << "\"];\n";
  }
  std::size_t entry = 0;
  for (StateId state : device.initials()) {
    std::string marker = "__start" + std::to_string(entry++);
    out << "  " << quoted(marker) << " [shape=point, label=\"\"];\n";
    out << "  " << quoted(marker) << " -> " << quoted(device.name(state)) << ";\n";
  }
  for (const auto& edge : device.edges()) {
    out << "  " << quoted(device.name(edge.from)) << " -> " << quoted(device.name(edge.to))
        << " [label=" << quoted(joined(edge.labels)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace eventify
