#include "fixtures.hpp"

#include <algorithm>
#include <map>

namespace eventify::fixtures {

Device wall() {
  return DeviceBuilder()
      .add_state("w0", {"white"})
      .add_state("w1", {"azure"})
      .add_initial("w0")
      .add_edge("w0", "w0", {"0"})
      .add_edge("w0", "w1", {"1"})
      .add_edge("w1", "w1", {"1"})
      .add_edge("w1", "w0", {"0"})
      .build();
}

Variator flip_variator() {
  Variator v;
  v.differences = {"⊥", "⊤"};
  v.triples = {{"0", "⊥", "0"}, {"0", "⊤", "1"}, {"1", "⊥", "1"}, {"1", "⊤", "0"}};
  return v;
}

MonoidVariator flip_monoid() {
  MonoidVariator m;
  m.elements = {"⊥", "⊤"};
  m.identity = "⊥";
  m.op = {{{"⊥", "⊥"}, "⊥"}, {{"⊥", "⊤"}, "⊤"}, {{"⊤", "⊥"}, "⊤"}, {{"⊤", "⊤"}, "⊥"}};
  m.observations = {"0", "1"};
  m.action = {{{"0", "⊥"}, "0"}, {{"0", "⊤"}, "1"}, {{"1", "⊥"}, "1"}, {{"1", "⊤"}, "0"}};
  return m;
}

Device parity() {
  DeviceBuilder b;
  b.add_state("e", {"even"}).add_initial("e");
  for (const std::string y : {"0", "1"}) {
    for (const std::string p : {"even", "odd"}) b.add_state(y + p, {p});
    b.add_edge("e", y + "even", {y});
  }
  for (const std::string y : {"0", "1"}) {
    const std::string other = y == "0" ? "1" : "0";
    b.add_edge(y + "even", y + "even", {y}).add_edge(y + "odd", y + "odd", {y});
    b.add_edge(y + "even", other + "odd", {other}).add_edge(y + "odd", other + "even", {other});
  }
  return b.build();
}

namespace {

DeviceBuilder tiny_builder() {
  DeviceBuilder b;
  b.add_state("v0", {"orange"})
      .add_state("v1", {"cyan"})
      .add_state("v2", {"cyan", "blue"})
      .add_state("v3", {"blue"})
      .add_initial("v0")
      .add_edge("v0", "v1", {"a"})
      .add_edge("v1", "v2", {"n"})
      .add_edge("v2", "v3", {"b"});
  return b;
}

}  // namespace

Device tiny() { return tiny_builder().build(); }

Device small() {
  return tiny_builder()
      .add_state("u1", {"red", "blue", "orange"})
      .add_state("u2", {"red", "blue", "orange"})
      .add_state("u3", {"red"})
      .add_edge("v0", "u1", {"n"})
      .add_edge("u1", "u2", {"a"})
      .add_edge("u2", "u3", {"b"})
      .build();
}

Device tiny_candidate() {
  return DeviceBuilder()
      .add_state("g0", {"orange"})
      .add_state("g1", {"cyan"})
      .add_state("g2", {"cyan"})
      .add_state("g3", {"blue"})
      .add_initial("g0")
      .add_edge("g0", "g1", {"a"})
      .add_edge("g1", "g2", {"n"})
      .add_edge("g2", "g2", {"n"})
      .add_edge("g2", "g3", {"b"})
      .add_edge("g3", "g3", {"n"})
      .build();
}

Device unstable_neutral() {
  return DeviceBuilder()
      .add_state("j0", {"orange"})
      .add_state("j1", {"orange"})
      .add_state("j2", {"blue"})
      .add_state("j3", {"blue"})
      .add_initial("j0")
      .add_edge("j0", "j1", {"a"})
      .add_edge("j1", "j2", {"n"})
      .add_edge("j2", "j2", {"n"})
      .add_edge("j2", "j3", {"b"})
      .build();
}

std::vector<std::string> headings() { return {"N", "NE", "E", "SE", "S", "SW", "W", "NW"}; }

Device compass(bool quarter_turns) {
  const auto names = headings();
  const int count = static_cast<int>(names.size());
  DeviceBuilder b;
  for (const auto& h : names) b.add_state(h, {h});
  b.add_initial("N");
  const int reach = quarter_turns ? 2 : 1;
  for (int i = 0; i < count; ++i) {
    for (int step = -reach; step <= reach; ++step) {
      const auto& target = names[static_cast<std::size_t>((i + step + count) % count)];
      b.add_edge(names[static_cast<std::size_t>(i)], target, {target});
    }
  }
  return b.build();
}

Variator compass_variator() {
  const auto names = headings();
  const std::size_t count = names.size();
  Variator v;
  v.differences = {"Ø", "+", "-"};
  for (std::size_t i = 0; i < count; ++i) {
    v.triples.emplace(names[i], "Ø", names[i]);
    v.triples.emplace(names[i], "+", names[(i + 1) % count]);
    v.triples.emplace(names[i], "-", names[(i + count - 1) % count]);
  }
  return v;
}

MonoidVariator compass_rotations() {
  const auto names = headings();
  const std::size_t count = names.size();
  MonoidVariator m;
  for (std::size_t i = 0; i < count; ++i) m.elements.push_back("r" + std::to_string(i));
  m.identity = "r0";
  m.observations = SymbolSet(names.begin(), names.end());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      m.op[{m.elements[i], m.elements[j]}] = m.elements[(i + j) % count];
      m.action[{names[i], m.elements[j]}] = names[(i + j) % count];
    }
  }
  return m;
}

Device fire_detector() {
  return DeviceBuilder()
      .add_state("s0", {"normal"})
      .add_state("s1", {"abnormal"})
      .add_initial("s0")
      .add_edge("s0", "s0", {"0"})
      .add_edge("s0", "s1", {"1"})
      .add_edge("s1", "s1", {"1"})
      .build();
}

MonoidVariator fire_monoid() {
  MonoidVariator m;
  m.elements = {"☺", "☹"};
  m.identity = "☺";
  m.op = {{{"☺", "☺"}, "☺"}, {{"☺", "☹"}, "☹"}, {{"☹", "☺"}, "☹"}, {{"☹", "☹"}, "☹"}};
  m.observations = {"0", "1"};
  m.action = {{{"0", "☺"}, "0"}, {{"0", "☹"}, "1"}, {{"1", "☺"}, "1"}, {{"1", "☹"}, "1"}};
  return m;
}

MonoidVariator lane_monoid() {
  MonoidVariator m;
  m.elements = {"left", "null", "right"};
  m.identity = "null";
  const std::vector<std::vector<std::string>> rows = {
      {"left", "left", "null"}, {"left", "null", "right"}, {"null", "right", "right"}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m.op[{m.elements[i], m.elements[j]}] = rows[i][j];
  }
  m.observations = {"0", "1", "2"};
  const std::map<std::string, int> shift = {{"left", 1}, {"null", 0}, {"right", -1}};
  for (int lane = 0; lane < 3; ++lane) {
    for (const auto& [d, v] : shift) m.action[{std::to_string(lane), d}] = std::to_string(std::clamp(lane + v, 0, 2));
  }
  return m;
}

MonoidVariator trivial_monoid(const SymbolSet& observations) {
  MonoidVariator m;
  m.elements = {"e"};
  m.identity = "e";
  m.op = {{{"e", "e"}, "e"}};
  m.observations = observations;
  for (const auto& y : observations) m.action[{y, "e"}] = y;
  return m;
}

Device identity_conflict() {
  return DeviceBuilder()
      .add_state("v0", {"orange"})
      .add_state("a", {"red"})
      .add_state("b", {"blue"})
      .add_initial("v0")
      .add_edge("v0", "a", {"0"})
      .add_edge("a", "b", {"0"})
      .add_edge("b", "b", {"0"})
      .build();
}

MonoidVariator identity_conflict_monoid() {
  MonoidVariator m;
  m.elements = {"e", "t"};
  m.identity = "e";
  m.op = {{{"e", "e"}, "e"}, {{"e", "t"}, "t"}, {{"t", "e"}, "t"}, {{"t", "t"}, "e"}};
  m.observations = {"0"};
  m.action = {{{"0", "e"}, "0"}, {{"0", "t"}, "0"}};
  return m;
}

Graph triangle() {
  Graph g;
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("a", "c");
  return g;
}

Graph complete4() {
  Graph g;
  const std::vector<std::string> v = {"a", "b", "c", "d"};
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) g.add_edge(v[i], v[j]);
  }
  return g;
}

}  // namespace eventify::fixtures
