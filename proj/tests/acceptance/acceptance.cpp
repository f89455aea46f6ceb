// Acceptance suite. Run with a criterion number (1-10) or with no argument to
// run all of them. Each criterion prints one PASS/FAIL line with its runtime
// and budget; the exit status is nonzero if any criterion fails.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "helpers.hpp"

using namespace eventify;
using eventify::support::Stopwatch;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string why) {
    passed = false;
    problems.push_back(std::move(why));
  }
};

using Criterion = std::function<Outcome()>;

std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(seed_from_environment(20240917) ^ salt); }

std::size_t exactness_bound(const Device& f) {
  std::size_t split = split_size(f);
  return split * split + 1;
}

Outcome wall_derivative() {
  Outcome o;
  auto result = delta_transform(fixtures::wall(), fixtures::flip_variator());
  if (!result) {
    o.fail("no derivative: " + result.failure().message);
    return o;
  }
  Device expected = DeviceBuilder()
                        .add_state("root", {"white"})
                        .add_state("white", {"white"})
                        .add_state("azure", {"azure"})
                        .add_initial("root")
                        .add_edge("root", "white", {"0"})
                        .add_edge("root", "azure", {"1"})
                        .add_edge("white", "white", {"⊥"})
                        .add_edge("white", "azure", {"⊤"})
                        .add_edge("azure", "azure", {"⊥"})
                        .add_edge("azure", "white", {"⊤"})
                        .build();
  if (!support::isomorphic(result.device(), expected)) o.fail("derivative shape differs from the reference drawing");
  Verdict verdict =
      check_output_simulation(result.device(), fixtures::wall(), RelationSpec::delta(fixtures::flip_variator()), 6);
  if (verdict.status() != Verdict::Status::Holds) o.fail("oracle: " + describe(verdict));
  o.detail = std::to_string(result.device().size()) + " states, oracle " + describe(verdict);
  return o;
}

Outcome compass_without_derivative() {
  Outcome o;
  Device f = fixtures::compass(true);
  auto result = delta_transform(f, fixtures::compass_variator());
  if (result || result.failure().reason != NoSolution::Reason::UncoveredChange) {
    o.fail("expected uncovered-change");
    return o;
  }
  auto oracle = brute_force_derivative_exists(f, fixtures::compass_variator(), 4);
  if (oracle.exists || !oracle.obstruction || oracle.obstruction->kind != Obstruction::Kind::NoImage) {
    o.fail("oracle found no left-totality witness");
    return o;
  }
  const Word& witness = oracle.obstruction->sources.front();
  if (witness.size() > 3) o.fail("witness longer than 3");
  o.detail = "transform witness " + format_word(result.failure().witness) + ", oracle witness " + format_word(witness);
  return o;
}

Outcome transform_oracle_agreement() {
  Outcome o;
  auto rng = seeded(3);
  std::size_t agreed = 0;
  std::size_t successes[4] = {0, 0, 0, 0};
  const std::size_t samples = 500;
  const char* names[4] = {"delta", "shrink", "pump", "integrator"};
  for (std::size_t i = 0; i < samples; ++i) {
    Device f = random_device(rng);
    Variator v = random_functional_variator(rng, f.observations(), 3);
    SymbolSet neutral = support::random_subset(rng, f.observations());
    MonoidVariator m = random_transformation_monoid(rng, f.observations(), 4);
    const std::size_t bound = exactness_bound(f);

    const bool outcomes[4] = {
        delta_transform(f, v).ok(),
        shrink_transform(f, neutral).ok(),
        pump_transform(f, neutral).ok(),
        monoid_integrator(f, m).ok(),
    };
    const RelationSpec specs[4] = {
        RelationSpec::delta(v),
        RelationSpec::shrink(neutral),
        RelationSpec::pump(neutral),
        RelationSpec::compose({RelationSpec::delta(variator_from_monoid(m, f.observations())),
                               RelationSpec::integrator(m)}),
    };
    bool all = true;
    for (int k = 0; k < 4; ++k) {
      auto oracle = derivative_exists(f, specs[k], bound);
      if (oracle.exists != outcomes[k]) {
        all = false;
        std::ostringstream why;
        why << names[k] << " disagrees with the oracle on sample " << i << " (transform "
            << (outcomes[k] ? "succeeds" : "fails") << ")";
        o.fail(why.str());
      }
      if (outcomes[k]) ++successes[k];
    }
    if (all) ++agreed;
  }
  std::ostringstream detail;
  detail << agreed << "/" << samples << " samples agree; successes";
  for (int k = 0; k < 4; ++k) detail << " " << names[k] << "=" << successes[k];
  o.detail = detail.str();
  return o;
}

Outcome pump_shrink_equivalence() {
  Outcome o;
  auto rng = seeded(4);
  std::size_t tested = 0;
  std::size_t both = 0;
  while (tested < 200) {
    Device f = random_device(rng);
    SymbolSet firsts = f.outgoing_labels(*f.initials().begin());
    SymbolSet allowed;
    for (const auto& y : f.observations()) {
      if (!firsts.contains(y)) allowed.insert(y);
    }
    if (allowed.empty()) continue;
    SymbolSet neutral = support::random_subset(rng, allowed);
    if (neutral.empty()) neutral.insert(*allowed.begin());
    ++tested;
    bool shrinks = shrink_transform(f, neutral).ok();
    bool pumps = pump_transform(f, neutral).ok();
    if (shrinks != pumps) o.fail("shrink and pump disagree on device " + std::to_string(tested));
    if (shrinks && pumps) ++both;
  }

  Verdict pumped = check_output_simulation(fixtures::tiny_candidate(), fixtures::tiny(), RelationSpec::pump({"n"}, 2), 5);
  if (!pumped.passed()) o.fail("candidate fails the pump check: " + describe(pumped));
  Verdict shrunk = check_output_simulation(fixtures::tiny_candidate(), fixtures::tiny(), RelationSpec::shrink({"n"}), 6);
  const auto& w = shrunk.witness();
  if (!w || w->source != Word{"a", "n", "b"} || w->image != Word{"a", "b"} || w->reason != Witness::Reason::Crash) {
    o.fail("shrink check witness is not anb/ab crash: " + describe(shrunk));
  }
  o.detail = std::to_string(tested) + " devices checked (" + std::to_string(both) + " succeed both ways); pump " +
             describe(pumped) + "; shrink " + describe(shrunk);
  return o;
}

Outcome small_separation() {
  Outcome o;
  auto pumped = pump_transform(fixtures::small(), {"n"});
  if (!pumped) o.fail("pump transform failed: " + pumped.failure().message);
  auto shrunk = shrink_transform(fixtures::small(), {"n"});
  if (shrunk) {
    o.fail("shrink transform unexpectedly succeeded");
    return o;
  }
  const auto& failure = shrunk.failure();
  if (failure.reason != NoSolution::Reason::OutputConflict) o.fail("wrong failure reason");
  bool cyan = false;
  bool wide = false;
  SymbolSet common = failure.conflict_outputs.empty() ? SymbolSet{} : failure.conflict_outputs.front();
  for (const auto& outputs : failure.conflict_outputs) {
    cyan = cyan || outputs == SymbolSet{"cyan"};
    wide = wide || outputs == SymbolSet{"red", "blue", "orange"};
    SymbolSet kept;
    for (const auto& c : common) {
      if (outputs.contains(c)) kept.insert(c);
    }
    common = kept;
  }
  if (!common.empty()) o.fail("conflict class has a common output");
  if (!cyan || !wide) o.fail("conflict class lacks the cyan and red/blue/orange members");
  if (o.passed) {
    std::string members;
    for (std::size_t i = 0; i < failure.conflict_states.size(); ++i) {
      members += " " + failure.conflict_states[i] + format_set(failure.conflict_outputs[i]);
    }
    o.detail = "conflict class after " + format_word(failure.witness) + ":" + members;
  }
  return o;
}

Outcome coloring_calibration() {
  Outcome o;
  auto rng = seeded(6);
  std::vector<Graph> graphs{fixtures::triangle(), fixtures::complete4()};
  std::uniform_int_distribution<std::size_t> size(2, 8);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  while (graphs.size() < 52) {
    Graph g = random_graph(rng, size(rng), density(rng));
    if (!g.edges.empty()) graphs.push_back(std::move(g));
  }
  std::size_t colorable = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    bool brute = graph_3colorable_bruteforce(graphs[i]);
    bool found = minimize_variator(reduce_3coloring(graphs[i]), 3).has_value();
    if (brute != found) o.fail("graph " + std::to_string(i) + " disagrees");
    if (brute) ++colorable;
  }
  if (o.passed) {
    o.detail = std::to_string(graphs.size()) + " graphs agree, " + std::to_string(colorable) + " 3-colorable";
  }
  return o;
}

Outcome chatter_free() {
  Outcome o;
  struct Case {
    std::string name;
    Device f;
    MonoidVariator m;
  };
  std::vector<Case> corpus{{"wall/flip", fixtures::wall(), fixtures::flip_monoid()},
                           {"fire", fixtures::fire_detector(), fixtures::fire_monoid()},
                           {"compass/rotations", fixtures::compass(false), fixtures::compass_rotations()},
                           {"identity-conflict", fixtures::identity_conflict(), fixtures::identity_conflict_monoid()}};
  auto rng = seeded(7);
  std::size_t random_integrable = 0;
  for (std::size_t i = 0; random_integrable < 60 && i < 5000; ++i) {
    RandomDeviceOptions options;
    options.max_states = 4;
    Device f = random_device(rng, options);
    MonoidVariator m = random_transformation_monoid(rng, f.observations(), 4);
    if (!monoid_integrator(f, m)) continue;
    ++random_integrable;
    corpus.push_back({"random " + std::to_string(i), std::move(f), std::move(m)});
  }

  std::size_t integrated = 0;
  std::size_t passed = 0;
  std::size_t blocked = 0;
  std::string first_blocked;
  for (const auto& [name, f, m] : corpus) {
    if (!monoid_integrator(f, m)) continue;
    ++integrated;
    Variator v = variator_from_monoid(m, f.observations());
    auto result = eventify_pipeline(f, m);
    if (!result) {
      // Confirm that no device at all meets the shrink clause here.
      auto oracle = derivative_exists(f, RelationSpec::compose({RelationSpec::delta(v), RelationSpec::shrink({m.identity})}),
                                      exactness_bound(f));
      if (oracle.exists) o.fail(name + ": pipeline failed although the shrink clause is satisfiable");
      ++blocked;
      if (first_blocked.empty()) first_blocked = name;
      continue;
    }
    const Device& g = result.device();
    const Verdict verdicts[5] = {
        check_output_simulation(g, f, RelationSpec::compose({RelationSpec::delta(v), RelationSpec::disaggregator(m)}), 4),
        check_output_simulation(g, f, RelationSpec::compose({RelationSpec::delta(v), RelationSpec::pump({m.identity}, 2)}),
                                4),
        check_output_simulation(g, f, RelationSpec::compose({RelationSpec::delta(v), RelationSpec::shrink({m.identity})}),
                                4),
        check_vertex_stable(g, {m.identity}),
        check_output_stable(g, {m.identity}),
    };
    bool all = true;
    for (int k = 0; k < 5; ++k) {
      if (verdicts[k].failed()) {
        all = false;
        o.fail(name + ": clause " + std::to_string(k + 1) + " " + describe(verdicts[k]));
      }
    }
    if (all) ++passed;
  }
  if (integrated < 50) o.fail("only " + std::to_string(integrated) + " cases integrate");
  std::ostringstream summary;
  summary << integrated << " cases integrate, " << passed << " pass all five checks, " << blocked
          << " admit no device meeting the identity-shrink clause";
  if (blocked > 0) {
    summary << " (first: " << first_blocked << ")";
    o.fail("the pipeline has no output for " + std::to_string(blocked) + " integrable cases");
  }
  o.detail = summary.str();
  return o;
}

Outcome monoid_validation() {
  Outcome o;
  auto lane = validate_monoid(fixtures::lane_monoid());
  const Violation* associativity = nullptr;
  for (const auto& v : lane) {
    if (v.kind == "associativity") {
      associativity = &v;
      break;
    }
  }
  if (!associativity) {
    o.fail("lane table accepted");
  } else if (associativity->symbols != Word{"left", "left", "right"}) {
    o.fail("first associativity triple is " + format_word(associativity->symbols));
  }
  for (const auto& [name, monoid] : std::vector<std::pair<std::string, MonoidVariator>>{
           {"fire", fixtures::fire_monoid()}, {"Z2", fixtures::flip_monoid()}, {"Z8", fixtures::compass_rotations()}}) {
    auto found = validate_monoid(monoid);
    if (!found.empty()) o.fail(name + " rejected: " + found.front().detail);
  }
  if (o.passed) o.detail = "lane rejected at (left,left,right); fire, Z2, Z8 accepted";
  return o;
}

Outcome chain() {
  Outcome o;
  auto rng = seeded(9);
  std::size_t chains = 0;
  std::size_t attempts = 0;
  while (chains < 20 && attempts < 2000) {
    ++attempts;
    Device f = chains == 0 ? fixtures::wall() : random_device(rng);
    Variator v = chains == 0 ? fixtures::flip_variator() : random_functional_variator(rng, f.observations(), 3);
    SymbolSet neutral = chains == 0 ? SymbolSet{"⊥"} : support::random_subset(rng, v.differences);
    auto first = delta_transform(f, v);
    if (!first) continue;
    auto second = shrink_transform(first.device(), neutral);
    if (!second) continue;
    ++chains;
    Verdict verdict = check_output_simulation(
        second.device(), f, RelationSpec::compose({RelationSpec::delta(v), RelationSpec::shrink(neutral)}), 5);
    if (verdict.failed()) o.fail("chain " + std::to_string(chains) + ": " + describe(verdict));
  }
  if (chains < 20) o.fail("only " + std::to_string(chains) + " chains built");
  if (o.passed) o.detail = std::to_string(chains) + " delta-then-shrink chains pass the composed check";
  return o;
}

Outcome products() {
  Outcome o;
  Device pair = direct_product(fixtures::wall(), fixtures::wall());
  Variator joint = product_variator(fixtures::flip_variator(), fixtures::flip_variator());
  auto result = delta_transform(pair, joint);
  if (!result) {
    o.fail("no derivative: " + result.failure().message);
    return o;
  }
  Verdict verdict = check_output_simulation(result.device(), pair, RelationSpec::delta(joint), 4);
  if (verdict.failed()) o.fail(describe(verdict));
  if (o.passed) {
    o.detail = std::to_string(result.device().size()) + "-state derivative of the " + std::to_string(pair.size()) +
               "-state product; oracle " + describe(verdict);
  }
  return o;
}

struct Entry {
  int number;
  std::string title;
  double budget_seconds;
  Criterion run;
};

const std::vector<Entry>& criteria() {
  static const std::vector<Entry> all{
      {1, "wall sensor derivative", 1, wall_derivative},
      {2, "compass without derivative", 1, compass_without_derivative},
      {3, "transform/oracle agreement", 60, transform_oracle_agreement},
      {4, "pump and shrink equivalence", 30, pump_shrink_equivalence},
      {5, "small device separation", 1, small_separation},
      {6, "3-coloring calibration", 120, coloring_calibration},
      {7, "chatter-free pipeline", 60, chatter_free},
      {8, "monoid validation", 1, monoid_validation},
      {9, "delta then shrink chain", 10, chain},
      {10, "product derivative", 5, products},
  };
  return all;
}

bool run(const Entry& entry) {
  Stopwatch clock;
  Outcome outcome;
  try {
    outcome = entry.run();
  } catch (const std::exception& error) {
    outcome.fail(std::string("exception: ") + error.what());
  }
  double elapsed = clock.seconds();
  if (elapsed > entry.budget_seconds) {
    outcome.fail("over budget");
  }
  std::cout << "criterion " << entry.number << " (" << entry.title << "): " << (outcome.passed ? "PASS" : "FAIL")
            << " [" << std::fixed << std::setprecision(3) << elapsed << " s / " << std::setprecision(0)
            << entry.budget_seconds << " s] " << outcome.detail << std::endl;
  const std::size_t shown = std::min<std::size_t>(outcome.problems.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "  problem: " << outcome.problems[i] << "\n";
  if (outcome.problems.size() > shown) {
    std::cout << "  ... " << outcome.problems.size() - shown << " more\n";
  }
  return outcome.passed;
}

}  // namespace

int main(int argc, char** argv) {
  bool ok = true;
  if (argc > 1) {
    int wanted = std::atoi(argv[1]);
    for (const auto& entry : criteria()) {
      if (entry.number == wanted) return run(entry) ? EXIT_SUCCESS : EXIT_FAILURE;
    }
    std::cerr << "unknown criterion " << argv[1] << "\n";
    return 2;
  }
  for (const auto& entry : criteria()) ok = run(entry) && ok;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
