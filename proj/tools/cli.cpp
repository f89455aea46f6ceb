#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "eventify/eventify.hpp"

namespace eventify::cli {

namespace {

constexpr int kSuccess = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::string device;
  std::vector<std::string> devices;
  std::string variator;
  std::vector<std::string> variators;
  std::string monoid;
  std::vector<std::string> neutral;
  std::string out;
  std::string candidate;
  std::string reference;
  std::string relation;
  std::size_t max_length = 6;
  std::string kind = "both";
  std::size_t differences = 0;
  bool smallest = false;
  std::string graph;
  std::size_t random_vertices = 0;
  double edge_probability = 0.5;
  std::optional<std::uint64_t> seed;
  std::string graph_out;
  std::string variator_out;
};

class Runner {
 public:
  Runner(const Options& options, std::ostream& out, std::ostream& err) : o_(options), out_(out), err_(err) {}

  int delta(bool shave) {
    Device f = load_device(o_.device);
    Variator v = load_variator(o_.variator, f.observations());
    return report(shave ? shave_delta_transform(f, v) : delta_transform(f, v));
  }

  int shrink() { return report(shrink_transform(load_device(o_.device), neutral())); }
  int pump() { return report(pump_transform(load_device(o_.device), neutral())); }
  int integrate() { return report(monoid_integrator(load_device(o_.device), load_monoid(read(o_.monoid)))); }
  int eventify() { return report(eventify_pipeline(load_device(o_.device), load_monoid(read(o_.monoid)))); }

  int disaggregate() {
    emit(serialize_device(disaggregator(load_device(o_.device), load_monoid(read(o_.monoid)))));
    return kSuccess;
  }

  int product() {
    Device combined = direct_product(load_device(o_.devices[0]), load_device(o_.devices[1]));
    if (!o_.variators.empty()) {
      if (o_.variators.size() != 2) throw std::invalid_argument("--variator must be given twice or not at all");
      Variator joint = product_variator(parse_variator(read(o_.variators[0])).variator,
                                        parse_variator(read(o_.variators[1])).variator);
      std::string text = serialize_variator(joint, combined.observations());
      if (o_.variator_out.empty()) {
        err_ << text;
      } else {
        write_text_file(o_.variator_out, text);
      }
    }
    emit(serialize_device(combined));
    return kSuccess;
  }

  int check_os() {
    RelationSpec spec = parse_relation(o_.relation, [](const std::string& path) { return read_text_file(path); });
    Verdict verdict = check_output_simulation(load_device(o_.candidate), load_device(o_.reference), spec, o_.max_length);
    emit(describe(verdict) + "\n");
    return verdict.passed() ? kSuccess : kNegative;
  }

  int check_stability() {
    Device f = load_device(o_.device);
    SymbolSet n = neutral();
    std::string text;
    bool passed = true;
    if (o_.kind == "vertex" || o_.kind == "both") {
      Verdict verdict = check_vertex_stable(f, n);
      text += "vertex-stable: " + describe(verdict) + "\n";
      passed = passed && verdict.passed();
    }
    if (o_.kind == "output" || o_.kind == "both") {
      Verdict verdict = check_output_stable(f, n);
      text += "output-stable: " + describe(verdict) + "\n";
      passed = passed && verdict.passed();
    }
    emit(text);
    return passed ? kSuccess : kNegative;
  }

  int minimize() {
    Device f = load_device(o_.device);
    if (o_.smallest) {
      auto best = exact_min_cardinality(f, o_.differences);
      if (!best) {
        err_ << "no variator with at most " << o_.differences << " differences admits a derivative\n";
        return kNegative;
      }
      err_ << "smallest difference alphabet: " << *best << "\n";
      emit(serialize_variator(*minimize_variator(f, *best), f.observations()));
      return kSuccess;
    }
    auto found = minimize_variator(f, o_.differences);
    if (!found) {
      err_ << "no variator with at most " << o_.differences << " differences admits a derivative\n";
      return kNegative;
    }
    emit(serialize_variator(*found, f.observations()));
    return kSuccess;
  }

  int gen_3col() {
    Graph graph;
    if (!o_.graph.empty()) {
      graph = parse_graph(read(o_.graph));
    } else {
      if (o_.random_vertices == 0) throw std::invalid_argument("give --graph or --random-vertices");
      std::mt19937_64 rng(o_.seed.value_or(seed_from_environment(0)));
      graph = random_graph(rng, o_.random_vertices, o_.edge_probability);
    }
    if (!o_.graph_out.empty()) write_text_file(o_.graph_out, serialize_graph(graph));
    emit(serialize_device(reduce_3coloring(graph)));
    return kSuccess;
  }

  int validate() {
    std::vector<Violation> violations;
    std::string summary;
    std::optional<Device> f;
    if (!o_.device.empty()) {
      f = load_device(o_.device);
      summary += "device: " + std::to_string(f->size()) + " states, " +
                 (is_deterministic(*f) ? "deterministic" : "nondeterministic") + "\n";
    }
    if (!o_.variator.empty()) {
      auto document = parse_variator(read(o_.variator));
      std::optional<SymbolSet> observations = document.observations;
      if (!observations && f) observations = f->observations();
      if (observations) {
        auto found = validate_variator(document.variator, *observations);
        violations.insert(violations.end(), found.begin(), found.end());
      }
      summary += std::string("variator: ") + (is_functional(document.variator) ? "functional" : "not functional");
      if (observations) {
        summary += is_pairwise_unique(document.variator, *observations) ? ", pairwise unique" : ", not pairwise unique";
      }
      summary += "\n";
    }
    if (!o_.monoid.empty()) {
      MonoidVariator monoid = parse_monoid(read(o_.monoid));
      auto found = validate_monoid(monoid);
      violations.insert(violations.end(), found.begin(), found.end());
      summary += "monoid: " + std::to_string(monoid.elements.size()) + " elements\n";
    }
    if (o_.device.empty() && o_.variator.empty() && o_.monoid.empty()) {
      throw std::invalid_argument("give at least one of --device, --variator, --monoid");
    }
    for (const auto& violation : violations) {
      summary += "violation: " + violation.kind + ": " + violation.detail + "\n";
    }
    summary += violations.empty() ? "valid\n" : "invalid\n";
    emit(summary);
    return violations.empty() ? kSuccess : kNegative;
  }

  int export_dot_command() {
    emit(export_dot(load_device(o_.device)));
    return kSuccess;
  }

 private:
  static std::string read(const std::string& path) { return read_text_file(path); }

  static Device load_device(const std::string& path) {
    try {
      return parse_device(read(path));
    } catch (const ParseError& error) {
      throw ParseError(path + (error.where().empty() ? "" : " " + error.where()), error.what());
    }
  }

  static Variator load_variator(const std::string& path, const SymbolSet& observations) {
    auto document = parse_variator(read(path));
    auto violations = validate_variator(document.variator, document.observations.value_or(observations));
    if (!violations.empty()) {
      throw ParseError(path, violations.front().kind + ": " + violations.front().detail);
    }
    return document.variator;
  }

  SymbolSet neutral() const { return SymbolSet(o_.neutral.begin(), o_.neutral.end()); }

  void emit(const std::string& text) {
    if (o_.out.empty()) {
      out_ << text;
    } else {
      write_text_file(o_.out, text);
    }
  }

  int report(const TransformResult& result) {
    if (result) {
      emit(serialize_device(result.device()));
      return kSuccess;
    }
    const auto& failure = result.failure();
    err_ << "no solution: " << to_string(failure.reason) << ": " << failure.message << "\n";
    if (failure.uncovered_pair) {
      err_ << "uncovered pair: " << failure.uncovered_pair->first << " -> " << failure.uncovered_pair->second << "\n";
    }
    if (!failure.conflict_states.empty()) {
      err_ << "conflict class reached by " << format_word(failure.witness) << ":\n";
      std::optional<SymbolSet> common;
      for (std::size_t i = 0; i < failure.conflict_states.size(); ++i) {
        const auto& outputs = failure.conflict_outputs[i];
        err_ << "  " << failure.conflict_states[i] << " " << format_set(outputs) << "\n";
        if (!common) {
          common = outputs;
        } else {
          SymbolSet kept;
          std::set_intersection(common->begin(), common->end(), outputs.begin(), outputs.end(),
                                std::inserter(kept, kept.end()));
          common = std::move(kept);
        }
      }
      err_ << "output intersection: " << format_set(common.value_or(SymbolSet{})) << "\n";
    }
    return kNegative;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Eventify sensor devices: derivatives, acquisition modes and simulation checks"};
  app.name("eventify");
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", o.out, "Write the result here instead of stdout"); };
  auto add_device = [&](CLI::App* sub) {
    sub->add_option("--device", o.device, "Device document")->required()->check(CLI::ExistingFile);
  };
  auto add_neutral = [&](CLI::App* sub, bool required) {
    auto* option = sub->add_option("--nset", o.neutral, "Neutral symbols, comma separated")->delimiter(',');
    if (required) option->required();
  };

  auto* delta = app.add_subcommand("delta", "Difference-encoded derivative of a device");
  auto* shave = app.add_subcommand("shave", "Derivative reading pure difference streams");
  for (auto* sub : {delta, shave}) {
    add_device(sub);
    sub->add_option("--variator", o.variator, "Variator document")->required()->check(CLI::ExistingFile);
    add_out(sub);
  }
  auto* shrink = app.add_subcommand("shrink", "Device for change-triggered acquisition");
  auto* pump = app.add_subcommand("pump", "Device for polled acquisition");
  for (auto* sub : {shrink, pump}) {
    add_device(sub);
    add_neutral(sub, true);
    add_out(sub);
  }
  auto* integrate = app.add_subcommand("integrate", "Integrator tree for a monoidal variator");
  auto* disaggregate = app.add_subcommand("disaggregate", "Expand an integrator tree into Cayley blocks");
  auto* eventify = app.add_subcommand("eventify", "Chatter-free derivative for a monoidal variator");
  for (auto* sub : {integrate, disaggregate, eventify}) {
    add_device(sub);
    sub->add_option("--monoid", o.monoid, "Monoid document")->required()->check(CLI::ExistingFile);
    add_out(sub);
  }
  auto* product = app.add_subcommand("product", "Direct product of two devices");
  product->add_option("--device", o.devices, "Device documents")->expected(2)->required()->check(CLI::ExistingFile);
  product->add_option("--variator", o.variators, "Variator documents to multiply as well")
      ->expected(2)
      ->check(CLI::ExistingFile);
  product->add_option("--variator-out", o.variator_out, "Where to write the product variator");
  add_out(product);

  auto* check_os = app.add_subcommand("check-os", "Check output simulation modulo a relation");
  check_os->add_option("--candidate", o.candidate, "Candidate device")->required()->check(CLI::ExistingFile);
  check_os->add_option("--reference", o.reference, "Reference device")->required()->check(CLI::ExistingFile);
  check_os->add_option("--relation", o.relation, "Relation, e.g. shrink:n or compose(delta:d2.json;shrink:e)")
      ->required();
  check_os->add_option("--max-len", o.max_length, "Longest source string enumerated")->capture_default_str();
  add_out(check_os);

  auto* stability = app.add_subcommand("check-stability", "Check vertex and output stability");
  add_device(stability);
  add_neutral(stability, true);
  stability->add_option("--kind", o.kind, "vertex, output or both")
      ->check(CLI::IsMember({"vertex", "output", "both"}))
      ->capture_default_str();
  add_out(stability);

  auto* minimize = app.add_subcommand("minimize", "Search for a variator with few differences");
  add_device(minimize);
  minimize->add_option("--differences,-n", o.differences, "Largest difference alphabet allowed")->required();
  minimize->add_flag("--smallest", o.smallest, "Find the smallest alphabet up to --differences");
  add_out(minimize);

  auto* gen = app.add_subcommand("gen-3col", "Device from the 3-coloring reduction");
  gen->add_option("--graph", o.graph, "Edge-list file")->check(CLI::ExistingFile);
  gen->add_option("--random-vertices", o.random_vertices, "Generate a random graph with this many vertices");
  gen->add_option("--edge-probability", o.edge_probability, "Edge probability for random graphs")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--seed", o.seed, "Random seed (default: EVENTIFY_SEED or 0)");
  gen->add_option("--graph-out", o.graph_out, "Also write the graph as an edge list");
  add_out(gen);

  auto* validate = app.add_subcommand("validate", "Validate device, variator and monoid documents");
  validate->add_option("--device", o.device, "Device document")->check(CLI::ExistingFile);
  validate->add_option("--variator", o.variator, "Variator document")->check(CLI::ExistingFile);
  validate->add_option("--monoid", o.monoid, "Monoid document")->check(CLI::ExistingFile);
  add_out(validate);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a device");
  add_device(dot);
  add_out(dot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& help) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& error) {
    err << "error: " << error.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return kUsage;
  }

  Runner runner(o, out, err);
  try {
    if (delta->parsed()) return runner.delta(false);
    if (shave->parsed()) return runner.delta(true);
    if (shrink->parsed()) return runner.shrink();
    if (pump->parsed()) return runner.pump();
    if (integrate->parsed()) return runner.integrate();
    if (disaggregate->parsed()) return runner.disaggregate();
    if (eventify->parsed()) return runner.eventify();
    if (product->parsed()) return runner.product();
    if (check_os->parsed()) return runner.check_os();
    if (stability->parsed()) return runner.check_stability();
    if (minimize->parsed()) return runner.minimize();
    if (gen->parsed()) return runner.gen_3col();
    if (validate->parsed()) return runner.validate();
    if (dot->parsed()) return runner.export_dot_command();
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace eventify::cli
