// Command-line front end. Core functionality is reached exclusively through
// the shared-library C API (gathersim.h); this file only handles argument
// parsing, file IO and batch aggregation.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gathersim.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string resolve_output(const std::string& path) {
  if (path.empty() || path == "-" || path.front() == '/') return path;
  const char* dir = std::getenv("GATHERSIM_OUTPUT_DIR");
  if (!dir || !*dir) return path;
  std::string d(dir);
  if (d.back() != '/') d += '/';
  return d + path;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << "\n";
    return;
  }
  std::string full = resolve_output(path);
  std::ofstream out(full, std::ios::binary);
  if (!out) die(kExitInput, "cannot write " + full);
  out << content;
}

struct GraphHandle {
  gs_graph* g = nullptr;
  ~GraphHandle() { gs_graph_free(g); }
};

struct ApiString {
  char* s = nullptr;
  ~ApiString() { gs_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

int status_exit_code(gs_status st) {
  switch (st) {
    case GS_OK: return kExitOk;
    case GS_ERR_SIMULATION: return kExitViolation;
    default: return kExitInput;
  }
}

void check_api(gs_status st) {
  if (st != GS_OK) die(status_exit_code(st), gs_last_error());
}

std::vector<int> parse_robot_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      die(kExitInput, "bad robot list entry: " + item);
    }
  }
  if (out.empty()) die(kExitInput, "empty robot list");
  return out;
}

// --- subcommands ------------------------------------------------------

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 std::uint64_t seed, const std::string& out_path) {
  std::vector<const char*> ps;
  for (const auto& p : params) ps.push_back(p.c_str());
  GraphHandle h;
  check_api(gs_graph_generate(family.c_str(), ps.data(), static_cast<int>(ps.size()), seed, &h.g));
  ApiString text;
  check_api(gs_graph_to_text(h.g, &text.s));
  write_output(out_path, text.str());
  return kExitOk;
}

int cmd_analyze(const std::string& graph_path, const std::string& out_path) {
  GraphHandle h;
  check_api(gs_graph_parse(slurp(graph_path).c_str(), &h.g));
  ApiString doc;
  check_api(gs_analyze_json(h.g, &doc.s));
  write_output(out_path, doc.str());
  json parsed = json::parse(doc.str());
  if (parsed.value("predicates_imply_terminal", true)) return kExitOk;
  std::cerr << "theorem consistency violated: a structural predicate holds but no orbit is "
               "terminal\n";
  return kExitViolation;
}

struct SimOutcome {
  json trace;
  bool ok = true;
  std::vector<std::string> failures;
};

SimOutcome run_one(gs_graph* g, const std::vector<int>& robots, const std::string& algo,
                   std::uint64_t seed, const std::string& adversary, int max_epochs,
                   bool double_eval, bool check_trace) {
  SimOutcome out;
  ApiString doc;
  gs_status st = gs_simulate_json(g, robots.data(), static_cast<int>(robots.size()),
                                  algo.c_str(), seed, adversary.c_str(), max_epochs,
                                  double_eval ? 1 : 0, &doc.s);
  if (st != GS_OK) die(status_exit_code(st), gs_last_error());
  out.trace = json::parse(doc.str());
  if (out.trace["outcome"] != "gathered") out.failures.push_back("epoch cap exceeded");
  for (const auto& v : out.trace["invariant_violations"])
    out.failures.push_back(v.get<std::string>());
  const auto& bounds = out.trace["bounds"];
  if (!bounds.value("lower_ok", true))
    out.failures.push_back("gathered faster than the distance lower bound allows");
  if (bounds.contains("upper_ok") && !bounds["upper_ok"].get<bool>())
    out.failures.push_back("terminal-algorithm epoch bound exceeded");
  if (check_trace) {
    ApiString rep;
    check_api(gs_check_trace_json(doc.s, &rep.s));
    json report = json::parse(rep.str());
    if (!report["ok"].get<bool>())
      for (const auto& v : report["violations"])
        out.failures.push_back("transition violation at round " +
                               std::to_string(v["round"].get<int>()) + ": " +
                               v["from"].get<std::string>() + " -> " +
                               v["to"].get<std::string>());
  }
  out.ok = out.failures.empty();
  return out;
}

int cmd_simulate(const std::string& graph_path, const std::string& robots_csv,
                 const std::string& algo, std::uint64_t seed, const std::string& adversary,
                 int max_epochs, bool double_eval, const std::string& trace_path) {
  GraphHandle h;
  check_api(gs_graph_parse(slurp(graph_path).c_str(), &h.g));
  auto robots = parse_robot_list(robots_csv);
  SimOutcome res = run_one(h.g, robots, algo, seed, adversary, max_epochs, double_eval, true);
  if (!trace_path.empty()) write_output(trace_path, res.trace.dump(2));
  const auto& t = res.trace;
  std::cout << "outcome=" << t["outcome"].get<std::string>() << " algorithm="
            << t["algorithm"].get<std::string>() << " epochs=" << t["epochs"]
            << " occ0=" << t["initial"]["occ"] << " delta0=" << t["initial"]["delta"]
            << " lower_bound=" << t["bounds"]["lower_epochs"];
  if (t["bounds"].contains("upper_epochs"))
    std::cout << " upper_bound=" << t["bounds"]["upper_epochs"];
  std::cout << (res.ok ? " checks=pass" : " checks=FAIL") << "\n";
  for (const auto& f : res.failures) std::cerr << "violation: " << f << "\n";
  return res.ok ? kExitOk : kExitViolation;
}

int cmd_check_trace(const std::string& trace_path, const std::string& out_path) {
  std::string trace = slurp(trace_path);
  ApiString rep;
  check_api(gs_check_trace_json(trace.c_str(), &rep.s));
  write_output(out_path, rep.str());
  json report = json::parse(rep.str());
  return report["ok"].get<bool>() ? kExitOk : kExitViolation;
}

// --- batch ------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<int> derived_placement(int n, int count, std::uint64_t seed) {
  // Sample with replacement (multiplicities welcome); insist on two distinct
  // occupied vertices whenever the graph allows it.
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::vector<int> robots;
    std::uint64_t state = splitmix64(seed + attempt * 0x51ed2701ULL);
    for (int i = 0; i < count; ++i) {
      state = splitmix64(state);
      robots.push_back(static_cast<int>(state % static_cast<std::uint64_t>(n)));
    }
    bool two_vertices = false;
    for (int r : robots)
      if (r != robots[0]) two_vertices = true;
    if (two_vertices || n == 1 || count == 1) return robots;
  }
}

struct BatchRun {
  std::string name;
  std::string graph_text;
  std::vector<int> robots;
  std::string algo = "auto";
  std::uint64_t seed = 0;
  std::string adversary = "fixed";
  int max_epochs = 0;
  bool double_eval = false;
};

std::string materialize_graph(const json& spec, std::uint64_t seed) {
  GraphHandle h;
  if (spec.contains("family")) {
    std::vector<std::string> params;
    if (spec.contains("params"))
      for (const auto& p : spec["params"])
        params.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    std::vector<const char*> ps;
    for (const auto& p : params) ps.push_back(p.c_str());
    check_api(gs_graph_generate(spec["family"].get<std::string>().c_str(), ps.data(),
                                static_cast<int>(ps.size()), seed, &h.g));
    ApiString text;
    check_api(gs_graph_to_text(h.g, &text.s));
    return text.str();
  }
  if (spec.contains("file")) return slurp(spec["file"].get<std::string>());
  if (spec.contains("text")) return spec["text"].get<std::string>();
  die(kExitInput, "graph spec needs one of family/file/text");
}

std::vector<BatchRun> expand_suite(const json& suite) {
  if (!suite.contains("runs") || !suite["runs"].is_array())
    die(kExitInput, "suite document lacks a runs array");
  std::uint64_t master = suite.value("master_seed", 0ULL);
  std::vector<BatchRun> runs;
  int index = 0;
  for (const auto& entry : suite["runs"]) {
    std::uint64_t graph_seed = splitmix64(master ^ (0x6a09e667ULL + index));
    std::string graph_text = materialize_graph(entry.at("graph"), graph_seed);
    GraphHandle h;
    check_api(gs_graph_parse(graph_text.c_str(), &h.g));
    int n = gs_graph_vertex_count(h.g);

    std::vector<std::vector<int>> placements;
    const auto& robots = entry.at("robots");
    if (robots.is_array()) {
      placements.push_back(robots.get<std::vector<int>>());
    } else {
      int count = robots.at("count").get<int>();
      int variants = robots.value("variants", 1);
      std::uint64_t pseed = robots.value("placement_seed", master);
      for (int i = 0; i < variants; ++i)
        placements.push_back(derived_placement(n, count, splitmix64(pseed + i)));
    }

    std::vector<std::uint64_t> seeds;
    if (entry.contains("seeds"))
      for (const auto& s : entry["seeds"]) seeds.push_back(s.get<std::uint64_t>());
    else
      seeds.push_back(splitmix64(master + index));

    std::vector<std::string> adversaries;
    if (entry.contains("adversary")) {
      if (entry["adversary"].is_array())
        for (const auto& a : entry["adversary"]) adversaries.push_back(a.get<std::string>());
      else
        adversaries.push_back(entry["adversary"].get<std::string>());
    } else {
      adversaries.push_back("fixed");
    }

    int pi = 0;
    for (const auto& placement : placements) {
      for (auto seed : seeds) {
        for (const auto& adv : adversaries) {
          BatchRun run;
          run.name = entry.value("name", "run" + std::to_string(index)) + "/p" +
                     std::to_string(pi) + "/s" + std::to_string(seed) + "/" + adv;
          run.graph_text = graph_text;
          run.robots = placement;
          run.algo = entry.value("algo", "auto");
          run.seed = seed;
          run.adversary = adv;
          run.max_epochs = entry.value("max_epochs", 0);
          run.double_eval = entry.value("double_eval", false);
          runs.push_back(std::move(run));
        }
      }
      ++pi;
    }
    ++index;
  }
  return runs;
}

int cmd_batch(const std::string& suite_path, int parallel, const std::string& out_path) {
  json suite;
  try {
    suite = json::parse(slurp(suite_path));
  } catch (const json::exception& e) {
    die(kExitInput, std::string("bad suite document: ") + e.what());
  }
  auto runs = expand_suite(suite);
  if (runs.empty()) die(kExitInput, "suite expands to zero runs");

  struct RunResult {
    json record;
    bool ok = true;
  };
  std::vector<RunResult> results(runs.size());
  std::atomic<std::size_t> next{0};
  std::mutex io_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= runs.size()) return;
      const BatchRun& r = runs[i];
      try {
        GraphHandle h;
        check_api(gs_graph_parse(r.graph_text.c_str(), &h.g));
        SimOutcome res = run_one(h.g, r.robots, r.algo, r.seed, r.adversary, r.max_epochs,
                                 r.double_eval, true);
        const auto& t = res.trace;
        json rec{{"name", r.name},
                 {"ok", res.ok},
                 {"failures", res.failures},
                 {"algorithm", t["algorithm"]},
                 {"outcome", t["outcome"]},
                 {"epochs", t["epochs"]},
                 {"occ0", t["initial"]["occ"]},
                 {"delta0", t["initial"]["delta"]},
                 {"n", t["graph"]["n"]},
                 {"diameter", t["initial"]["diameter"]}};
        results[i] = {std::move(rec), res.ok};
      } catch (const CliError& e) {
        std::lock_guard<std::mutex> lock(io_mutex);
        results[i] = {json{{"name", r.name}, {"ok", false}, {"failures", {e.message}}}, false};
      }
    }
  };
  int workers = parallel > 1 ? parallel : 1;
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Aggregate; the scaling fit reports epochs against occ*delta + n.
  int failed = 0;
  double sum_x = 0, sum_y = 0, sum_xx = 0, sum_xy = 0;
  int gathered = 0;
  json run_records = json::array();
  for (const auto& r : results) {
    if (!r.ok) ++failed;
    run_records.push_back(r.record);
    if (r.record.value("outcome", "") == std::string("gathered")) {
      double x = r.record["occ0"].get<double>() * r.record["delta0"].get<double>() +
                 r.record["n"].get<double>();
      double y = r.record["epochs"].get<double>();
      sum_x += x;
      sum_y += y;
      sum_xx += x * x;
      sum_xy += x * y;
      ++gathered;
    }
  }
  json report{{"schema", "gathersim.batch/1"},
              {"runs", run_records},
              {"total", results.size()},
              {"failed", failed}};
  if (gathered >= 2) {
    double denom = gathered * sum_xx - sum_x * sum_x;
    if (std::abs(denom) > 1e-12)
      report["epochs_vs_cost_slope"] = (gathered * sum_xy - sum_x * sum_y) / denom;
  }
  write_output(out_path, report.dump(2));
  std::cout << "batch: " << results.size() - failed << "/" << results.size() << " runs passed";
  if (report.contains("epochs_vs_cost_slope"))
    std::cout << ", epochs vs occ*delta+n slope " << report["epochs_vs_cost_slope"].get<double>();
  std::cout << "\n";
  for (const auto& r : results)
    if (!r.ok) {
      std::cerr << "failed: " << r.record["name"].get<std::string>() << "\n";
      for (const auto& f : r.record["failures"]) std::cerr << "  " << f.get<std::string>() << "\n";
    }
  return failed == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oblivious-robot gathering on finite graphs: analysis, generation, "
               "round-robin simulation and batch verification"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a graph from a named family");
  std::string gen_family;
  std::vector<std::string> gen_params;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("family", gen_family, "family name")->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("--seed", gen_seed, "seed for random families");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // analyze
  auto* ana = app.add_subcommand("analyze", "Orbit and terminal-orbit analysis");
  std::string ana_graph, ana_out;
  ana->add_option("graph", ana_graph, "graph file ('-' for stdin)")->required();
  ana->add_option("-o,--out", ana_out, "output file (default stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run a gathering algorithm under round-robin");
  std::string sim_graph, sim_robots, sim_algo = "auto", sim_adv = "fixed", sim_trace;
  std::uint64_t sim_seed = 0;
  int sim_cap = 0;
  bool sim_double = false;
  sim->add_option("graph", sim_graph, "graph file ('-' for stdin)")->required();
  sim->add_option("--robots", sim_robots, "comma-separated start vertices")->required();
  sim->add_option("--algo", sim_algo, "auto|terminal|nonterminal");
  sim->add_option("--seed", sim_seed, "adversary/relabeling seed");
  sim->add_option("--adversary", sim_adv, "fixed|per-epoch");
  sim->add_option("--max-epochs", sim_cap, "epoch cap (0 = default)");
  sim->add_flag("--double-eval", sim_double, "evaluate each activation under two relabelings");
  sim->add_option("--trace", sim_trace, "write the trace document here");

  // check-trace
  auto* chk = app.add_subcommand("check-trace", "Transition conformance of a saved trace");
  std::string chk_trace, chk_out;
  chk->add_option("trace", chk_trace, "trace file ('-' for stdin)")->required();
  chk->add_option("-o,--out", chk_out, "output file (default stdout)");

  // batch
  auto* bat = app.add_subcommand("batch", "Run a suite file and aggregate the checks");
  std::string bat_suite, bat_out;
  int bat_parallel = 1;
  bat->add_option("suite", bat_suite, "suite file ('-' for stdin)")->required();
  bat->add_option("--parallel", bat_parallel, "worker threads");
  bat->add_option("--out", bat_out, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(gen_family, gen_params, gen_seed, gen_out);
    if (ana->parsed()) return cmd_analyze(ana_graph, ana_out);
    if (sim->parsed())
      return cmd_simulate(sim_graph, sim_robots, sim_algo, sim_seed, sim_adv, sim_cap,
                          sim_double, sim_trace);
    if (chk->parsed()) return cmd_check_trace(chk_trace, chk_out);
    if (bat->parsed()) return cmd_batch(bat_suite, bat_parallel, bat_out);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
