#include "gathersim/sim.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gathersim/algos.hpp"

namespace gathersim {

Configuration snapshot(const Graph& g, const Placement& p) {
  Configuration c{VertexSet(g.vertex_count())};
  for (Vertex v : p.positions) c.occupied.insert(v);
  return c;
}

int occupied_spread(const Graph& g, const Configuration& c) {
  auto vs = c.occupied.to_vector();
  int best = 0;
  for (Vertex v : vs) {
    auto d = distances_from(g, v);
    for (Vertex w : vs) {
      if (d[w] < 0) throw DisconnectedGraphError("spread over a disconnected graph");
      best = std::max(best, d[w]);
    }
  }
  return best;
}

View make_view(const Graph& g, const Configuration& c, Vertex pos,
               const std::vector<int>& relabeling) {
  View v;
  v.graph = g.relabeled(relabeling);
  v.occupied = VertexSet(g.vertex_count());
  for (Vertex x : c.occupied.to_vector()) v.occupied.insert(relabeling[x]);
  v.self = relabeling[pos];
  return v;
}

const char* adversary_mode_name(AdversaryMode m) {
  return m == AdversaryMode::fixed_order ? "fixed" : "per-epoch";
}

std::optional<AdversaryMode> adversary_mode_from_name(const std::string& s) {
  if (s == "fixed") return AdversaryMode::fixed_order;
  if (s == "per-epoch") return AdversaryMode::per_epoch_order;
  return std::nullopt;
}

int default_epoch_cap(const Graph& g, const Placement& p0) {
  Configuration c0 = snapshot(g, p0);
  return 10 * (c0.occ() * occupied_spread(g, c0) + g.vertex_count());
}

namespace {

// Explicit Fisher-Yates: std::shuffle's draw sequence is not pinned by the
// standard, and traces must reproduce across toolchains.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

std::vector<int> random_relabeling(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  deterministic_shuffle(perm, rng);
  return perm;
}

struct TrickleEpisode {
  bool active = false;
  std::string task;
  std::vector<Vertex> rears;
  int start_round = 0;
  std::vector<int> last_counts;
};

}  // namespace

ExecutionTrace run(const Graph& g, const Placement& p0, const GatherAlgorithm& algo,
                   const Adversary& adv, const RunOptions& opts) {
  require_connected(g);
  const int n = g.vertex_count();
  const int k = p0.count();
  if (k < 1) throw std::invalid_argument("at least one robot required");
  for (Vertex v : p0.positions)
    if (v < 0 || v >= n) throw std::invalid_argument("robot placed on an invalid vertex");

  ExecutionTrace trace;
  trace.algorithm = algo.name;
  trace.seed = adv.seed;
  trace.mode = adv.mode;
  trace.robot_count = k;
  trace.vertex_count = n;
  trace.initial_positions = p0.positions;
  {
    Configuration c0 = snapshot(g, p0);
    trace.initial_occ = c0.occ();
    trace.initial_delta = occupied_spread(g, c0);
  }
  trace.epoch_cap = opts.max_epochs > 0 ? opts.max_epochs : default_epoch_cap(g, p0);

  std::mt19937_64 rng_sched(adv.seed ^ 0x9e3779b97f4a7c15ULL);
  std::mt19937_64 rng_relabel(adv.seed ^ 0xc2b2ae3d27d4eb4fULL);

  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  deterministic_shuffle(order, rng_sched);

  std::vector<Vertex> positions = p0.positions;
  const bool track = algo.tracked_orbit.universe() == n;
  auto count_on = [&](Vertex v) {
    return static_cast<int>(std::count(positions.begin(), positions.end(), v));
  };
  auto tracked_count = [&]() {
    if (!track) return -1;
    int b = 0;
    for (Vertex v : positions)
      if (algo.tracked_orbit.contains(v)) ++b;
    return b;
  };

  bool gathered = false;
  int stability_remaining = -1;
  int last_b_at_t2ii = -1;
  TrickleEpisode episode;
  long round = 0;

  while (true) {
    const int epoch = static_cast<int>(round / k);
    if (round % k == 0 && round > 0 && adv.mode == AdversaryMode::per_epoch_order)
      deterministic_shuffle(order, rng_sched);

    Configuration config = snapshot(g, {positions});
    if (!gathered && config.final_config()) {
      gathered = true;
      trace.outcome = Outcome::gathered;
      trace.epochs = static_cast<int>((round + k - 1) / k);
      trace.gathered_at = config.occupied.min_vertex();
      // Run to the end of this epoch plus one full one; every robot must
      // prove a nil move in the final configuration.
      stability_remaining = static_cast<int>((k - round % k) % k) + k;
    }
    if (gathered && stability_remaining == 0) break;
    if (!gathered && epoch >= trace.epoch_cap) {
      trace.outcome = Outcome::epoch_cap_exceeded;
      trace.epochs = trace.epoch_cap;
      break;
    }

    const int robot = order[round % k];
    const Vertex pos = positions[robot];

    RoundLabel label = algo.classify(config);

    RoundRecord rec;
    rec.epoch = epoch;
    rec.round = static_cast<int>(round);
    rec.robot = robot;
    rec.occupied = config.occupied.to_vector();
    rec.task = label.task;
    rec.from = pos;
    rec.robots_on_tracked = tracked_count();

    // Monotone robot count on the tracked component(s): checked at every
    // round the classifier marks as the steady task.
    if (track && label.task == "T2.ii") {
      if (last_b_at_t2ii >= 0 && rec.robots_on_tracked < last_b_at_t2ii) {
        std::ostringstream msg;
        msg << "round " << round << ": tracked robot count dropped from " << last_b_at_t2ii
            << " to " << rec.robots_on_tracked;
        trace.invariant_violations.push_back(msg.str());
      }
      last_b_at_t2ii = rec.robots_on_tracked;
    }

    // Multiplicity trickle: within one episode the rear counts may only
    // shrink, and must hit zero within one epoch of the episode's start.
    bool trickle_task =
        label.task == "T2.iv" || label.task == "T3.ii" || label.task == "T3.iii";
    if (trickle_task) {
      if (!episode.active || episode.task != label.task ||
          episode.rears != label.rear_vertices) {
        episode.active = true;
        episode.task = label.task;
        episode.rears = label.rear_vertices;
        episode.start_round = static_cast<int>(round);
        episode.last_counts.assign(episode.rears.size(), -1);
      }
      for (std::size_t i = 0; i < episode.rears.size(); ++i) {
        int cnt = count_on(episode.rears[i]);
        if (episode.last_counts[i] >= 0 && cnt > episode.last_counts[i]) {
          std::ostringstream msg;
          msg << "round " << round << ": rear vertex " << episode.rears[i]
              << " robot count grew during a trickle episode";
          trace.invariant_violations.push_back(msg.str());
        }
        episode.last_counts[i] = cnt;
        if (round - episode.start_round >= k && cnt > 0) {
          std::ostringstream msg;
          msg << "round " << round << ": rear vertex " << episode.rears[i]
              << " still occupied one epoch after the episode started";
          trace.invariant_violations.push_back(msg.str());
        }
      }
    } else {
      episode.active = false;
    }

    auto relabeling = random_relabeling(n, rng_relabel);
    View view = make_view(g, config, pos, relabeling);
    Vertex target_view = algo.move(view);
    if (target_view < 0 || target_view >= n)
      throw SimulationError("round " + std::to_string(round) + ": move out of range");
    std::vector<int> inverse(n);
    for (int v = 0; v < n; ++v) inverse[relabeling[v]] = v;
    Vertex target = inverse[target_view];

    if (opts.double_eval) {
      auto relabeling2 = random_relabeling(n, rng_relabel);
      View view2 = make_view(g, config, pos, relabeling2);
      Vertex tv2 = algo.move(view2);
      std::vector<int> inverse2(n);
      for (int v = 0; v < n; ++v) inverse2[relabeling2[v]] = v;
      Vertex target2 = inverse2[tv2];
      if (target2 != target) {
        std::ostringstream msg;
        msg << "round " << round << ": robot " << robot
            << " decided differently under two relabelings (" << target << " vs " << target2
            << ")";
        throw SimulationError(msg.str());
      }
      trace.double_checked++;
    }

    if (target != pos && !g.adjacent(pos, target)) {
      std::ostringstream msg;
      msg << "round " << round << ": robot " << robot << " returned a non-neighbor move " << pos
          << " -> " << target;
      throw SimulationError(msg.str());
    }

    if (gathered && target != pos) {
      std::ostringstream msg;
      msg << "round " << round << ": robot " << robot << " moved after gathering";
      trace.invariant_violations.push_back(msg.str());
    }

    positions[robot] = target;
    rec.to = target;
    trace.rounds.push_back(std::move(rec));

    if (gathered) --stability_remaining;
    ++round;
  }
  return trace;
}

SimulationResult simulate(const SimulationRequest& req) {
  require_connected(req.graph);
  GatherAlgorithm algo;
  if (req.algo == "auto")
    algo = make_auto_algorithm(req.graph);
  else if (req.algo == "terminal")
    algo = make_terminal_algorithm(req.graph);
  else if (req.algo == "nonterminal")
    algo = make_nonterminal_algorithm(req.graph);
  else
    throw std::invalid_argument("unknown algorithm: " + req.algo);

  SimulationResult res;
  res.algorithm = algo.name;
  res.trace = run(req.graph, Placement{req.robots}, algo, Adversary{req.seed, req.mode},
                  RunOptions{req.max_epochs, req.double_eval});

  res.lower_bound = (res.trace.initial_delta + 1) / 2;
  res.lower_bound_ok = res.trace.outcome != Outcome::gathered ||
                       res.trace.initial_delta == 0 || res.trace.epochs >= res.lower_bound;
  if (algo.name == "terminal") {
    auto canon = canonize(req.graph);
    auto idx = smallest_terminal_orbit_index(req.graph, canon.orbits);
    if (idx) {
      res.terminal_bound = 2 + terminal_reach_bound(req.graph, canon.orbits.orbits[*idx]);
      res.terminal_bound_ok = res.trace.outcome == Outcome::gathered &&
                              res.trace.epochs <= *res.terminal_bound;
    }
  }
  return res;
}

}  // namespace gathersim
