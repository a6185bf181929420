#include "qcp/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "qcp/dag.hpp"
#include "qcp/errors.hpp"
#include "qcp/gtqcp.hpp"

namespace qcp {
namespace {

struct OpenBlock {
  QubitSet qubits;
  std::vector<int> gate_indices;
};

}  // namespace

PartitionedCircuit quick_partition(const Circuit& c, int k) {
  const int k_eff = effective_k(c, k);
  PartitionedCircuit out;
  out.num_qubits = c.num_qubits();
  out.k = k_eff;
  if (c.num_gates() == 0) return out;

  std::vector<OpenBlock> open;
  // Latest-opened block touching each wire; placing a gate into anything
  // earlier would flatten it ahead of gates already sorted onto that wire.
  std::vector<int> last_touch(static_cast<std::size_t>(c.num_qubits()), -1);

  for (int i = 0; i < c.num_gates(); ++i) {
    const Gate& g = c.gate(i);
    QubitSet gq = QubitSet::from_vector(g.qubits);
    int earliest = 0;
    for (int q : g.qubits)
      earliest = std::max(earliest, last_touch[static_cast<std::size_t>(q)]);
    if (earliest < 0) earliest = 0;

    int placed = -1;
    for (std::size_t b = static_cast<std::size_t>(earliest); b < open.size(); ++b) {
      if (open[b].qubits.union_size(gq) > k_eff) continue;
      placed = static_cast<int>(b);
      break;
    }
    if (placed < 0) {
      open.push_back(OpenBlock{gq, {}});
      placed = static_cast<int>(open.size()) - 1;
    }
    open[static_cast<std::size_t>(placed)].qubits.merge(gq);
    open[static_cast<std::size_t>(placed)].gate_indices.push_back(i);
    for (int q : g.qubits)
      last_touch[static_cast<std::size_t>(q)] =
          std::max(last_touch[static_cast<std::size_t>(q)], placed);
  }

  for (OpenBlock& b : open)
    out.blocks.push_back(make_block(c, std::move(b.gate_indices)));
  return out;
}

namespace {

/// All connected subsets of at most k vertices of the residual coupling
/// graph, singletons included.
std::vector<QubitGroup> connected_groups(const CircuitDag& dag,
                                         const GateMask& mask, int k,
                                         std::size_t max_groups) {
  const int n = dag.num_qubits();
  std::vector<QubitSet> adj(static_cast<std::size_t>(n));
  std::vector<char> live(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < dag.num_gates(); ++i) {
    if (mask.contains(i)) continue;
    const auto& qs = dag.gate_qubits(i);
    for (int q : qs) live[static_cast<std::size_t>(q)] = 1;
    for (std::size_t a = 0; a < qs.size(); ++a)
      for (std::size_t b = a + 1; b < qs.size(); ++b) {
        adj[static_cast<std::size_t>(qs[a])].insert(qs[b]);
        adj[static_cast<std::size_t>(qs[b])].insert(qs[a]);
      }
  }

  std::set<QubitGroup> seen;
  std::deque<QubitGroup> queue;
  for (int q = 0; q < n; ++q) {
    if (!live[static_cast<std::size_t>(q)]) continue;
    QubitGroup s{q};
    seen.insert(s);
    queue.push_back(std::move(s));
  }
  while (!queue.empty()) {
    QubitGroup s = std::move(queue.front());
    queue.pop_front();
    if (s.size() >= k) continue;
    for (int v : s.values()) {
      for (int u : adj[static_cast<std::size_t>(v)].values()) {
        if (s.contains(u)) continue;
        QubitGroup grown = s;
        grown.insert(u);
        if (seen.insert(grown).second) {
          if (seen.size() > max_groups)
            throw ResourceLimitError(
                "scan group enumeration exceeded cap of " +
                std::to_string(max_groups) + " groups");
          queue.push_back(std::move(grown));
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

PartitionedCircuit scan_partition(const Circuit& c, int k,
                                  const ScanOptions& options) {
  const int k_eff = effective_k(c, k);
  return greedy_partition_loop(
      c, k_eff,
      [&options](const CircuitDag& dag, const GateMask& mask, int kk) {
        return connected_groups(dag, mask, kk, options.max_groups);
      });
}

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Maximal set of gates confined to `group` and absorbable from the given
/// per-wire consumed positions. Returns the advanced positions; `absorbed`
/// reports whether anything moved.
std::vector<std::uint16_t> absorb_from(const CircuitDag& dag,
                                       const std::vector<std::uint16_t>& state,
                                       const std::vector<int>& group,
                                       bool& absorbed) {
  std::vector<std::uint16_t> pos = state;
  std::vector<char> in_group(static_cast<std::size_t>(dag.num_qubits()), 0);
  for (int q : group) in_group[static_cast<std::size_t>(q)] = 1;
  absorbed = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int w : group) {
      const auto& chain = dag.wire(w);
      while (pos[static_cast<std::size_t>(w)] < chain.size()) {
        const int gate = chain[pos[static_cast<std::size_t>(w)]];
        bool aligned = true;
        for (int q : dag.gate_qubits(gate)) {
          if (!in_group[static_cast<std::size_t>(q)]) {
            aligned = false;
            break;
          }
          const auto& other = dag.wire(q);
          if (pos[static_cast<std::size_t>(q)] >= other.size() ||
              other[pos[static_cast<std::size_t>(q)]] != gate) {
            aligned = false;
            break;
          }
        }
        if (!aligned) break;
        for (int q : dag.gate_qubits(gate)) ++pos[static_cast<std::size_t>(q)];
        absorbed = true;
        progress = true;
      }
    }
  }
  return pos;
}

void subsets_of(const std::vector<int>& items, int max_size,
                std::vector<int>& current, std::size_t start,
                const std::function<void(const std::vector<int>&)>& fn) {
  if (!current.empty()) fn(current);
  if (static_cast<int>(current.size()) >= max_size) return;
  for (std::size_t i = start; i < items.size(); ++i) {
    current.push_back(items[i]);
    subsets_of(items, max_size, current, i + 1, fn);
    current.pop_back();
  }
}

}  // namespace

int brute_force_optimal(const Circuit& c, int k, const OracleLimits& limits) {
  if (c.num_gates() > limits.max_gates)
    throw LimitExceededError("circuit has " + std::to_string(c.num_gates()) +
                             " gates, oracle limit is " +
                             std::to_string(limits.max_gates));
  const int k_eff = effective_k(c, k);
  if (c.num_gates() == 0) return 0;

  const CircuitDag dag = build_dag(c);
  const int n = c.num_qubits();
  std::vector<std::uint16_t> goal(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w)
    goal[static_cast<std::size_t>(w)] = static_cast<std::uint16_t>(dag.wire(w).size());

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(limits.time_budget_s));

  std::unordered_set<std::vector<std::uint16_t>, StateHash> visited;
  std::vector<std::vector<std::uint16_t>> level;
  level.push_back(std::vector<std::uint16_t>(static_cast<std::size_t>(n), 0));
  visited.insert(level.front());
  if (level.front() == goal) return 0;

  int blocks = 0;
  while (!level.empty()) {
    ++blocks;
    std::vector<std::vector<std::uint16_t>> next;
    for (const auto& state : level) {
      if (std::chrono::steady_clock::now() > deadline)
        throw LimitExceededError("oracle exceeded its time budget");
      std::vector<int> live;
      for (int w = 0; w < n; ++w)
        if (state[static_cast<std::size_t>(w)] <
            goal[static_cast<std::size_t>(w)])
          live.push_back(w);
      std::vector<int> current;
      bool done = false;
      subsets_of(live, std::min<int>(k_eff, static_cast<int>(live.size())),
                 current, 0, [&](const std::vector<int>& group) {
                   if (done) return;
                   bool absorbed = false;
                   auto succ = absorb_from(dag, state, group, absorbed);
                   if (!absorbed) return;
                   if (succ == goal) {
                     done = true;
                     return;
                   }
                   if (visited.insert(succ).second) next.push_back(std::move(succ));
                 });
      if (done) return blocks;
    }
    level = std::move(next);
  }
  throw LimitExceededError("oracle search space exhausted unexpectedly");
}

}  // namespace qcp
