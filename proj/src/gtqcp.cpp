#include "qcp/gtqcp.hpp"

#include <algorithm>
#include <stdexcept>
#include <limits>
#include <stdexcept>

#include "qcp/errors.hpp"

namespace qcp {
namespace {

class Enumerator {
 public:
  Enumerator(const CircuitDag& dag, const GateMask& mask,
             const DependencyMap& deps, int k, std::set<QubitGroup>& results,
             EnumerationStats* stats)
      : dag_(dag), mask_(mask), deps_(deps), k_(k), results_(results),
        stats_(stats) {}

  void enumerate(int target_wire, const QubitSet& input) {
    if (stats_) ++stats_->enumerate_calls;
    // Longest admissible walk down the target wire from its frontier.
    const QubitSet* reached = nullptr;
    for (int gate : dag_.wire(target_wire)) {
      if (mask_.contains(gate)) continue;
      const auto& d = deps_.deps[static_cast<std::size_t>(gate)];
      if (!d || input.union_size(*d) > k_) break;
      reached = &*d;
    }
    if (reached == nullptr) return;  // no gate admissible, nothing to record
    QubitGroup group = input;
    group.merge(*reached);
    if (results_.contains(group)) return;  // seen before: do not re-expand
    results_.insert(group);
    if (stats_) ++stats_->groups_recorded;
    if (group.size() < k_) {
      for (int q : group.values())
        if (!input.contains(q)) enumerate(q, group);
    }
  }

 private:
  const CircuitDag& dag_;
  const GateMask& mask_;
  const DependencyMap& deps_;
  int k_;
  std::set<QubitGroup>& results_;
  EnumerationStats* stats_;
};

std::vector<QubitGroup> to_sorted_vector(const std::set<QubitGroup>& results) {
  return {results.begin(), results.end()};
}

}  // namespace

std::vector<QubitGroup> enumerate_groups(const CircuitDag& dag,
                                         const GateMask& mask,
                                         const DependencyMap& deps, int k,
                                         EnumerationStats* stats) {
  std::set<QubitGroup> results;
  Enumerator e(dag, mask, deps, k, results, stats);
  for (int q = 0; q < dag.num_qubits(); ++q) {
    if (!deps.frontier_gate[static_cast<std::size_t>(q)]) continue;
    e.enumerate(q, QubitSet{q});
  }
  return to_sorted_vector(results);
}

std::vector<QubitGroup> enumerate_groups_from(const CircuitDag& dag,
                                              const GateMask& mask,
                                              const DependencyMap& deps, int k,
                                              int start_qubit,
                                              EnumerationStats* stats) {
  std::set<QubitGroup> results;
  Enumerator e(dag, mask, deps, k, results, stats);
  if (deps.frontier_gate[static_cast<std::size_t>(start_qubit)])
    e.enumerate(start_qubit, QubitSet{start_qubit});
  return to_sorted_vector(results);
}

CandidatePartition expand_group(const CircuitDag& dag, const GateMask& mask,
                                const QubitGroup& group) {
  CandidatePartition cand;
  cand.qubits = group;
  const auto& members = group.values();
  const std::size_t width = members.size();

  // Slot of each register qubit within the group, -1 outside.
  std::vector<int> slot(static_cast<std::size_t>(dag.num_qubits()), -1);
  for (std::size_t i = 0; i < width; ++i)
    slot[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

  std::vector<std::size_t> cursor(width, 0);
  auto skip_masked = [&](std::size_t wi) {
    const auto& chain = dag.wire(members[wi]);
    while (cursor[wi] < chain.size() && mask.contains(chain[cursor[wi]]))
      ++cursor[wi];
  };

  // A gate is absorbable once it is the residual frontier of every wire it
  // touches; loop to a fixed point so multi-qubit gates wait for all wires.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t wi = 0; wi < width; ++wi) {
      const auto& chain = dag.wire(members[wi]);
      while (true) {
        skip_masked(wi);
        if (cursor[wi] >= chain.size()) break;
        const int gate = chain[cursor[wi]];
        bool aligned = true;
        for (int q : dag.gate_qubits(gate)) {
          int s = slot[static_cast<std::size_t>(q)];
          if (s < 0) {
            aligned = false;
            break;
          }
          skip_masked(static_cast<std::size_t>(s));
          const auto& other = dag.wire(members[static_cast<std::size_t>(s)]);
          if (cursor[static_cast<std::size_t>(s)] >= other.size() ||
              other[cursor[static_cast<std::size_t>(s)]] != gate) {
            aligned = false;
            break;
          }
        }
        if (!aligned) break;
        for (int q : dag.gate_qubits(gate))
          ++cursor[static_cast<std::size_t>(slot[static_cast<std::size_t>(q)])];
        cand.gate_indices.push_back(gate);
        progress = true;
      }
    }
  }
  std::sort(cand.gate_indices.begin(), cand.gate_indices.end());
  return cand;
}

int effective_k(const Circuit& c, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  int k_eff = c.num_qubits() > 0 ? std::min(k, c.num_qubits()) : k;
  for (int i = 0; i < c.num_gates(); ++i)
    if (c.gate(i).arity() > k_eff)
      throw GateArityExceedsK("gate " + std::to_string(i) + " (" +
                              c.gate(i).name + ") touches " +
                              std::to_string(c.gate(i).arity()) +
                              " qubits, more than k = " + std::to_string(k_eff));
  return k_eff;
}

PartitionedCircuit greedy_partition_loop(const Circuit& c, int k_eff,
                                         const GroupGenerator& generate) {
  PartitionedCircuit out;
  out.num_qubits = c.num_qubits();
  out.k = k_eff;
  if (c.num_gates() == 0) return out;

  const CircuitDag dag = build_dag(c);
  GateMask mask(c.num_gates());

  while (!mask.all_masked()) {
    const std::vector<QubitGroup> groups = generate(dag, mask, k_eff);

    CandidatePartition best;
    bool have_best = false;
    int best_score = 0;
    for (const QubitGroup& g : groups) {
      CandidatePartition cand = expand_group(dag, mask, g);
      if (cand.gate_indices.empty()) continue;
      best_score = std::max(best_score, score(cand));
      if (!have_best || score(cand) > score(best) ||
          (score(cand) == score(best) &&
           (cand.qubits.size() < best.qubits.size() ||
            (cand.qubits.size() == best.qubits.size() &&
             cand.qubits.values() < best.qubits.values())))) {
        best = std::move(cand);
        have_best = true;
      }
    }

    std::vector<int> chosen;
    if (have_best) {
      if (score(best) != best_score)
        throw std::logic_error("greedy selection lost the best score");
      chosen = std::move(best.gate_indices);
    } else {
      // Every enumerated group expanded empty; take the lowest-index frontier
      // gate as its own block so the loop cannot stall.
      int min_gate = std::numeric_limits<int>::max();
      for (const auto& f : frontier(dag, mask))
        if (f) min_gate = std::min(min_gate, *f);
      if (min_gate == std::numeric_limits<int>::max())
        throw std::logic_error("no frontier gate on an unfinished circuit");
      chosen = {min_gate};
    }

    for (int idx : chosen) mask.add(idx);
    out.blocks.push_back(make_block(c, std::move(chosen)));
  }
  return out;
}

PartitionedCircuit gtqcp_partition(const Circuit& c, int k) {
  const int k_eff = effective_k(c, k);
  return greedy_partition_loop(
      c, k_eff,
      [](const CircuitDag& dag, const GateMask& mask, int kk) {
        const DependencyMap deps = propagate_dependencies(dag, mask, kk);
        return enumerate_groups(dag, mask, deps, kk);
      });
}

}  // namespace qcp
