#pragma once

#include <functional>
#include <set>
#include <vector>

#include "qcp/dag.hpp"
#include "qcp/partition.hpp"

namespace qcp {

/// Counters exposed by the group enumerator; used to bound traversal work in
/// tests and scaling measurements.
struct EnumerationStats {
  long enumerate_calls = 0;
  long groups_recorded = 0;
};

/// Greedy dependency-guided group enumeration: for every live qubit, walk its
/// wire as far as the merged dependency set stays within k, record the
/// resulting group, then explore each newly acquired qubit the same way with
/// the recorded group as the accumulated context. Groups already present in
/// the result set are not re-expanded. Returns the deduplicated groups in
/// canonical order.
std::vector<QubitGroup> enumerate_groups(const CircuitDag& dag,
                                         const GateMask& mask,
                                         const DependencyMap& deps, int k,
                                         EnumerationStats* stats = nullptr);

/// Enumeration restricted to a single start qubit, with a fresh result set.
std::vector<QubitGroup> enumerate_groups_from(const CircuitDag& dag,
                                              const GateMask& mask,
                                              const DependencyMap& deps, int k,
                                              int start_qubit,
                                              EnumerationStats* stats = nullptr);

/// Absorbs, from each wire's residual frontier, every gate whose qubits all
/// lie in the group and whose unmasked wire predecessors are already
/// absorbed, iterating to a fixed point. Gate indices come back ascending.
CandidatePartition expand_group(const CircuitDag& dag, const GateMask& mask,
                                const QubitGroup& group);

/// Candidate-group source for one iteration of the greedy selection loop.
using GroupGenerator = std::function<std::vector<QubitGroup>(
    const CircuitDag& dag, const GateMask& mask, int k)>;

/// Shared outer loop: generate groups, expand them all, keep the best-scoring
/// candidate (ties: fewer qubits, then lexicographically smallest qubit
/// list), mask its gates, repeat until every gate is partitioned. If no
/// candidate absorbs anything, the lowest-index frontier gate becomes its own
/// block so the loop always progresses.
PartitionedCircuit greedy_partition_loop(const Circuit& c, int k_eff,
                                         const GroupGenerator& generate);

/// Greedy topology-aware partitioning: dependency propagation, group
/// enumeration, expansion and best-score selection per iteration. k larger
/// than the register is clamped; a gate wider than k is unpartitionable and
/// throws GateArityExceedsK.
PartitionedCircuit gtqcp_partition(const Circuit& c, int k);

/// Clamps k to the register size and checks every gate fits.
int effective_k(const Circuit& c, int k);

}  // namespace qcp
