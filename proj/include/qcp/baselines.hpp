#pragma once

#include <cstddef>

#include "qcp/circuit.hpp"
#include "qcp/partition.hpp"

namespace qcp {

/// Single-pass partitioner: each gate joins the earliest compatible open
/// block, where compatible means the combined qubit set stays within k and no
/// block opened later already touches one of the gate's wires; otherwise a
/// new block opens. Blocks are finalized in creation order. Linear-time in
/// practice, weakest block counts.
PartitionedCircuit quick_partition(const Circuit& c, int k);

struct ScanOptions {
  /// Cap on candidate groups generated per iteration.
  std::size_t max_groups = 1'000'000;
};

/// Exhaustive-flavored baseline: the same greedy selection loop as
/// gtqcp_partition, but candidates are all connected qubit subsets of at most
/// k qubits of the residual coupling graph. Throws ResourceLimitError when
/// the group count exceeds options.max_groups.
PartitionedCircuit scan_partition(const Circuit& c, int k,
                                  const ScanOptions& options = {});

struct OracleLimits {
  int max_gates = 12;
  double time_budget_s = 60.0;
};

/// Exact minimum block count over all valid partitions, by memoized breadth
/// first search over per-wire consumed-prefix states. Intended for tiny
/// instances; throws LimitExceededError beyond the configured limits.
int brute_force_optimal(const Circuit& c, int k, const OracleLimits& limits = {});

}  // namespace qcp
