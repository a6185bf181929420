#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qcp/circuit.hpp"
#include "qcp/partition.hpp"

namespace qcp {

/// Combines blocks whose joint qubit count stays within k whenever no block
/// between them touches a qubit of the later block (so the move cannot
/// reorder gates on any wire). Leftmost mergeable pair first, repeated to a
/// fixed point; idempotent.
PartitionedCircuit merge_adjacent(const PartitionedCircuit& p);

struct VerifyViolation {
  std::string kind;     // coverage | block-size | gate-outside-qubits |
                        // block-gate-order | wire-order
  int block_index = -1;
  int qubit = -1;
  std::string detail;
};

struct VerifyReport {
  bool valid = true;
  std::vector<VerifyViolation> violations;
};

/// Structural validity of a partition against its source circuit: every gate
/// in exactly one block, every block within k qubits with gates confined to
/// them, ascending order inside blocks, and flatten equivalence per wire.
/// Violations are data, not errors. Uses only Circuit and PartitionedCircuit
/// fields, independent of any partitioner internals.
VerifyReport verify_partitioning(const Circuit& c, const PartitionedCircuit& p);

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace qcp
