#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qcp/circuit.hpp"
#include "qcp/qubit_set.hpp"

namespace qcp {

/// A candidate qubit set of at most k qubits; canonical (sorted) storage makes
/// deduplication and tie-breaking deterministic.
using QubitGroup = QubitSet;

/// A qubit group together with the residual-frontier gate prefix that depends
/// only on those qubits. Score is the absorbed gate count.
struct CandidatePartition {
  QubitGroup qubits;
  std::vector<int> gate_indices;  // ascending original indices
};

/// Number of circuit gates a candidate absorbs.
inline int score(const CandidatePartition& cand) {
  return static_cast<int>(cand.gate_indices.size());
}

/// One convex sub-circuit: gates in original relative order, confined to a
/// bounded qubit set.
struct Block {
  QubitSet qubits;                 // qubits touched by the block's gates
  std::vector<Gate> gates;         // original relative order
  std::vector<int> origin_indices; // ascending original gate indices
};

/// Ordered blocks covering every gate of the source circuit exactly once;
/// concatenating blocks reproduces, per qubit, the original wire sequence.
struct PartitionedCircuit {
  std::vector<Block> blocks;
  int num_qubits = 0;
  int k = 0;
};

/// Builds a block from a set of original gate indices (sorted internally).
Block make_block(const Circuit& c, std::vector<int> origin_indices);

nlohmann::json partition_to_json(const PartitionedCircuit& p);

/// Reconstructs a partition from JSON against its source circuit. Performs no
/// validity checking beyond JSON shape; verify_partitioning is the validator.
/// Out-of-range gate indices are preserved so the verifier can report them.
PartitionedCircuit partition_from_json(const nlohmann::json& j, const Circuit& c);

/// The gates of one block as a standalone circuit over the original register.
Circuit block_circuit(const Block& b, int num_qubits);

}  // namespace qcp
