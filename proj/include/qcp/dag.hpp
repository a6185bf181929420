#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "qcp/circuit.hpp"
#include "qcp/qubit_set.hpp"

namespace qcp {

/// A node of the circuit DAG: either the entry point of a qubit wire or a
/// gate, identified by qubit index or gate index respectively.
struct NodeId {
  enum class Kind { qubit_source, gate };

  Kind kind = Kind::qubit_source;
  int index = 0;

  static NodeId source(int qubit) { return {Kind::qubit_source, qubit}; }
  static NodeId gate(int gate_index) { return {Kind::gate, gate_index}; }

  friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// Set of gate indices already assigned to a partition and removed from the
/// residual circuit.
class GateMask {
 public:
  GateMask() = default;
  explicit GateMask(int num_gates)
      : member_(static_cast<std::size_t>(num_gates), 0) {}

  bool contains(int gate) const { return member_[static_cast<std::size_t>(gate)] != 0; }

  void add(int gate) {
    auto& slot = member_[static_cast<std::size_t>(gate)];
    if (!slot) {
      slot = 1;
      ++count_;
    }
  }

  int count() const { return count_; }
  int num_gates() const { return static_cast<int>(member_.size()); }
  bool all_masked() const { return count_ == num_gates(); }

 private:
  std::vector<std::uint8_t> member_;
  int count_ = 0;
};

/// Per-wire successor structure of a circuit: for every qubit the ordered
/// chain of gates touching it, headed conceptually by the qubit source node.
/// Immutable after construction.
class CircuitDag {
 public:
  explicit CircuitDag(const Circuit& c);

  int num_qubits() const { return num_qubits_; }
  int num_gates() const { return static_cast<int>(gate_qubits_.size()); }
  int total_arity() const { return total_arity_; }

  /// Gate indices on wire q, ascending.
  const std::vector<int>& wire(int q) const {
    return wires_[static_cast<std::size_t>(q)];
  }

  const std::vector<int>& gate_qubits(int gate) const {
    return gate_qubits_[static_cast<std::size_t>(gate)];
  }

  /// Offset of a gate's slots in flat per-arity arrays; slot a corresponds to
  /// gate_qubits(gate)[a].
  int arity_offset(int gate) const {
    return arity_offset_[static_cast<std::size_t>(gate)];
  }

  /// Position of the gate within wire(w); throws if the gate is not on w.
  int wire_position(int gate, int w) const;

  /// Which slot of the gate's qubit list is wire w; -1 if not incident.
  int wire_slot(int gate, int w) const;

 private:
  int num_qubits_ = 0;
  int total_arity_ = 0;
  std::vector<std::vector<int>> wires_;
  std::vector<std::vector<int>> gate_qubits_;
  std::vector<int> arity_offset_;
  std::vector<int> wire_pos_;  // flat, indexed by arity_offset(gate) + slot
};

CircuitDag build_dag(const Circuit& c);

/// First unmasked gate strictly after `node` on `wire`, or nullopt when the
/// wire is exhausted. Throws std::invalid_argument if node does not lie on
/// the wire.
std::optional<NodeId> wire_successor(const CircuitDag& dag, NodeId node,
                                     int wire, const GateMask& mask);

/// Per-gate qubit dependency sets of the residual circuit, truncated at k,
/// plus the per-wire frontier the propagation started from. Gates whose
/// merged set would exceed k are absent from deps, and propagation stops
/// through them.
struct DependencyMap {
  std::vector<std::optional<QubitSet>> deps;          // by gate index
  std::vector<std::optional<int>> frontier_gate;      // by qubit

  bool mapped(int gate) const {
    return deps[static_cast<std::size_t>(gate)].has_value();
  }
};

/// Forward propagation over unmasked nodes in topological order: a gate's set
/// is the union of its own qubits and the sets of its unmasked wire
/// predecessors. A gate with an absent predecessor set is itself absent.
DependencyMap propagate_dependencies(const CircuitDag& dag, const GateMask& mask,
                                     int k);

/// First unmasked gate per wire, or nullopt for exhausted wires.
std::vector<std::optional<int>> frontier(const CircuitDag& dag,
                                         const GateMask& mask);

nlohmann::json dag_to_json(const CircuitDag& dag);
nlohmann::json dependency_map_to_json(const DependencyMap& map);

}  // namespace qcp
