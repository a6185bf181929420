#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qcp {

/// One gate application: a named operation with real parameters acting on an
/// ordered list of pairwise-distinct qubit indices.
struct Gate {
  std::string name;
  std::vector<double> params;
  std::vector<int> qubits;

  int arity() const { return static_cast<int>(qubits.size()); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Known gate names with their fixed arity and parameter count. Returns
/// nullopt for names outside the supported set.
struct GateSignature {
  int arity;
  int num_params;
};
std::optional<GateSignature> gate_signature(const std::string& name);

/// An ordered gate list over a fixed qubit register. Gate list order is the
/// circuit's temporal order, so index order is a valid topological order of
/// the induced dependency DAG. Validated on construction, immutable after.
class Circuit {
 public:
  Circuit() = default;

  /// Throws std::invalid_argument if any gate repeats a qubit, has arity 0,
  /// or references a qubit outside [0, num_qubits).
  Circuit(int num_qubits, std::vector<Gate> gates);

  int num_qubits() const { return num_qubits_; }
  int num_gates() const { return static_cast<int>(gates_.size()); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(int index) const { return gates_[static_cast<std::size_t>(index)]; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Structural equality with a tolerance on gate parameters.
bool structurally_equal(const Circuit& a, const Circuit& b, double param_tolerance);

struct CircuitStats {
  int num_qubits = 0;
  int total_gates = 0;
  int two_qubit_gates = 0;
  int depth = 0;

  friend bool operator==(const CircuitStats&, const CircuitStats&) = default;
};

/// Gate counts and the longest wire-dependency chain.
CircuitStats stats(const Circuit& c);

}  // namespace qcp
