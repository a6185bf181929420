#include "qcp/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace qcp {

std::optional<GateSignature> gate_signature(const std::string& name) {
  static const std::unordered_map<std::string, GateSignature> table = {
      {"x", {1, 0}},   {"y", {1, 0}},    {"z", {1, 0}},   {"h", {1, 0}},
      {"s", {1, 0}},   {"t", {1, 0}},    {"sdg", {1, 0}}, {"tdg", {1, 0}},
      {"rx", {1, 1}},  {"ry", {1, 1}},   {"rz", {1, 1}},  {"u1", {1, 1}},
      {"u2", {1, 2}},  {"u3", {1, 3}},   {"cx", {2, 0}},  {"cz", {2, 0}},
      {"cp", {2, 1}},  {"cu1", {2, 1}},  {"swap", {2, 0}}, {"ccx", {3, 0}},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Circuit::Circuit(int num_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
  if (num_qubits_ < 0) throw std::invalid_argument("negative qubit count");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.qubits.empty())
      throw std::invalid_argument("gate " + std::to_string(i) + " (" + g.name +
                                  ") has no qubits");
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      int q = g.qubits[a];
      if (q < 0 || q >= num_qubits_)
        throw std::invalid_argument("gate " + std::to_string(i) + " (" + g.name +
                                    ") references qubit " + std::to_string(q) +
                                    " outside register of size " +
                                    std::to_string(num_qubits_));
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b)
        if (g.qubits[b] == q)
          throw std::invalid_argument("gate " + std::to_string(i) + " (" +
                                      g.name + ") repeats qubit " +
                                      std::to_string(q));
    }
  }
}

bool structurally_equal(const Circuit& a, const Circuit& b, double param_tolerance) {
  if (a.num_qubits() != b.num_qubits() || a.num_gates() != b.num_gates())
    return false;
  for (int i = 0; i < a.num_gates(); ++i) {
    const Gate& ga = a.gate(i);
    const Gate& gb = b.gate(i);
    if (ga.name != gb.name || ga.qubits != gb.qubits ||
        ga.params.size() != gb.params.size())
      return false;
    for (std::size_t p = 0; p < ga.params.size(); ++p)
      if (std::abs(ga.params[p] - gb.params[p]) > param_tolerance) return false;
  }
  return true;
}

CircuitStats stats(const Circuit& c) {
  CircuitStats s;
  s.num_qubits = c.num_qubits();
  s.total_gates = c.num_gates();
  std::vector<int> wire_depth(static_cast<std::size_t>(c.num_qubits()), 0);
  for (const Gate& g : c.gates()) {
    if (g.arity() == 2) ++s.two_qubit_gates;
    int level = 0;
    for (int q : g.qubits) level = std::max(level, wire_depth[static_cast<std::size_t>(q)]);
    ++level;
    for (int q : g.qubits) wire_depth[static_cast<std::size_t>(q)] = level;
    s.depth = std::max(s.depth, level);
  }
  return s;
}

}  // namespace qcp
