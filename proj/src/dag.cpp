#include "qcp/dag.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcp {

CircuitDag::CircuitDag(const Circuit& c) : num_qubits_(c.num_qubits()) {
  const int g = c.num_gates();
  wires_.resize(static_cast<std::size_t>(num_qubits_));
  gate_qubits_.resize(static_cast<std::size_t>(g));
  arity_offset_.resize(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    gate_qubits_[static_cast<std::size_t>(i)] = c.gate(i).qubits;
    arity_offset_[static_cast<std::size_t>(i)] = total_arity_;
    total_arity_ += c.gate(i).arity();
  }
  wire_pos_.assign(static_cast<std::size_t>(total_arity_), -1);
  for (int i = 0; i < g; ++i) {
    const auto& qs = gate_qubits_[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < qs.size(); ++a) {
      auto& chain = wires_[static_cast<std::size_t>(qs[a])];
      wire_pos_[static_cast<std::size_t>(arity_offset_[static_cast<std::size_t>(i)]) + a] =
          static_cast<int>(chain.size());
      chain.push_back(i);
    }
  }
}

int CircuitDag::wire_slot(int gate, int w) const {
  const auto& qs = gate_qubits_[static_cast<std::size_t>(gate)];
  for (std::size_t a = 0; a < qs.size(); ++a)
    if (qs[a] == w) return static_cast<int>(a);
  return -1;
}

int CircuitDag::wire_position(int gate, int w) const {
  int slot = wire_slot(gate, w);
  if (slot < 0)
    throw std::invalid_argument("gate " + std::to_string(gate) +
                                " is not on wire " + std::to_string(w));
  return wire_pos_[static_cast<std::size_t>(arity_offset(gate) + slot)];
}

CircuitDag build_dag(const Circuit& c) { return CircuitDag(c); }

std::optional<NodeId> wire_successor(const CircuitDag& dag, NodeId node,
                                     int wire, const GateMask& mask) {
  if (wire < 0 || wire >= dag.num_qubits())
    throw std::invalid_argument("wire " + std::to_string(wire) + " out of range");
  int start;
  if (node.kind == NodeId::Kind::qubit_source) {
    if (node.index != wire)
      throw std::invalid_argument("source node " + std::to_string(node.index) +
                                  " is not on wire " + std::to_string(wire));
    start = 0;
  } else {
    start = dag.wire_position(node.index, wire) + 1;
  }
  const auto& chain = dag.wire(wire);
  for (std::size_t p = static_cast<std::size_t>(start); p < chain.size(); ++p)
    if (!mask.contains(chain[p])) return NodeId::gate(chain[p]);
  return std::nullopt;
}

DependencyMap propagate_dependencies(const CircuitDag& dag, const GateMask& mask,
                                     int k) {
  const int g = dag.num_gates();
  const int n = dag.num_qubits();
  DependencyMap out;
  out.deps.assign(static_cast<std::size_t>(g), std::nullopt);
  out.frontier_gate.assign(static_cast<std::size_t>(n), std::nullopt);

  // Previous unmasked gate per (gate, incident-wire slot); -1 for none.
  std::vector<int> prev(static_cast<std::size_t>(dag.total_arity()), -1);
  for (int w = 0; w < n; ++w) {
    int last = -1;
    for (int gate : dag.wire(w)) {
      if (mask.contains(gate)) continue;
      if (last < 0) out.frontier_gate[static_cast<std::size_t>(w)] = gate;
      prev[static_cast<std::size_t>(dag.arity_offset(gate) + dag.wire_slot(gate, w))] =
          last;
      last = gate;
    }
  }

  // Gate index order is a topological order, so one ascending pass suffices;
  // union is commutative, so the result matches any other visit order.
  std::vector<int> cur;
  std::vector<int> tmp;
  for (int i = 0; i < g; ++i) {
    if (mask.contains(i)) continue;
    const auto& qs = dag.gate_qubits(i);
    cur.assign(qs.begin(), qs.end());
    std::sort(cur.begin(), cur.end());
    bool ok = true;
    for (std::size_t a = 0; a < qs.size(); ++a) {
      int p = prev[static_cast<std::size_t>(dag.arity_offset(i)) + a];
      if (p < 0) continue;
      const auto& pdeps = out.deps[static_cast<std::size_t>(p)];
      if (!pdeps) {
        ok = false;
        break;
      }
      tmp.clear();
      std::set_union(cur.begin(), cur.end(), pdeps->begin(), pdeps->end(),
                     std::back_inserter(tmp));
      cur.swap(tmp);
      if (static_cast<int>(cur.size()) > k) {
        ok = false;
        break;
      }
    }
    if (ok && static_cast<int>(cur.size()) <= k)
      out.deps[static_cast<std::size_t>(i)] = QubitSet::from_vector(cur);
  }
  return out;
}

std::vector<std::optional<int>> frontier(const CircuitDag& dag,
                                         const GateMask& mask) {
  std::vector<std::optional<int>> out(static_cast<std::size_t>(dag.num_qubits()),
                                      std::nullopt);
  for (int w = 0; w < dag.num_qubits(); ++w) {
    for (int gate : dag.wire(w)) {
      if (!mask.contains(gate)) {
        out[static_cast<std::size_t>(w)] = gate;
        break;
      }
    }
  }
  return out;
}

nlohmann::json dag_to_json(const CircuitDag& dag) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int q = 0; q < dag.num_qubits(); ++q)
    nodes.push_back({{"kind", "source"}, {"index", q}});
  for (int i = 0; i < dag.num_gates(); ++i)
    nodes.push_back({{"kind", "gate"}, {"index", i}});
  nlohmann::json wires = nlohmann::json::array();
  for (int q = 0; q < dag.num_qubits(); ++q) wires.push_back(dag.wire(q));
  return {{"num_qubits", dag.num_qubits()},
          {"num_gates", dag.num_gates()},
          {"nodes", nodes},
          {"wires", wires}};
}

nlohmann::json dependency_map_to_json(const DependencyMap& map) {
  nlohmann::json deps = nlohmann::json::array();
  for (const auto& d : map.deps) {
    if (d)
      deps.push_back(d->values());
    else
      deps.push_back(nullptr);
  }
  nlohmann::json front = nlohmann::json::array();
  for (const auto& f : map.frontier_gate) {
    if (f)
      front.push_back(*f);
    else
      front.push_back(nullptr);
  }
  return {{"deps", deps}, {"frontier", front}};
}

}  // namespace qcp
