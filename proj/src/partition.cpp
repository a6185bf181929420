#include "qcp/partition.hpp"

#include <algorithm>

namespace qcp {

Block make_block(const Circuit& c, std::vector<int> origin_indices) {
  std::sort(origin_indices.begin(), origin_indices.end());
  Block b;
  for (int idx : origin_indices) {
    const Gate& g = c.gate(idx);
    for (int q : g.qubits) b.qubits.insert(q);
    b.gates.push_back(g);
  }
  b.origin_indices = std::move(origin_indices);
  return b;
}

nlohmann::json partition_to_json(const PartitionedCircuit& p) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const Block& b : p.blocks)
    blocks.push_back({{"qubits", b.qubits.values()},
                      {"gate_indices", b.origin_indices}});
  return {{"k", p.k}, {"num_qubits", p.num_qubits}, {"blocks", blocks}};
}

PartitionedCircuit partition_from_json(const nlohmann::json& j, const Circuit& c) {
  PartitionedCircuit p;
  p.k = j.at("k").get<int>();
  p.num_qubits = j.at("num_qubits").get<int>();
  for (const auto& jb : j.at("blocks")) {
    Block b;
    b.qubits = QubitSet::from_vector(jb.at("qubits").get<std::vector<int>>());
    b.origin_indices = jb.at("gate_indices").get<std::vector<int>>();
    for (int idx : b.origin_indices)
      if (idx >= 0 && idx < c.num_gates()) b.gates.push_back(c.gate(idx));
    p.blocks.push_back(std::move(b));
  }
  return p;
}

Circuit block_circuit(const Block& b, int num_qubits) {
  return Circuit(num_qubits, b.gates);
}

}  // namespace qcp
