#include "qcp/postprocess.hpp"

#include <algorithm>

namespace qcp {
namespace {

Block merge_blocks(const Block& a, const Block& b) {
  Block out;
  out.qubits = a.qubits;
  out.qubits.merge(b.qubits);
  std::size_t i = 0, j = 0;
  while (i < a.origin_indices.size() || j < b.origin_indices.size()) {
    bool take_a = j >= b.origin_indices.size() ||
                  (i < a.origin_indices.size() &&
                   a.origin_indices[i] < b.origin_indices[j]);
    if (take_a) {
      out.origin_indices.push_back(a.origin_indices[i]);
      if (i < a.gates.size()) out.gates.push_back(a.gates[i]);
      ++i;
    } else {
      out.origin_indices.push_back(b.origin_indices[j]);
      if (j < b.gates.size()) out.gates.push_back(b.gates[j]);
      ++j;
    }
  }
  return out;
}

}  // namespace

PartitionedCircuit merge_adjacent(const PartitionedCircuit& p) {
  PartitionedCircuit out = p;
  auto& blocks = out.blocks;
  // A merge at position i never creates a new opportunity left of i, so one
  // forward sweep that retries the current position is the leftmost-first
  // fixed point.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool merged = true;
    while (merged) {
      merged = false;
      QubitSet between;
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        if (!blocks[j].qubits.intersects(between) &&
            blocks[i].qubits.union_size(blocks[j].qubits) <= out.k) {
          blocks[i] = merge_blocks(blocks[i], blocks[j]);
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
          break;
        }
        between.merge(blocks[j].qubits);
        if (out.num_qubits > 0 && between.size() >= out.num_qubits) break;
      }
    }
  }
  return out;
}

VerifyReport verify_partitioning(const Circuit& c, const PartitionedCircuit& p) {
  VerifyReport report;
  auto violate = [&report](VerifyViolation v) {
    report.valid = false;
    report.violations.push_back(std::move(v));
  };

  const int g = c.num_gates();

  // (1) every original gate index in exactly one block
  std::vector<int> seen(static_cast<std::size_t>(g), 0);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (int idx : p.blocks[b].origin_indices) {
      if (idx < 0 || idx >= g) {
        violate({"coverage", static_cast<int>(b), -1,
                 "gate index " + std::to_string(idx) + " out of range"});
        continue;
      }
      if (++seen[static_cast<std::size_t>(idx)] == 2)
        violate({"coverage", static_cast<int>(b), -1,
                 "gate " + std::to_string(idx) + " appears in more than one block"});
    }
  }
  for (int i = 0; i < g; ++i)
    if (seen[static_cast<std::size_t>(i)] == 0)
      violate({"coverage", -1, -1,
               "gate " + std::to_string(i) + " missing from every block"});

  // (2) block size bound and gate confinement
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const Block& blk = p.blocks[b];
    if (blk.qubits.size() > p.k)
      violate({"block-size", static_cast<int>(b), -1,
               "block touches " + std::to_string(blk.qubits.size()) +
                   " qubits, k = " + std::to_string(p.k)});
    for (int idx : blk.origin_indices) {
      if (idx < 0 || idx >= g) continue;
      for (int q : c.gate(idx).qubits)
        if (!blk.qubits.contains(q))
          violate({"gate-outside-qubits", static_cast<int>(b), q,
                   "gate " + std::to_string(idx) + " touches qubit " +
                       std::to_string(q) + " outside the block"});
    }
  }

  // (4) ascending original order inside each block
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const auto& idx = p.blocks[b].origin_indices;
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i - 1] >= idx[i])
        violate({"block-gate-order", static_cast<int>(b), -1,
                 "gate " + std::to_string(idx[i]) + " follows " +
                     std::to_string(idx[i - 1]) + " out of order"});
  }

  // (3) flatten equivalence per wire
  std::vector<std::vector<int>> original(static_cast<std::size_t>(c.num_qubits()));
  for (int i = 0; i < g; ++i)
    for (int q : c.gate(i).qubits)
      original[static_cast<std::size_t>(q)].push_back(i);
  std::vector<std::vector<int>> flattened(static_cast<std::size_t>(c.num_qubits()));
  for (const Block& blk : p.blocks)
    for (int idx : blk.origin_indices) {
      if (idx < 0 || idx >= g) continue;
      for (int q : c.gate(idx).qubits)
        flattened[static_cast<std::size_t>(q)].push_back(idx);
    }
  for (int w = 0; w < c.num_qubits(); ++w) {
    const auto& expect = original[static_cast<std::size_t>(w)];
    const auto& got = flattened[static_cast<std::size_t>(w)];
    std::size_t upto = std::min(expect.size(), got.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (expect[i] != got[i]) {
        violate({"wire-order", -1, w,
                 "wire " + std::to_string(w) + " position " + std::to_string(i) +
                     ": expected gate " + std::to_string(expect[i]) +
                     ", found gate " + std::to_string(got[i])});
        break;
      }
    }
  }

  return report;
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"kind", v.kind},
                          {"block_index", v.block_index},
                          {"qubit", v.qubit},
                          {"detail", v.detail}});
  return {{"valid", report.valid}, {"violations", violations}};
}

}  // namespace qcp
