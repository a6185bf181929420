#pragma once

#include <string>
#include <vector>

#include "qcp/circuit.hpp"
#include "qcp/partition.hpp"

namespace qcp {

/// One benchmark cell: a circuit partitioned by one method at one k.
struct BenchRecord {
  std::string circuit;
  std::string method;
  int k = 0;
  int n = 0;
  int g = 0;
  int blocks_raw = 0;
  int blocks_merged = 0;
  double time_s = 0.0;  // median over repetitions, partition call only
  int reps = 0;
  std::string status;   // ok | verify-failed | error:<reason>
};

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r);

struct NamedCircuit {
  std::string name;
  Circuit circuit;
};

/// Builds a circuit from a generator spec: qft:N | tfim:N:STEPS |
/// random:N:G:FRACTION:SEED. Throws std::invalid_argument on malformed specs.
Circuit make_circuit_from_spec(const std::string& spec);

/// Desk-scale structured families: qft at 5/10/20 qubits and 100-step tfim at
/// 4/8/16/32 qubits.
std::vector<NamedCircuit> structured_desk_suite();

/// Structured families plus random stand-ins with QAOA-like and adder-like
/// gate mixes.
std::vector<NamedCircuit> desk_suite();

/// Dispatch by method name: gtqcp | quick | scan. Throws
/// std::invalid_argument for unknown names.
PartitionedCircuit run_method(const std::string& method, const Circuit& c, int k);

struct CellResult {
  BenchRecord record;
  PartitionedCircuit raw;
  PartitionedCircuit merged;
};

/// Runs one cell `reps` times, verifies raw and merged partitions, and
/// records the median wall time of the partition call alone.
CellResult run_cell(const std::string& circuit_name, const Circuit& c,
                    const std::string& method, int k, int reps);

}  // namespace qcp
