#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcp/baselines.hpp"
#include "qcp/bench.hpp"
#include "qcp/circuit.hpp"
#include "qcp/errors.hpp"
#include "qcp/generators.hpp"
#include "qcp/gtqcp.hpp"
#include "qcp/partition.hpp"
#include "qcp/postprocess.hpp"
#include "qcp/qasm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

qcp::Circuit circuit_from_spec_or_usage(const std::string& spec) {
  try {
    return qcp::make_circuit_from_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

qcp::Circuit load_circuit(const std::string& input_path,
                          const std::string& gen_spec) {
  if (!input_path.empty()) return qcp::parse_qasm(read_file(input_path));
  return circuit_from_spec_or_usage(gen_spec);
}

void print_stats(std::ostream& out, const qcp::CircuitStats& s) {
  out << "qubits=" << s.num_qubits << " gates=" << s.total_gates
      << " two_qubit_gates=" << s.two_qubit_gates << " depth=" << s.depth
      << "\n";
}

int cmd_gen(const std::string& spec, const std::string& output) {
  qcp::Circuit c = circuit_from_spec_or_usage(spec);
  std::string qasm = qcp::emit_qasm(c);
  if (output.empty()) {
    std::cout << qasm;
    print_stats(std::cerr, qcp::stats(c));
  } else {
    write_file(output, qasm);
    print_stats(std::cout, qcp::stats(c));
  }
  return kExitOk;
}

int cmd_partition(const std::string& input, const std::string& gen_spec, int k,
                  const std::string& method, const std::string& output,
                  const std::string& blocks_qasm_dir) {
  qcp::Circuit c = load_circuit(input, gen_spec);
  const auto start = std::chrono::steady_clock::now();
  qcp::PartitionedCircuit p = qcp::run_method(method, c, k);
  const auto stop = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(stop - start).count();

  if (!output.empty()) write_file(output, qcp::partition_to_json(p).dump(2) + "\n");
  if (!blocks_qasm_dir.empty()) {
    std::filesystem::create_directories(blocks_qasm_dir);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "block_%04zu.qasm", i);
      write_file((std::filesystem::path(blocks_qasm_dir) / name).string(),
                 qcp::emit_qasm(qcp::block_circuit(p.blocks[i], p.num_qubits)));
    }
  }
  char time_buf[32];
  std::snprintf(time_buf, sizeof(time_buf), "%.6f", seconds);
  std::cout << "blocks=" << p.blocks.size() << " time_s=" << time_buf << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& circuit_path, const std::string& partition_path) {
  qcp::Circuit c = qcp::parse_qasm(read_file(circuit_path));
  nlohmann::json j = nlohmann::json::parse(read_file(partition_path));
  qcp::PartitionedCircuit p = qcp::partition_from_json(j, c);
  qcp::VerifyReport report = qcp::verify_partitioning(c, p);
  std::cout << qcp::report_to_json(report).dump(2) << "\n";
  return report.valid ? kExitOk : kExitDomainError;
}

int cmd_bench(const std::string& suite, const std::vector<std::string>& circuits,
              const std::vector<int>& ks, const std::vector<std::string>& methods,
              int reps, const std::string& csv_path) {
  if (reps < 1) throw UsageError("--reps must be at least 1");
  std::vector<qcp::NamedCircuit> cells;
  if (!circuits.empty()) {
    for (const auto& spec : circuits)
      cells.push_back({spec, circuit_from_spec_or_usage(spec)});
  } else if (suite == "paper-desk") {
    cells = qcp::desk_suite();
  } else {
    throw UsageError("unknown suite '" + suite + "' (available: paper-desk)");
  }

  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw std::runtime_error("cannot write '" + csv_path + "'");
  }
  std::ostream& out = csv_path.empty() ? std::cout : csv;
  out << qcp::bench_csv_header() << "\n";

  bool any_invalid = false;
  for (const auto& named : cells) {
    for (const std::string& method : methods) {
      for (int k : ks) {
        qcp::CellResult cell =
            qcp::run_cell(named.name, named.circuit, method, k, reps);
        if (cell.record.status == "verify-failed") any_invalid = true;
        out << qcp::bench_csv_row(cell.record) << "\n";
        out.flush();
        if (!csv_path.empty())
          std::cout << qcp::bench_csv_row(cell.record) << "\n";
      }
    }
  }
  return any_invalid ? kExitDomainError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate-level quantum circuit partitioning toolkit"};
  app.require_subcommand(1);

  // gen
  std::string gen_spec;
  std::string gen_output;
  CLI::App* gen = app.add_subcommand(
      "gen", "Generate a benchmark circuit and write it as OpenQASM 2.0");
  gen->add_option("spec", gen_spec,
                  "Generator spec: qft:N | tfim:N:STEPS | random:N:G:FRAC:SEED")
      ->required();
  gen->add_option("-o,--output", gen_output, "Output QASM path (default stdout)");

  // partition
  std::string part_input, part_gen, part_method, part_output, part_blocks_dir;
  int part_k = 0;
  CLI::App* part = app.add_subcommand(
      "partition", "Partition a circuit into blocks of at most k qubits");
  auto* opt_input = part->add_option("-i,--input", part_input, "Input QASM file");
  part->add_option("--gen", part_gen, "Generator spec instead of a file")
      ->excludes(opt_input);
  part->add_option("-k,--k", part_k, "Maximum qubits per block")->required();
  part->add_option("-m,--method", part_method, "Partitioning method")
      ->required()
      ->check(CLI::IsMember({"gtqcp", "quick", "scan"}));
  part->add_option("-o,--output", part_output, "Output partition JSON path");
  part->add_option("--blocks-qasm", part_blocks_dir,
                   "Directory for per-block QASM files");

  // verify
  std::string ver_circuit, ver_partition;
  CLI::App* ver = app.add_subcommand(
      "verify", "Check a partition JSON against its source circuit");
  ver->add_option("-c,--circuit", ver_circuit, "Circuit QASM file")->required();
  ver->add_option("-p,--partition", ver_partition, "Partition JSON file")
      ->required();

  // bench
  std::string bench_suite = "paper-desk";
  std::vector<std::string> bench_circuits;
  std::vector<int> bench_ks{4, 5};
  std::vector<std::string> bench_methods{"gtqcp", "quick", "scan"};
  int bench_reps = 5;
  std::string bench_csv;
  CLI::App* bench = app.add_subcommand(
      "bench", "Measure block counts and wall time across circuits, methods, k");
  bench->add_option("--suite", bench_suite, "Built-in suite name")
      ->capture_default_str();
  bench->add_option("--circuits", bench_circuits,
                    "Generator specs overriding the suite")
      ->delimiter(',');
  bench->add_option("--k", bench_ks, "k values")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--methods", bench_methods, "Methods to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"gtqcp", "quick", "scan"}))
      ->capture_default_str();
  bench->add_option("--reps", bench_reps, "Repetitions per cell")
      ->capture_default_str();
  bench->add_option("--csv", bench_csv, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen(gen_spec, gen_output);
    if (part->parsed()) {
      if (part_input.empty() && part_gen.empty())
        throw UsageError("partition needs --input or --gen");
      return cmd_partition(part_input, part_gen, part_k, part_method,
                           part_output, part_blocks_dir);
    }
    if (ver->parsed()) return cmd_verify(ver_circuit, ver_partition);
    if (bench->parsed())
      return cmd_bench(bench_suite, bench_circuits, bench_ks, bench_methods,
                       bench_reps, bench_csv);
    return kExitUsageError;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}
