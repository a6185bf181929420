#include "qcp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qcp/baselines.hpp"
#include "qcp/generators.hpp"
#include "qcp/gtqcp.hpp"
#include "qcp/postprocess.hpp"

namespace qcp {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

long parse_long(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed generator spec '" + spec +
                                "': bad integer '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed generator spec '" + spec +
                                "': bad number '" + s + "'");
  }
}

}  // namespace

Circuit make_circuit_from_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw std::invalid_argument("empty generator spec");
  const std::string& kind = parts[0];
  if (kind == "qft") {
    if (parts.size() != 2)
      throw std::invalid_argument("malformed generator spec '" + spec +
                                  "': expected qft:N");
    return gen_qft(static_cast<int>(parse_long(parts[1], spec)));
  }
  if (kind == "tfim") {
    if (parts.size() != 3)
      throw std::invalid_argument("malformed generator spec '" + spec +
                                  "': expected tfim:N:STEPS");
    return gen_tfim(static_cast<int>(parse_long(parts[1], spec)),
                    static_cast<int>(parse_long(parts[2], spec)));
  }
  if (kind == "random") {
    if (parts.size() != 5)
      throw std::invalid_argument("malformed generator spec '" + spec +
                                  "': expected random:N:G:FRACTION:SEED");
    return gen_random(static_cast<int>(parse_long(parts[1], spec)),
                      static_cast<int>(parse_long(parts[2], spec)),
                      parse_double(parts[3], spec),
                      static_cast<std::uint64_t>(parse_long(parts[4], spec)));
  }
  throw std::invalid_argument("malformed generator spec '" + spec +
                              "': unknown generator '" + kind + "'");
}

std::vector<NamedCircuit> structured_desk_suite() {
  std::vector<NamedCircuit> suite;
  for (int n : {5, 10, 20})
    suite.push_back({"qft:" + std::to_string(n), gen_qft(n)});
  for (int n : {4, 8, 16, 32})
    suite.push_back({"tfim:" + std::to_string(n) + ":100", gen_tfim(n, 100)});
  return suite;
}

std::vector<NamedCircuit> desk_suite() {
  auto suite = structured_desk_suite();
  suite.push_back({"random:10:170:0.5:1001", gen_random(10, 170, 0.5, 1001)});
  suite.push_back({"random:9:200:0.5:1002", gen_random(9, 200, 0.5, 1002)});
  return suite;
}

PartitionedCircuit run_method(const std::string& method, const Circuit& c, int k) {
  if (method == "gtqcp") return gtqcp_partition(c, k);
  if (method == "quick") return quick_partition(c, k);
  if (method == "scan") return scan_partition(c, k);
  throw std::invalid_argument("unknown method '" + method +
                              "' (expected gtqcp, quick, or scan)");
}

std::string bench_csv_header() {
  return "circuit,method,k,n,g,blocks_raw,blocks_merged,time_s,reps,status";
}

std::string bench_csv_row(const BenchRecord& r) {
  char time_buf[32];
  std::snprintf(time_buf, sizeof(time_buf), "%.6f", r.time_s);
  std::string status = r.status;
  for (char& ch : status)
    if (ch == ',' || ch == '\n') ch = ';';
  std::ostringstream out;
  out << r.circuit << ',' << r.method << ',' << r.k << ',' << r.n << ',' << r.g
      << ',' << r.blocks_raw << ',' << r.blocks_merged << ',' << time_buf << ','
      << r.reps << ',' << status;
  return out.str();
}

CellResult run_cell(const std::string& circuit_name, const Circuit& c,
                    const std::string& method, int k, int reps) {
  CellResult result;
  BenchRecord& rec = result.record;
  rec.circuit = circuit_name;
  rec.method = method;
  rec.k = k;
  rec.n = c.num_qubits();
  rec.g = c.num_gates();
  rec.reps = reps;

  std::vector<double> times;
  try {
    for (int r = 0; r < reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      PartitionedCircuit p = run_method(method, c, k);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(stop - start).count());
      if (r == 0) result.raw = std::move(p);
    }
  } catch (const std::exception& e) {
    rec.status = std::string("error:") + e.what();
    return result;
  }

  std::sort(times.begin(), times.end());
  rec.time_s = times.size() % 2 == 1
                   ? times[times.size() / 2]
                   : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);

  result.merged = merge_adjacent(result.raw);
  rec.blocks_raw = static_cast<int>(result.raw.blocks.size());
  rec.blocks_merged = static_cast<int>(result.merged.blocks.size());

  const bool ok = verify_partitioning(c, result.raw).valid &&
                  verify_partitioning(c, result.merged).valid;
  rec.status = ok ? "ok" : "verify-failed";
  return result;
}

}  // namespace qcp
