#include <doctest.h>

#include <stdexcept>

#include "qcp/bench.hpp"
#include "qcp/circuit.hpp"

using namespace qcp;

TEST_CASE("generator specs parse or reject") {
  CHECK(make_circuit_from_spec("qft:5").num_qubits() == 5);
  CHECK(make_circuit_from_spec("tfim:4:2").num_qubits() == 4);
  CHECK(make_circuit_from_spec("random:5:30:0.5:7").num_gates() == 30);
  CHECK_THROWS_AS(make_circuit_from_spec("qft"), std::invalid_argument);
  CHECK_THROWS_AS(make_circuit_from_spec("qft:x"), std::invalid_argument);
  CHECK_THROWS_AS(make_circuit_from_spec("tfim:4"), std::invalid_argument);
  CHECK_THROWS_AS(make_circuit_from_spec("random:5:30:0.5"), std::invalid_argument);
  CHECK_THROWS_AS(make_circuit_from_spec("nope:3"), std::invalid_argument);
}

TEST_CASE("csv schema is stable") {
  CHECK(bench_csv_header() ==
        "circuit,method,k,n,g,blocks_raw,blocks_merged,time_s,reps,status");
  BenchRecord r;
  r.circuit = "qft:5";
  r.method = "gtqcp";
  r.k = 4;
  r.n = 5;
  r.g = 16;
  r.blocks_raw = 3;
  r.blocks_merged = 2;
  r.time_s = 0.001234567;
  r.reps = 5;
  r.status = "ok";
  CHECK(bench_csv_row(r) == "qft:5,gtqcp,4,5,16,3,2,0.001235,5,ok");
}

TEST_CASE("run_cell verifies and reports deterministic columns") {
  Circuit c = make_circuit_from_spec("tfim:4:3");
  CellResult a = run_cell("tfim:4:3", c, "gtqcp", 3, 3);
  CellResult b = run_cell("tfim:4:3", c, "gtqcp", 3, 3);
  CHECK(a.record.status == "ok");
  CHECK(a.record.blocks_merged <= a.record.blocks_raw);
  CHECK(a.record.blocks_raw == b.record.blocks_raw);
  CHECK(a.record.blocks_merged == b.record.blocks_merged);
  CHECK(a.record.g == c.num_gates());
  CHECK(partition_to_json(a.raw) == partition_to_json(b.raw));
}

TEST_CASE("run_cell reports errors as row status") {
  Circuit c(3, {Gate{"ccx", {}, {0, 1, 2}}});
  CellResult r = run_cell("ccx", c, "gtqcp", 2, 1);
  CHECK(r.record.status.rfind("error:", 0) == 0);
}

TEST_CASE("desk suites have the documented shape") {
  auto structured = structured_desk_suite();
  REQUIRE(structured.size() == 7);
  CHECK(structured[0].name == "qft:5");
  CHECK(structured[6].name == "tfim:32:100");
  CHECK(structured[6].circuit.num_qubits() == 32);
  auto full = desk_suite();
  CHECK(full.size() == 9);
}

TEST_CASE("run_method rejects unknown names") {
  Circuit c = make_circuit_from_spec("qft:3");
  CHECK_THROWS_AS(run_method("magic", c, 2), std::invalid_argument);
}
