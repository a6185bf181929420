#include <doctest.h>

#include <stdexcept>

#include "qcp/circuit.hpp"
#include "qcp/generators.hpp"

using namespace qcp;

TEST_CASE("circuit construction validates gates") {
  CHECK_NOTHROW(Circuit(2, {Gate{"cx", {}, {0, 1}}}));
  CHECK_THROWS_AS(Circuit(2, {Gate{"cx", {}, {0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(2, {Gate{"cx", {}, {0, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(2, {Gate{"h", {}, {-1}}}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(2, {Gate{"h", {}, {}}}), std::invalid_argument);
}

TEST_CASE("gate signatures cover the supported set") {
  CHECK(gate_signature("cx")->arity == 2);
  CHECK(gate_signature("cx")->num_params == 0);
  CHECK(gate_signature("rz")->num_params == 1);
  CHECK(gate_signature("u3")->num_params == 3);
  CHECK(gate_signature("ccx")->arity == 3);
  CHECK(gate_signature("cu1")->arity == 2);
  CHECK(!gate_signature("frobnicate"));
}

TEST_CASE("stats of the empty circuit") {
  CircuitStats s = stats(Circuit(3, {}));
  CHECK(s.num_qubits == 3);
  CHECK(s.total_gates == 0);
  CHECK(s.two_qubit_gates == 0);
  CHECK(s.depth == 0);
}

TEST_CASE("stats counts arity-2 gates and wire depth") {
  // Expected counts derived from the generator formulas: 2(n-1)*steps for the
  // tfim chain, n(n-1)/2 + floor(n/2) for qft.
  CHECK(stats(gen_tfim(4, 1)).two_qubit_gates == 6);
  CHECK(stats(gen_qft(5)).two_qubit_gates == 12);

  Circuit parallel(4, {Gate{"h", {}, {0}}, Gate{"h", {}, {1}},
                       Gate{"h", {}, {2}}, Gate{"h", {}, {3}}});
  CHECK(stats(parallel).depth == 1);

  Circuit serial(1, {Gate{"h", {}, {0}}, Gate{"h", {}, {0}}, Gate{"h", {}, {0}}});
  CHECK(stats(serial).depth == 3);

  Circuit mixed(3, {Gate{"cx", {}, {0, 1}}, Gate{"cx", {}, {1, 2}},
                    Gate{"h", {}, {0}}});
  CircuitStats s = stats(mixed);
  CHECK(s.two_qubit_gates == 2);
  CHECK(s.depth == 2);
  CHECK(s.depth <= s.total_gates);
}

TEST_CASE("structural equality tolerates small parameter drift") {
  Circuit a(1, {Gate{"rz", {1.0}, {0}}});
  Circuit b(1, {Gate{"rz", {1.0 + 1e-13}, {0}}});
  Circuit c(1, {Gate{"rz", {1.0 + 1e-9}, {0}}});
  CHECK(structurally_equal(a, b, 1e-12));
  CHECK(!structurally_equal(a, c, 1e-12));
}
