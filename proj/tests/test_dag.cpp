#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcp/dag.hpp"
#include "qcp/generators.hpp"

using namespace qcp;
using qcp::testing::chain_circuit;
using qcp::testing::dependency_cone;
using qcp::testing::worked_example_circuit;

namespace {

QubitSet deps_of(const DependencyMap& m, int gate) {
  REQUIRE(m.mapped(gate));
  return *m.deps[static_cast<std::size_t>(gate)];
}

}  // namespace

TEST_CASE("dag of the empty circuit has sources only") {
  CircuitDag dag = build_dag(Circuit(3, {}));
  CHECK(dag.num_qubits() == 3);
  CHECK(dag.num_gates() == 0);
  for (int q = 0; q < 3; ++q) CHECK(dag.wire(q).empty());
}

TEST_CASE("dag wires of a single cx") {
  Circuit c(2, {Gate{"cx", {}, {0, 1}}});
  CircuitDag dag = build_dag(c);
  GateMask mask(1);
  CHECK(dag.wire(0) == std::vector<int>{0});
  CHECK(dag.wire(1) == std::vector<int>{0});
  auto succ = wire_successor(dag, NodeId::source(0), 0, mask);
  REQUIRE(succ.has_value());
  CHECK(*succ == NodeId::gate(0));
  CHECK(!wire_successor(dag, NodeId::gate(0), 0, mask).has_value());
  CHECK(!wire_successor(dag, NodeId::gate(0), 1, mask).has_value());
}

TEST_CASE("worked example wire chains match the figure structure") {
  CircuitDag dag = build_dag(worked_example_circuit());
  CHECK(dag.wire(0) == std::vector<int>{0});
  CHECK(dag.wire(1) == std::vector<int>{0, 4});
  CHECK(dag.wire(2) == std::vector<int>{1, 2, 4});
  CHECK(dag.wire(3) == std::vector<int>{1, 2, 3});
  CHECK(dag.wire(4) == std::vector<int>{3, 5});
  CHECK(dag.wire(5) == std::vector<int>{5});
}

TEST_CASE("wire successor skips masked gates") {
  Circuit c(1, {Gate{"h", {}, {0}}, Gate{"h", {}, {0}}, Gate{"h", {}, {0}}});
  CircuitDag dag = build_dag(c);
  GateMask mask(3);
  CHECK(*wire_successor(dag, NodeId::source(0), 0, mask) == NodeId::gate(0));
  mask.add(0);
  CHECK(*wire_successor(dag, NodeId::source(0), 0, mask) == NodeId::gate(1));
  mask.add(1);
  mask.add(2);
  CHECK(!wire_successor(dag, NodeId::source(0), 0, mask).has_value());
}

TEST_CASE("wire successor rejects non-incident wires") {
  Circuit c(3, {Gate{"cx", {}, {0, 1}}});
  CircuitDag dag = build_dag(c);
  GateMask mask(1);
  CHECK_THROWS_AS(wire_successor(dag, NodeId::gate(0), 2, mask),
                  std::invalid_argument);
  CHECK_THROWS_AS(wire_successor(dag, NodeId::source(0), 1, mask),
                  std::invalid_argument);
}

TEST_CASE("worked example dependency sets at k=4") {
  CircuitDag dag = build_dag(worked_example_circuit());
  DependencyMap m = propagate_dependencies(dag, GateMask(6), 4);
  CHECK(deps_of(m, 0) == QubitSet{0, 1});
  CHECK(deps_of(m, 1) == QubitSet{2, 3});
  CHECK(deps_of(m, 2) == QubitSet{2, 3});
  CHECK(deps_of(m, 3) == QubitSet{2, 3, 4});
  CHECK(deps_of(m, 4) == QubitSet{0, 1, 2, 3});
  CHECK(deps_of(m, 5) == QubitSet{2, 3, 4, 5});
}

TEST_CASE("single-qubit circuits depend only on their own wire") {
  Circuit c(3, {Gate{"h", {}, {0}}, Gate{"h", {}, {1}}, Gate{"h", {}, {1}},
                Gate{"x", {}, {2}}});
  CircuitDag dag = build_dag(c);
  for (int k = 1; k <= 3; ++k) {
    DependencyMap m = propagate_dependencies(dag, GateMask(4), k);
    CHECK(deps_of(m, 0) == QubitSet{0});
    CHECK(deps_of(m, 1) == QubitSet{1});
    CHECK(deps_of(m, 2) == QubitSet{1});
    CHECK(deps_of(m, 3) == QubitSet{2});
  }
}

TEST_CASE("propagation stops past the truncation bound") {
  CircuitDag dag = build_dag(chain_circuit());
  DependencyMap m = propagate_dependencies(dag, GateMask(3), 2);
  CHECK(m.mapped(0));
  CHECK(deps_of(m, 0) == QubitSet{0, 1});
  CHECK(!m.mapped(1));
  CHECK(!m.mapped(2));
}

TEST_CASE("full mask gives empty dependency map") {
  Circuit c = worked_example_circuit();
  CircuitDag dag = build_dag(c);
  GateMask mask(c.num_gates());
  for (int i = 0; i < c.num_gates(); ++i) mask.add(i);
  DependencyMap m = propagate_dependencies(dag, mask, 4);
  for (int i = 0; i < c.num_gates(); ++i) CHECK(!m.mapped(i));
  for (const auto& f : m.frontier_gate) CHECK(!f.has_value());
  for (const auto& f : frontier(dag, mask)) CHECK(!f.has_value());
}

TEST_CASE("frontier tracks the first unmasked gate per wire") {
  Circuit c = worked_example_circuit();
  CircuitDag dag = build_dag(c);
  GateMask mask(c.num_gates());
  auto front = frontier(dag, mask);
  CHECK(front[0] == 0);
  CHECK(front[1] == 0);
  CHECK(front[2] == 1);
  CHECK(front[3] == 1);
  CHECK(front[4] == 3);
  CHECK(front[5] == 5);

  // After removing the best first partition {g0, g1, g2, g4}.
  for (int i : {0, 1, 2, 4}) mask.add(i);
  front = frontier(dag, mask);
  CHECK(!front[0].has_value());
  CHECK(!front[1].has_value());
  CHECK(!front[2].has_value());
  CHECK(front[3] == 3);
  CHECK(front[4] == 3);
  CHECK(front[5] == 5);

  // Residual dependencies restart from the frontier.
  DependencyMap m = propagate_dependencies(dag, mask, 4);
  CHECK(deps_of(m, 3) == QubitSet{3, 4});
  CHECK(deps_of(m, 5) == QubitSet{3, 4, 5});
}

TEST_CASE("dependency sets match the reverse-reachability oracle") {
  std::vector<std::pair<Circuit, int>> cases;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 2 + static_cast<int>(seed % 6);
    int g = static_cast<int>(seed * 7 % 50);
    cases.emplace_back(gen_random(n, g, 0.6, seed), 2 + static_cast<int>(seed % 4));
  }
  cases.emplace_back(worked_example_circuit(), 4);
  cases.emplace_back(chain_circuit(), 2);

  for (const auto& [c, k] : cases) {
    CircuitDag dag = build_dag(c);
    GateMask mask(c.num_gates());
    // Mask a deterministic sprinkling of prefix gates to exercise residual
    // propagation; keep per-wire prefixes so the mask resembles real use.
    for (int i = 0; i < c.num_gates() / 3; ++i) mask.add(i);
    DependencyMap m = propagate_dependencies(dag, mask, k);
    for (int i = 0; i < c.num_gates(); ++i) {
      if (mask.contains(i)) {
        CHECK(!m.mapped(i));
        continue;
      }
      QubitSet cone = dependency_cone(c, mask, i);
      if (cone.size() <= k) {
        REQUIRE(m.mapped(i));
        CHECK(deps_of(m, i) == cone);
      } else {
        CHECK(!m.mapped(i));
      }
    }
  }
}

TEST_CASE("dependency sets contain their wire predecessors' sets") {
  Circuit c = gen_random(6, 50, 0.5, 99);
  CircuitDag dag = build_dag(c);
  GateMask mask(c.num_gates());
  DependencyMap m = propagate_dependencies(dag, mask, 4);
  for (int i = 0; i < c.num_gates(); ++i) {
    if (!m.mapped(i)) continue;
    QubitSet own = QubitSet::from_vector(c.gate(i).qubits);
    CHECK(own.is_subset_of(deps_of(m, i)));
    for (int q : c.gate(i).qubits) {
      // previous unmasked gate on wire q
      const auto& chain = dag.wire(q);
      int prev = -1;
      for (int gate : chain) {
        if (gate == i) break;
        if (!mask.contains(gate)) prev = gate;
      }
      if (prev >= 0 && m.mapped(prev))
        CHECK(deps_of(m, prev).is_subset_of(deps_of(m, i)));
    }
  }
}

TEST_CASE("raising k only adds mapped gates, never changes existing sets") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Circuit c = gen_random(7, 40, 0.6, seed + 1000);
    CircuitDag dag = build_dag(c);
    GateMask mask(c.num_gates());
    for (int k = 1; k < 6; ++k) {
      DependencyMap lo = propagate_dependencies(dag, mask, k);
      DependencyMap hi = propagate_dependencies(dag, mask, k + 1);
      for (int i = 0; i < c.num_gates(); ++i) {
        if (lo.mapped(i)) {
          REQUIRE(hi.mapped(i));
          CHECK(deps_of(lo, i) == deps_of(hi, i));
        }
      }
    }
  }
}

TEST_CASE("dag and dependency map serialize to json") {
  Circuit c = worked_example_circuit();
  CircuitDag dag = build_dag(c);
  nlohmann::json jd = dag_to_json(dag);
  CHECK(jd["num_qubits"] == 6);
  CHECK(jd["num_gates"] == 6);
  CHECK(jd["wires"][2] == nlohmann::json({1, 2, 4}));
  CHECK(jd["nodes"].size() == 12);

  DependencyMap m = propagate_dependencies(dag, GateMask(6), 4);
  nlohmann::json jm = dependency_map_to_json(m);
  CHECK(jm["deps"][3] == nlohmann::json({2, 3, 4}));
  CHECK(jm["frontier"][4] == 3);
}
