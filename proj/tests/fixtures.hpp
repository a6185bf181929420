#pragma once

#include "qcp/circuit.hpp"

namespace qcp::testing {

/// Six-qubit worked example shared by the dependency and enumeration
/// fixtures. Wire chains:
///   q0: [0]      q1: [0,4]    q2: [1,2,4]
///   q3: [1,2,3]  q4: [3,5]    q5: [5]
/// With k = 4 the dependency sets are
///   g0 {0,1}, g1 {2,3}, g2 {2,3}, g3 {2,3,4}, g4 {0,1,2,3}, g5 {2,3,4,5}.
inline Circuit worked_example_circuit() {
  return Circuit(6, {
                        Gate{"cx", {}, {0, 1}},  // g0
                        Gate{"cx", {}, {2, 3}},  // g1
                        Gate{"cx", {}, {2, 3}},  // g2
                        Gate{"cx", {}, {3, 4}},  // g3
                        Gate{"cx", {}, {1, 2}},  // g4
                        Gate{"cx", {}, {4, 5}},  // g5
                    });
}

/// cx chain used by several operation examples.
inline Circuit chain_circuit() {
  return Circuit(4, {
                        Gate{"cx", {}, {0, 1}},
                        Gate{"cx", {}, {1, 2}},
                        Gate{"cx", {}, {2, 3}},
                    });
}

}  // namespace qcp::testing
