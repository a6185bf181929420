#pragma once

#include <cstdint>

#include "qcp/circuit.hpp"

namespace qcp {

/// Textbook quantum Fourier transform on n qubits: per target i an h gate
/// followed by controlled-phase gates cp(pi/2^(j-i)) from every control j > i,
/// then floor(n/2) final swaps. Deterministic.
Circuit gen_qft(int n);

/// First-order Trotterized transverse-field Ising model on a linear chain.
/// Each step applies an rz+rx layer on every qubit, then each nearest-neighbor
/// ZZ interaction as cx(i,i+1), rz(i+1), cx(i,i+1). Two-qubit gate count is
/// 2*(n-1)*steps. Deterministic.
Circuit gen_tfim(int n, int steps);

/// Random circuit of g gates: with probability two_qubit_fraction a cx on a
/// uniformly random distinct qubit pair, otherwise a random single-qubit gate
/// on a random qubit. Identical arguments give a bitwise-identical circuit on
/// every platform.
Circuit gen_random(int n, int g, double two_qubit_fraction, std::uint64_t seed);

}  // namespace qcp
