#pragma once

#include <string>

#include "qcp/circuit.hpp"

namespace qcp {

/// Parses an OpenQASM 2.0 program with a single quantum register into a
/// Circuit. Supported statements: the OPENQASM header, include, qreg, creg
/// (ignored), barrier (ignored), measure (ignored), and applications of the
/// gates listed in gate_signature(). Register qubit q[i] maps to index i.
/// Throws ParseError with line/column on malformed or unsupported input.
Circuit parse_qasm(const std::string& text);

/// Renders a Circuit as OpenQASM 2.0. Gate order follows the list; parameters
/// use fixed-point formatting with 12 fractional digits, so emission is
/// byte-stable and parse_qasm(emit_qasm(c)) reproduces c. Throws
/// std::invalid_argument for gate names outside the supported set.
std::string emit_qasm(const Circuit& c);

}  // namespace qcp
