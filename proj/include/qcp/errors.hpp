#pragma once

#include <stdexcept>
#include <string>

namespace qcp {

/// QASM text could not be parsed; carries the 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A gate touches more qubits than the partition bound k allows.
class GateArityExceedsK : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Candidate-group generation exceeded its configured cap.
class ResourceLimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The exact oracle was asked for more work than its limits permit.
class LimitExceededError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qcp
