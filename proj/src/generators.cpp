#include "qcp/generators.hpp"

#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qcp {
namespace {

// mt19937_64 output is fully specified by the standard; the helpers below
// avoid std::uniform_*_distribution, whose mapping is implementation-defined.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Circuit gen_qft(int n) {
  if (n < 1) throw std::invalid_argument("gen_qft requires n >= 1");
  std::vector<Gate> gates;
  for (int i = 0; i < n; ++i) {
    gates.push_back(Gate{"h", {}, {i}});
    for (int j = i + 1; j < n; ++j) {
      double angle = std::numbers::pi / static_cast<double>(1ull << (j - i));
      gates.push_back(Gate{"cp", {angle}, {j, i}});
    }
  }
  for (int i = 0; i < n / 2; ++i)
    gates.push_back(Gate{"swap", {}, {i, n - 1 - i}});
  return Circuit(n, std::move(gates));
}

Circuit gen_tfim(int n, int steps) {
  if (n < 2) throw std::invalid_argument("gen_tfim requires n >= 2");
  if (steps < 1) throw std::invalid_argument("gen_tfim requires steps >= 1");
  const double dt = 1.0 / static_cast<double>(steps);
  const double field_angle = 2.0 * dt;
  const double coupling_angle = -2.0 * dt;
  std::vector<Gate> gates;
  for (int s = 0; s < steps; ++s) {
    for (int q = 0; q < n; ++q) {
      gates.push_back(Gate{"rz", {field_angle}, {q}});
      gates.push_back(Gate{"rx", {field_angle}, {q}});
    }
    for (int i = 0; i + 1 < n; ++i) {
      gates.push_back(Gate{"cx", {}, {i, i + 1}});
      gates.push_back(Gate{"rz", {coupling_angle}, {i + 1}});
      gates.push_back(Gate{"cx", {}, {i, i + 1}});
    }
  }
  return Circuit(n, std::move(gates));
}

Circuit gen_random(int n, int g, double two_qubit_fraction, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random requires n >= 1");
  if (g < 0) throw std::invalid_argument("gen_random requires g >= 0");
  if (two_qubit_fraction < 0.0 || two_qubit_fraction > 1.0)
    throw std::invalid_argument("two_qubit_fraction outside [0,1]");
  if (n < 2 && two_qubit_fraction > 0.0)
    throw std::invalid_argument("two-qubit gates need n >= 2");

  std::mt19937_64 rng(seed);
  std::vector<Gate> gates;
  gates.reserve(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    if (unit_double(rng) < two_qubit_fraction) {
      int a = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
      int b = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n - 1)));
      if (b >= a) ++b;
      gates.push_back(Gate{"cx", {}, {a, b}});
    } else {
      int q = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
      switch (bounded(rng, 3)) {
        case 0:
          gates.push_back(Gate{"h", {}, {q}});
          break;
        case 1:
          gates.push_back(Gate{"x", {}, {q}});
          break;
        default:
          gates.push_back(
              Gate{"rz", {unit_double(rng) * 2.0 * std::numbers::pi}, {q}});
          break;
      }
    }
  }
  return Circuit(n, std::move(gates));
}

}  // namespace qcp
