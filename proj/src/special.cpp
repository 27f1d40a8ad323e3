#include "squeeze/special.hpp"

#include <array>
#include <cmath>

namespace squeeze {

namespace {

constexpr std::size_t kTableMax = 150;

struct FactorialTable {
  std::array<double, kTableMax + 1> log_fact{};
  std::array<double, kTableMax + 1> inv_sqrt{};

  FactorialTable() {
    double f = 1.0;
    for (std::size_t n = 0; n <= kTableMax; ++n) {
      if (n > 0) f *= static_cast<double>(n);
      log_fact[n] = std::log(f);
      inv_sqrt[n] = 1.0 / std::sqrt(f);
    }
  }
};

const FactorialTable& table() {
  static const FactorialTable t;
  return t;
}

}  // namespace

double log_factorial(std::size_t n) {
  if (n <= kTableMax) return table().log_fact[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double inv_sqrt_factorial(std::size_t n) {
  if (n <= kTableMax) return table().inv_sqrt[n];
  return std::exp(-0.5 * log_factorial(n));
}

double vacuum_peak() { return std::pow(kPi, -0.25); }

}  // namespace squeeze
