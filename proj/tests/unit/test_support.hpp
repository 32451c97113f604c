#pragma once

#include <random>

#include "ua/algebra.hpp"

namespace test {

/// meet semilattice on the chain 0 < 1 < ... < n-1
inline ua::FiniteAlgebra semilattice(int n) {
  ua::Table t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = std::min(x, y);
  return ua::FiniteAlgebra("SL" + std::to_string(n), n, ua::Signature({{"meet", 2}}), {t});
}

/// one unary and one binary operation filled from a seeded generator
inline ua::FiniteAlgebra random_algebra(int n, unsigned seed) {
  std::mt19937 rng(seed);
  ua::Table u(n), b(static_cast<std::size_t>(n) * n);
  for (int& v : u) v = static_cast<int>(rng() % n);
  for (int& v : b) v = static_cast<int>(rng() % n);
  return ua::FiniteAlgebra("R" + std::to_string(n), n, ua::Signature({{"g", 1}, {"f", 2}}), {u, b});
}

}  // namespace test
