#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace symfock {

/// Determinant over a commutative ring by row-wise Laplace expansion with
/// memoized minors (O(2^n n) ring products). `entry` returns nullopt for a
/// zero entry. Supports n <= 20.
template <class Ring>
Ring determinant(std::size_t n, const std::function<std::optional<Ring>(std::size_t, std::size_t)>& entry) {
  if (n == 0) return Ring(1);
  std::vector<std::vector<std::optional<Ring>>> cells(n, std::vector<std::optional<Ring>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i][j] = entry(i, j);

  // minor[mask] = determinant of the last popcount(mask) rows restricted to
  // the columns in mask.
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  std::vector<std::optional<Ring>> minor(std::size_t(1) << n);
  minor[0] = Ring(1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    const std::size_t row = n - k;
    Ring acc(0);
    bool any = false;
    int sign_index = 0;  // position of column j among set bits of mask
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const auto& sub = minor[mask & ~(1u << j)];
      const auto& cell = cells[row][j];
      if (cell && sub) {
        Ring term = *cell * *sub;
        if (sign_index % 2) acc -= term;
        else acc += term;
        any = true;
      }
      ++sign_index;
    }
    if (any) minor[mask] = std::move(acc);
    if (mask == full) break;
  }
  return minor[full] ? *minor[full] : Ring(0);
}

}  // namespace symfock
