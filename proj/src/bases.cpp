#include "symfock/bases.hpp"

#include <deque>
#include <mutex>

#include "symfock/determinant.hpp"
#include "symfock/error.hpp"

namespace symfock {

namespace {

// Append-only cache of a recursively defined sequence. References handed out
// stay valid because std::deque never relocates existing elements.
class SequenceCache {
 public:
  using Step = std::function<SymFunc(int, const std::deque<SymFunc>&)>;
  explicit SequenceCache(Step step) : step_(std::move(step)) {}

  const SymFunc& get(int k) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= k) values_.push_back(step_(static_cast<int>(values_.size()), values_));
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  Step step_;
  std::deque<SymFunc> values_;
  std::mutex mutex_;
};

const SymFunc& zero_symfunc() {
  static const SymFunc zero;
  return zero;
}

}  // namespace

const SymFunc& complete_h(int k) {
  static SequenceCache cache([](int n, const std::deque<SymFunc>& prev) {
    if (n == 0) return SymFunc(1);
    SymFunc acc;
    for (int i = 1; i <= n; ++i) acc += prev[static_cast<std::size_t>(n - i)].times_monomial(Partition({i}));
    return acc * TRational(rational(1, n));
  });
  return k < 0 ? zero_symfunc() : cache.get(k);
}

const SymFunc& elementary_e(int k) {
  static SequenceCache cache([](int n, const std::deque<SymFunc>& prev) {
    if (n == 0) return SymFunc(1);
    SymFunc acc;
    for (int i = 1; i <= n; ++i) {
      SymFunc term = prev[static_cast<std::size_t>(n - i)].times_monomial(Partition({i}));
      if (i % 2) acc += term;
      else acc -= term;
    }
    return acc * TRational(rational(1, n));
  });
  return k < 0 ? zero_symfunc() : cache.get(k);
}

const SymFunc& q_series_coefficient(int k) {
  static SequenceCache cache([](int n, const std::deque<SymFunc>&) {
    SymFunc acc;
    for (int s = 0; s <= n; ++s) {
      TRational w(TPolynomial::monomial(s % 2 ? -1 : 1, s));
      acc += (complete_h(n - s) * elementary_e(s)) * w;
    }
    return acc;
  });
  return k < 0 ? zero_symfunc() : cache.get(k);
}

SymFunc hall_littlewood_row(int k) {
  if (k < 0) throw InvalidArgument("negative row length");
  if (k == 0) return SymFunc(1);
  return q_series_coefficient(k) * one_minus_t_pow(1).inverse();
}

namespace {

SymFunc toeplitz_det(const std::vector<int>& rows, const SymFunc& (*entry)(int)) {
  const std::size_t n = rows.size();
  return determinant<SymFunc>(n, [&](std::size_t i, std::size_t j) -> std::optional<SymFunc> {
    const int idx = rows[i] - static_cast<int>(i) + static_cast<int>(j);
    if (idx < 0) return std::nullopt;
    return entry(idx);
  });
}

}  // namespace

SymFunc schur_jacobi_trudi(const Partition& lambda) { return toeplitz_det(lambda.parts(), &complete_h); }

SymFunc dual_schur_det(const Partition& lambda) { return toeplitz_det(lambda.parts(), &q_series_coefficient); }

SymFunc jacobi_trudi_tuple(const std::vector<int>& mu) { return toeplitz_det(mu, &complete_h); }

}  // namespace symfock
