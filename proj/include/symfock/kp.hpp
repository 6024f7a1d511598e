#pragma once

#include <map>
#include <optional>
#include <utility>

#include "symfock/fock.hpp"

namespace symfock {

struct TensorKeyOrder {
  bool operator()(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b) const {
    ReverseLex rl;
    if (rl(a.first, b.first)) return true;
    if (rl(b.first, a.first)) return false;
    return rl(a.second, b.second);
  }
};

/// Element of B^(left) (x) B^(right) in the p-basis; no zero coefficients stored.
class TensorState {
 public:
  using Terms = std::map<std::pair<Partition, Partition>, TRational, TensorKeyOrder>;

  TensorState(int left_charge = 1, int right_charge = -1) : left_charge_(left_charge), right_charge_(right_charge) {}
  static TensorState tensor(const FockVector& left, const FockVector& right);

  int left_charge() const { return left_charge_; }
  int right_charge() const { return right_charge_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& left, const Partition& right, const TRational& c);
  TensorState& operator+=(const TensorState& o);
  TensorState& operator*=(const TRational& c);
  friend bool operator==(const TensorState& a, const TensorState& b);

 private:
  int left_charge_;
  int right_charge_;
  Terms terms_;
};

// sigma_t applied to both tensor factors.
TensorState sigma_t(const TensorState& s);

// Sum_a K+[a](0, tau1) (x) K-[-1-a](0, tau2) with K = Phi or Phi_t. The pairing
// a + b = -1 is the one dual to {K+[a], K-[b]} = delta_{a+b,-1}; the sum is
// finite, a in [-deg tau2, deg tau1 - 1].
TensorState omega_apply(const SymFunc& tau1, const SymFunc& tau2, bool deformed);

bool is_tau(const SymFunc& tau, bool deformed);

// Scans tau = s_lambda + c s_mu and then s_lambda + s_mu + c s_nu over Schur
// functions of degree <= degree_bound (lambda < mu < nu in weight-then-reverse-lex
// order, c in {1, -1, 2, -2}) and returns the first tau with nonzero Omega.
std::optional<SymFunc> search_negative_control(int degree_bound);

}  // namespace symfock
