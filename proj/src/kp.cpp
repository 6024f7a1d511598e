#include "symfock/kp.hpp"

#include <vector>

#include "symfock/bases.hpp"
#include "symfock/error.hpp"
#include "symfock/parallel.hpp"

namespace symfock {

TensorState TensorState::tensor(const FockVector& left, const FockVector& right) {
  TensorState out(left.charge, right.charge);
  for (const auto& [l, cl] : left.body.terms())
    for (const auto& [r, cr] : right.body.terms()) out.add_term(l, r, cl * cr);
  return out;
}

void TensorState::add_term(const Partition& left, const Partition& right, const TRational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorState& TensorState::operator+=(const TensorState& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    left_charge_ = o.left_charge_;
    right_charge_ = o.right_charge_;
  } else if (left_charge_ != o.left_charge_ || right_charge_ != o.right_charge_) {
    throw InvalidArgument("tensor states of different charges");
  }
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

TensorState& TensorState::operator*=(const TRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v = v * c;
  return *this;
}

bool operator==(const TensorState& a, const TensorState& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.left_charge_ == b.left_charge_ && a.right_charge_ == b.right_charge_ && a.terms_ == b.terms_;
}

TensorState sigma_t(const TensorState& s) {
  TensorState out(s.left_charge(), s.right_charge());
  for (const auto& [key, c] : s.terms()) {
    TRational scale = c;
    for (int part : key.first.parts()) scale = scale * one_minus_t_pow(part);
    for (int part : key.second.parts()) scale = scale * one_minus_t_pow(part);
    out.add_term(key.first, key.second, scale);
  }
  return out;
}

TensorState omega_apply(const SymFunc& tau1, const SymFunc& tau2, bool deformed) {
  if (tau1.is_zero() || tau2.is_zero()) return TensorState(1, -1);
  const VertexKernel& plus = deformed ? VertexKernel::phi_t_plus() : VertexKernel::phi_plus();
  const VertexKernel& minus = deformed ? VertexKernel::phi_t_minus() : VertexKernel::phi_minus();
  const FockVector v1{0, tau1}, v2{0, tau2};
  const int lo = -tau2.degree(), hi = tau1.degree() - 1;
  if (hi < lo) return TensorState(1, -1);
  std::vector<TensorState> parts(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(parts.size(), [&](std::size_t i) {
    const int a = lo + static_cast<int>(i);
    FockVector left = plus.mode(a, v1);
    if (left.is_zero()) return;
    FockVector right = minus.mode(-1 - a, v2);
    if (right.is_zero()) return;
    parts[i] = TensorState::tensor(left, right);
  });
  TensorState out(1, -1);
  for (const auto& p : parts) out += p;
  return out;
}

bool is_tau(const SymFunc& tau, bool deformed) { return omega_apply(tau, tau, deformed).is_zero(); }

std::optional<SymFunc> search_negative_control(int degree_bound) {
  if (degree_bound < 0) return std::nullopt;
  std::vector<SymFunc> schur;
  for (const auto& lambda : enumerate_up_to_weight(degree_bound)) schur.push_back(schur_jacobi_trudi(lambda));
  const long coefficients[] = {1, -1, 2, -2};
  const std::size_t n = schur.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      for (long c : coefficients) {
        SymFunc tau = schur[i] + TRational(c) * schur[j];
        if (!is_tau(tau, false)) return tau;
      }
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        for (long c : coefficients) {
          SymFunc tau = schur[i] + schur[j] + TRational(c) * schur[k];
          if (!is_tau(tau, false)) return tau;
        }
  return std::nullopt;
}

}  // namespace symfock
