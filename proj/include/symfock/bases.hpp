#pragma once

#include <vector>

#include "symfock/partition.hpp"
#include "symfock/symfunc.hpp"

namespace symfock {

// h_k by Newton's recurrence k h_k = sum_i p_i h_{k-i}. h_k = 0 for k < 0.
const SymFunc& complete_h(int k);
// e_k by k e_k = sum_i (-1)^{i-1} p_i e_{k-i}.
const SymFunc& elementary_e(int k);
// q_k = coefficient of u^{-k} in H(u)E(-u/t) = sum_s h_{k-s} e_s (-t)^s.
const SymFunc& q_series_coefficient(int k);
// One-row Hall-Littlewood function P_(k) = q_k / (1 - t), P_(0) = 1.
SymFunc hall_littlewood_row(int k);

// det[h_{lambda_i - i + j}]
SymFunc schur_jacobi_trudi(const Partition& lambda);
// det[q_{lambda_i - i + j}]
SymFunc dual_schur_det(const Partition& lambda);

// Generalized Jacobi-Trudi determinant det[h_{mu_i - i + j}] for an arbitrary
// integer tuple, i.e. the coefficient of u^{-mu} in
// prod_{i<j}(1 - u_i/u_j) prod_i H(u_i).
SymFunc jacobi_trudi_tuple(const std::vector<int>& mu);

}  // namespace symfock
