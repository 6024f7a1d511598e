#pragma once

#include <optional>
#include <string>

#include "symfock/partition.hpp"
#include "symfock/symfunc.hpp"

namespace symfock {

enum class VertexBasis { schur, hall_littlewood, dual_schur };
enum class GeneratingKind { Q, F, S };

// b_lambda(t) = prod_{i >= 1} prod_{j=1}^{m_i(lambda)} (1 - t^j).
TRational hall_littlewood_norm(const Partition& lambda);

// Coefficient of z^l u^{-lambda} in K(u_1)...K(u_l)(1), K = Phi+, Psi+ or Phi_t+,
// computed as K[j_1]...K[j_l] on the vacuum with j_i = -lambda_i - (l - i + 1).
SymFunc vertex_coefficient(VertexBasis basis, const Partition& lambda);

// s_lambda, P_lambda or S_lambda from the vertex coefficient. For Psi+ the
// coefficient is Q_lambda = b_lambda(t) P_lambda, which is divided out here.
SymFunc basis_via_vertex(VertexBasis basis, const Partition& lambda);

// Coefficient of u^{-lambda} in
//   Q: prod_{i<j}(1 - u_i/u_j) prod H(u_i)
//   F: prod_{i<j}(1 - u_i/u_j)(1 - t u_i/u_j)^{-1} prod H(u_i)E(-u_i/t)
//   S: prod_{i<j}(1 - u_i/u_j) prod H(u_i)E(-u_i/t)
// expanded in |u_1| < ... < |u_l|, by direct bookkeeping over permutations
// and geometric orders.
SymFunc generating_coefficient_raw(GeneratingKind kind, const Partition& lambda);

// As above with F normalized by b_lambda(t), so that F yields P_lambda.
SymFunc generating_coefficient_direct(GeneratingKind kind, const Partition& lambda);

struct CorollaryVerdict {
  bool equal = true;
  std::string relation;  // "F" or "S" for the failing relation
  SymFunc lhs;
  SymFunc rhs;
};

// Rebuilds the F and S coefficients at u^{-lambda} from generalized
// Jacobi-Trudi coefficients Q_mu (mu an integer tuple) multiplied by
// prod_{i<j}(1 - t u_i/u_j)^{-1} prod E(-u_i/t), resp. prod E(-u_i/t), and
// compares with generating_coefficient_raw.
CorollaryVerdict crosscheck_corollaries(const Partition& lambda);

}  // namespace symfock
