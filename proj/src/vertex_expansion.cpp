#include "symfock/vertex_expansion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "symfock/bases.hpp"
#include "symfock/error.hpp"
#include "symfock/fock.hpp"

namespace symfock {

TRational hall_littlewood_norm(const Partition& lambda) {
  TRational b(1);
  for (const auto& [part, mult] : lambda.multiplicities())
    for (int j = 1; j <= mult; ++j) b = b * one_minus_t_pow(j);
  return b;
}

namespace {

const VertexKernel& kernel_for(VertexBasis basis) {
  switch (basis) {
    case VertexBasis::schur: return VertexKernel::phi_plus();
    case VertexBasis::hall_littlewood: return VertexKernel::psi_plus();
    case VertexBasis::dual_schur: return VertexKernel::phi_t_plus();
  }
  throw InvalidArgument("unknown vertex basis");
}

// Sign of a permutation given as images 0..l-1.
int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Sum of coefficient * prod_i g(c_i), grouping index tuples by multiset.
class ProductAccumulator {
 public:
  explicit ProductAccumulator(std::function<const SymFunc&(int)> g) : g_(std::move(g)) {}

  void add(std::vector<int> c, const TPolynomial& coeff) {
    std::sort(c.begin(), c.end(), std::greater<>());
    auto [it, inserted] = acc_.try_emplace(std::move(c), coeff);
    if (!inserted) it->second = it->second + coeff;
  }

  SymFunc result() const {
    SymFunc out;
    for (const auto& [c, coeff] : acc_) {
      if (coeff.is_zero()) continue;
      SymFunc prod(1);
      for (int ci : c) {
        if (ci == 0) continue;
        prod = prod * g_(ci);
      }
      out += TRational(coeff) * prod;
    }
    return out;
  }

 private:
  std::function<const SymFunc&(int)> g_;
  std::map<std::vector<int>, TPolynomial> acc_;
};

// Enumerates geometric orders k_ij >= 0 (i < j) with
//   index_i = base_i + sum_{j>i} k_ij - sum_{j<i} k_ji.
// Every suffix T = {j..l-1} satisfies sum_T index = sum_T base - (orders into T
// from outside), so the incoming order is bounded by sum_T base. Levels run
// j = l-1 down to 0; level j fixes k_ij for all i < j, after which index_j is
// final. With nonnegative_index, tuples with a negative index are skipped.
template <class Visit>
void enumerate_orders(const std::vector<int>& base, bool nonnegative_index, Visit&& visit) {
  const int l = static_cast<int>(base.size());
  std::vector<int> index = base;
  std::vector<int> suffix_base(l + 1, 0);
  for (int i = l - 1; i >= 0; --i) suffix_base[i] = suffix_base[i + 1] + base[i];
  int total_k = 0;
  std::function<void(int)> level;
  std::function<void(int, int, int)> choose = [&](int j, int i, int budget) {
    if (i == j) {
      if (nonnegative_index && index[j] < 0) return;
      level(j - 1);
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      index[i] += k;
      index[j] -= k;
      total_k += k;
      choose(j, i + 1, budget - k);
      index[i] -= k;
      index[j] += k;
      total_k -= k;
    }
  };
  level = [&](int j) {
    if (j < 0) {
      visit(index, total_k);
      return;
    }
    // Orders already chosen out of {0..j-1} all land in {j+1..l-1}.
    int incoming = 0;
    for (int i = 0; i < j; ++i) incoming += index[i] - base[i];
    const int budget = suffix_base[j] - incoming;
    if (budget < 0) return;
    choose(j, 0, budget);
  };
  level(l - 1);
}

}  // namespace

SymFunc vertex_coefficient(VertexBasis basis, const Partition& lambda) {
  const VertexKernel& kernel = kernel_for(basis);
  const int l = lambda.length();
  FockVector v = FockVector::vacuum();
  for (int i = l; i >= 1 && !v.is_zero(); --i) v = kernel.mode(-lambda.part(i) - (l - i + 1), v);
  return v.body;
}

SymFunc basis_via_vertex(VertexBasis basis, const Partition& lambda) {
  SymFunc raw = vertex_coefficient(basis, lambda);
  if (basis == VertexBasis::hall_littlewood) raw *= hall_littlewood_norm(lambda).inverse();
  return raw;
}

SymFunc generating_coefficient_raw(GeneratingKind kind, const Partition& lambda) {
  const int l = lambda.length();
  const VertexKernel& kernel = kind == GeneratingKind::Q ? VertexKernel::phi_plus() : VertexKernel::psi_plus();
  ProductAccumulator acc([&kernel](int k) -> const SymFunc& { return kernel.multiplication_coefficient(k); });
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const int sign = permutation_sign(perm);
    std::vector<int> base(l);
    for (int i = 0; i < l; ++i) base[i] = lambda.part(i + 1) + perm[i] - i;
    if (kind == GeneratingKind::F) {
      enumerate_orders(base, true, [&](const std::vector<int>& index, int total_k) {
        acc.add(index, TPolynomial::monomial(BigRational(sign), total_k));
      });
    } else if (std::all_of(base.begin(), base.end(), [](int c) { return c >= 0; })) {
      acc.add(base, TPolynomial(sign));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc.result();
}

SymFunc generating_coefficient_direct(GeneratingKind kind, const Partition& lambda) {
  SymFunc raw = generating_coefficient_raw(kind, lambda);
  if (kind == GeneratingKind::F) raw *= hall_littlewood_norm(lambda).inverse();
  return raw;
}

namespace {

// sum over d (and k when geometric) of t^{sum k} (-t)^{sum d} prod e_{d_i} Q_mu,
// mu_i = lambda_i - d_i + sum_{j>i} k_ij - sum_{j<i} k_ji. Q_mu vanishes unless
// every suffix sum of mu is nonnegative, which bounds d and k.
SymFunc corollary_rhs(const Partition& lambda, bool geometric) {
  const int l = lambda.length();
  std::map<std::pair<std::vector<int>, std::vector<int>>, TPolynomial> acc;  // (d, mu) -> coeff
  std::vector<int> d(l, 0);
  auto emit = [&](const std::vector<int>& mu, int total_k) {
    const int dsum = std::accumulate(d.begin(), d.end(), 0);
    TPolynomial c = TPolynomial::monomial(BigRational(dsum % 2 == 0 ? 1 : -1), total_k + dsum);
    auto [it, inserted] = acc.try_emplace(std::make_pair(d, mu), c);
    if (!inserted) it->second = it->second + c;
  };
  std::function<void(int, int)> choose_d = [&](int i, int tail) {
    if (i < 0) {
      std::vector<int> base(l);
      for (int r = 0; r < l; ++r) base[r] = lambda.part(r + 1) - d[r];
      if (geometric) {
        enumerate_orders(base, false, emit);
      } else {
        emit(base, 0);
      }
      return;
    }
    // tail = sum_{r>i} (lambda_r - d_r) >= 0 by construction.
    for (int di = 0; di <= lambda.part(i + 1) + tail; ++di) {
      d[i] = di;
      choose_d(i - 1, tail + lambda.part(i + 1) - di);
    }
    d[i] = 0;
  };
  choose_d(l - 1, 0);
  SymFunc out;
  for (const auto& [key, coeff] : acc) {
    if (coeff.is_zero()) continue;
    const auto& [dv, mu] = key;
    SymFunc q = jacobi_trudi_tuple(mu);
    if (q.is_zero()) continue;
    for (int di : dv)
      if (di > 0) q = q * elementary_e(di);
    out += TRational(coeff) * q;
  }
  return out;
}

}  // namespace

CorollaryVerdict crosscheck_corollaries(const Partition& lambda) {
  CorollaryVerdict verdict;
  for (auto [kind, name, geometric] :
       {std::tuple{GeneratingKind::F, "F", true}, std::tuple{GeneratingKind::S, "S", false}}) {
    SymFunc lhs = generating_coefficient_raw(kind, lambda);
    SymFunc rhs = corollary_rhs(lambda, geometric);
    if (!(lhs == rhs)) {
      verdict.equal = false;
      verdict.relation = name;
      verdict.lhs = std::move(lhs);
      verdict.rhs = std::move(rhs);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace symfock
