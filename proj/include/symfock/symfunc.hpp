#pragma once

#include <functional>
#include <map>
#include <string>

#include "symfock/exact.hpp"
#include "symfock/partition.hpp"

namespace symfock {

/// Element of Lambda[t] = Q(t)[p_1, p_2, ...]: a finite Q(t)-combination of
/// power-sum monomials p_lambda. Zero coefficients are never stored.
class SymFunc {
 public:
  using Terms = std::map<Partition, TRational, ReverseLex>;

  SymFunc() = default;
  SymFunc(const TRational& c);  // NOLINT(google-explicit-constructor)
  SymFunc(long c) : SymFunc(TRational(c)) {}  // NOLINT(google-explicit-constructor)

  static SymFunc monomial(const Partition& lambda, const TRational& c = TRational(1));
  static SymFunc power_sum(int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Maximal weight of a term; -1 for zero.
  int degree() const;
  TRational coefficient(const Partition& lambda) const;

  void add_term(const Partition& lambda, const TRational& c);

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const TRational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const TRational& c) { return a *= c; }
  friend SymFunc operator*(const TRational& c, SymFunc a) { return a *= c; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

  // this += c * f
  void add_scaled(const SymFunc& f, const TRational& c);

  // Multiplies every term by p_nu.
  SymFunc times_monomial(const Partition& nu, const TRational& c = TRational(1)) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

enum class Pairing { classical, deformed };

SymFunc ring_multiply(const SymFunc& f, const SymFunc& g);

// d/dp_n
SymFunc diff_p(int n, const SymFunc& f);

// Algebra endomorphism p_n -> scale(n) p_n.
SymFunc substitute_p_scaling(const SymFunc& f, const std::function<TRational(int)>& scale);

// p_n -> (1 - t^n) p_n, the substitution taking s_lambda to S_lambda.
SymFunc sigma_t(const SymFunc& f);

// <p_l, p_m> = delta z_l, deformed: delta z_l prod_i 1/(1 - t^{l_i}).
TRational scalar_product(const SymFunc& f, const SymFunc& g, Pairing pairing);

// Adjoint of multiplication by f: p_n acts as n d/dp_n, or as n/(1-t^n) d/dp_n
// for the deformed pairing.
SymFunc perp_apply(const SymFunc& f, const SymFunc& g, Pairing pairing);

// nu = lambda minus mu as multisets, with the falling-factorial coefficient of
// d_mu p_lambda = prod_v m_v(lambda)!/(m_v(lambda)-m_v(mu))! p_nu.
// Returns false when mu is not contained in lambda.
bool partial_derivative(const Partition& mu, const Partition& lambda, BigInteger& factor, Partition& rest);

}  // namespace symfock
