#pragma once

#include <map>
#include <string>
#include <vector>

#include "symfock/exact.hpp"
#include "symfock/partition.hpp"
#include "symfock/symfunc.hpp"

namespace symfock {

/// Polynomial in x_1..x_n with Q(t) coefficients, keyed by exponent vector.
class FinitePoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, TRational>;

  explicit FinitePoly(std::size_t variables = 0) : variables_(variables) {}
  static FinitePoly constant(std::size_t variables, const TRational& c);
  static FinitePoly monomial(Exponents e, const TRational& c = TRational(1));

  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const TRational& c);
  FinitePoly& operator+=(const FinitePoly& o);
  FinitePoly& operator-=(const FinitePoly& o);
  FinitePoly& operator*=(const TRational& c);
  friend FinitePoly operator+(FinitePoly a, const FinitePoly& b) { return a += b; }
  friend FinitePoly operator-(FinitePoly a, const FinitePoly& b) { return a -= b; }
  friend FinitePoly operator*(const FinitePoly& a, const FinitePoly& b);
  friend bool operator==(const FinitePoly& a, const FinitePoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  // Applies x_i -> x_{perm[i]}.
  FinitePoly permuted(const std::vector<std::size_t>& perm) const;

  // Exact division in lexicographic order; throws Error when not exact.
  FinitePoly exact_divide(const FinitePoly& divisor) const;

  FinitePoly evaluate_t(const BigRational& t0) const;
  std::string to_string() const;

 private:
  std::size_t variables_;
  Terms terms_;
};

// prod_{i<j} (x_i - x_j) in n variables.
FinitePoly vandermonde(std::size_t n);

// s_lambda(x_1..x_n) = det[x_i^{lambda_j + n - j}] / det[x_i^{n - j}].
FinitePoly schur_oracle_bialternant(const Partition& lambda, std::size_t n);

// P_lambda(x_1..x_n; t) by explicit symmetrization over S_n.
FinitePoly hall_littlewood_oracle(const Partition& lambda, std::size_t n);

// Sum of all monomials of degree k in x_1..x_n.
FinitePoly complete_oracle(int k, std::size_t n);
// Sum of all squarefree monomials of degree k in x_1..x_n.
FinitePoly elementary_oracle(int k, std::size_t n);

// Substitutes p_k = x_1^k + ... + x_n^k.
FinitePoly expand_in_variables(const SymFunc& f, std::size_t n);

}  // namespace symfock
