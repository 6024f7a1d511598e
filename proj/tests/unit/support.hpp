#pragma once

// Shared helpers for the unit tests: literals, random elements and
// independent reference computations.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <vector>

#include "symfock/exact.hpp"
#include "symfock/partition.hpp"
#include "symfock/symfunc.hpp"

namespace symfock::test {

inline TPolynomial poly(std::initializer_list<BigRational> c) { return TPolynomial(std::vector<BigRational>(c)); }

inline BigRational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return rational(num(rng), den(rng));
}

inline TPolynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational(rng);
  return TPolynomial(c);
}

inline TRational random_trational(std::mt19937& rng) {
  TPolynomial den;
  while (den.is_zero()) den = random_poly(rng, 2);
  return TRational::make(random_poly(rng, 3), den);
}

// Random element of degree <= max_degree with small polynomial coefficients.
inline SymFunc random_symfunc(std::mt19937& rng, int max_degree, bool homogeneous = false) {
  SymFunc f;
  std::uniform_int_distribution<int> coin(0, 2);
  const int low = homogeneous ? max_degree : 0;
  for (int w = low; w <= max_degree; ++w)
    for (const auto& lambda : enumerate_by_weight(w))
      if (coin(rng) == 0) f.add_term(lambda, TRational(random_poly(rng, 1)));
  return f;
}

// p_lambda(x) * c(t0) summed, for numeric spot checks.
inline BigRational evaluate(const SymFunc& f, const std::vector<BigRational>& x, const BigRational& t0) {
  BigRational total = 0;
  for (const auto& [lambda, c] : f.terms()) {
    BigRational term = c.eval_at(t0);
    for (int k : lambda.parts()) {
      BigRational pk = 0;
      for (const auto& xi : x) {
        BigRational power = 1;
        for (int e = 0; e < k; ++e) power *= xi;
        pk += power;
      }
      term *= pk;
    }
    total += term;
  }
  return total;
}

// Character chi^lambda(mu) by the Murnaghan-Nakayama rule on beta-numbers.
inline BigInteger mn_character(const std::vector<int>& beta, const std::vector<int>& mu, std::size_t from) {
  if (from == mu.size()) return 1;
  const int k = mu[from];
  BigInteger total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i] - k;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > b && x < beta[i]) ++between;
    std::vector<int> next = beta;
    next[i] = b;
    const BigInteger sub = mn_character(next, mu, from + 1);
    total += (between % 2) ? -sub : sub;
  }
  return total;
}

// s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu.
inline SymFunc schur_by_characters(const Partition& lambda) {
  std::vector<int> beta;
  const int l = static_cast<int>(lambda.length());
  for (int i = 1; i <= l; ++i) beta.push_back(lambda.part(static_cast<std::size_t>(i)) + l - i);
  SymFunc out;
  for (const auto& mu : enumerate_by_weight(lambda.weight())) {
    const BigInteger chi = mn_character(beta, mu.parts(), 0);
    if (chi == 0) continue;
    BigRational c(chi, mu.z_factor());
    c.canonicalize();
    out.add_term(mu, TRational(c));
  }
  return out;
}

}  // namespace symfock::test
