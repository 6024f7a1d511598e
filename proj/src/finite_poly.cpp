#include "symfock/finite_poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "symfock/error.hpp"

namespace symfock {

FinitePoly FinitePoly::constant(std::size_t variables, const TRational& c) {
  FinitePoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

FinitePoly FinitePoly::monomial(Exponents e, const TRational& c) {
  FinitePoly p(e.size());
  p.add_term(e, c);
  return p;
}

void FinitePoly::add_term(const Exponents& e, const TRational& c) {
  if (c.is_zero()) return;
  if (e.size() != variables_) throw InvalidArgument("exponent vector has wrong length");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FinitePoly& FinitePoly::operator+=(const FinitePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FinitePoly& FinitePoly::operator-=(const FinitePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

FinitePoly& FinitePoly::operator*=(const TRational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

FinitePoly operator*(const FinitePoly& a, const FinitePoly& b) {
  if (a.variables_ != b.variables_) throw InvalidArgument("variable count mismatch");
  FinitePoly r(a.variables_);
  FinitePoly::Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

FinitePoly FinitePoly::permuted(const std::vector<std::size_t>& perm) const {
  FinitePoly r(variables_);
  Exponents e(variables_);
  for (const auto& [ea, c] : terms_) {
    for (std::size_t i = 0; i < variables_; ++i) e[perm[i]] = ea[i];
    r.add_term(e, c);
  }
  return r;
}

FinitePoly FinitePoly::exact_divide(const FinitePoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("finite polynomial division by zero");
  FinitePoly rem = *this;
  FinitePoly quo(variables_);
  // std::map orders exponent vectors lexicographically; the last key leads.
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  const TRational lead_inv = lead_c.inverse();
  Exponents shift(variables_);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < variables_; ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < 0) throw Error("inexact multivariate division");
    }
    const TRational f = rc * lead_inv;
    quo.add_term(shift, f);
    Exponents e(variables_);
    for (const auto& [de, dc] : divisor.terms_) {
      for (std::size_t i = 0; i < variables_; ++i) e[i] = de[i] + shift[i];
      rem.add_term(e, -(dc * f));
    }
  }
  return quo;
}

FinitePoly FinitePoly::evaluate_t(const BigRational& t0) const {
  FinitePoly r(variables_);
  for (const auto& [e, c] : terms_) r.add_term(e, TRational(c.eval_at(t0)));
  return r;
}

std::string FinitePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "[" << it->second.to_string() << "]";
    for (std::size_t i = 0; i < variables_; ++i)
      if (it->first[i]) os << "*x" << (i + 1) << (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
  }
  return os.str();
}

namespace {

FinitePoly linear(std::size_t n, std::size_t i, std::size_t j, const TRational& cj) {
  FinitePoly p(n);
  FinitePoly::Exponents e(n, 0);
  e[i] = 1;
  p.add_term(e, TRational(1));
  e[i] = 0;
  e[j] = 1;
  p.add_term(e, cj);
  return p;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// sum_sigma sgn(sigma) sigma(f)
FinitePoly antisymmetrize(const FinitePoly& f) {
  const std::size_t n = f.variables();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FinitePoly acc(n);
  do {
    FinitePoly term = f.permuted(perm);
    if (permutation_sign(perm) > 0) acc += term;
    else acc -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

FinitePoly::Exponents padded(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n) throw InvalidArgument("partition longer than the number of variables");
  FinitePoly::Exponents e(n, 0);
  for (std::size_t i = 0; i < lambda.length(); ++i) e[i] = lambda.parts()[i];
  return e;
}

}  // namespace

FinitePoly vandermonde(std::size_t n) {
  FinitePoly v = FinitePoly::constant(n, TRational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v = v * linear(n, i, j, TRational(-1));
  return v;
}

FinitePoly schur_oracle_bialternant(const Partition& lambda, std::size_t n) {
  if (n == 0) throw InvalidArgument("need at least one variable");
  FinitePoly::Exponents e = padded(lambda, n);
  // x^{lambda + delta}; its alternant is det[x_i^{lambda_j + n - j}].
  for (std::size_t i = 0; i < n; ++i) e[i] += static_cast<int>(n - 1 - i);
  FinitePoly numerator = antisymmetrize(FinitePoly::monomial(e));
  return numerator.exact_divide(vandermonde(n));
}

FinitePoly hall_littlewood_oracle(const Partition& lambda, std::size_t n) {
  if (n == 0) throw InvalidArgument("need at least one variable");
  FinitePoly body = FinitePoly::monomial(padded(lambda, n));
  const TRational minus_t = -TRational::t();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) body = body * linear(n, i, j, minus_t);
  FinitePoly sym = antisymmetrize(body).exact_divide(vandermonde(n));

  // prod_{i>=0} prod_{j=1}^{m(i)} (1-t)/(1-t^j), with m(0) = n - length.
  auto mult = lambda.multiplicities();
  mult[0] = static_cast<int>(n - lambda.length());
  TRational prefactor(1);
  for (auto [value, count] : mult)
    for (int j = 1; j <= count; ++j) prefactor *= one_minus_t_pow(1) / one_minus_t_pow(j);
  sym *= prefactor;
  return sym;
}

namespace {

// Visits every exponent vector of total degree k with entries <= cap.
void each_exponent(std::size_t n, int k, int cap, const std::function<void(const FinitePoly::Exponents&)>& visit) {
  FinitePoly::Exponents e(n, 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      if (left <= cap) {
        e[i] = left;
        visit(e);
      }
      return;
    }
    for (int a = 0; a <= std::min(left, cap); ++a) {
      e[i] = a;
      go(i + 1, left - a);
    }
  };
  go(0, k);
}

}  // namespace

FinitePoly complete_oracle(int k, std::size_t n) {
  if (n == 0) throw InvalidArgument("need at least one variable");
  FinitePoly out(n);
  if (k < 0) return out;
  each_exponent(n, k, k, [&](const FinitePoly::Exponents& e) { out.add_term(e, TRational(1)); });
  return out;
}

FinitePoly elementary_oracle(int k, std::size_t n) {
  if (n == 0) throw InvalidArgument("need at least one variable");
  FinitePoly out(n);
  if (k < 0) return out;
  each_exponent(n, k, 1, [&](const FinitePoly::Exponents& e) { out.add_term(e, TRational(1)); });
  return out;
}

FinitePoly expand_in_variables(const SymFunc& f, std::size_t n) {
  FinitePoly result(n);
  if (n == 0) {
    result.add_term({}, f.coefficient(Partition()));
    return result;
  }
  std::map<int, FinitePoly> power_sums;
  auto power_sum = [&](int k) -> const FinitePoly& {
    auto it = power_sums.find(k);
    if (it != power_sums.end()) return it->second;
    FinitePoly p(n);
    for (std::size_t i = 0; i < n; ++i) {
      FinitePoly::Exponents e(n, 0);
      e[i] = k;
      p.add_term(e, TRational(1));
    }
    return power_sums.emplace(k, std::move(p)).first->second;
  };
  std::map<Partition, FinitePoly> monomials;
  std::function<const FinitePoly&(const Partition&)> expand_monomial = [&](const Partition& lambda) -> const FinitePoly& {
    auto it = monomials.find(lambda);
    if (it != monomials.end()) return it->second;
    FinitePoly value = FinitePoly::constant(n, TRational(1));
    if (!lambda.empty()) {
      std::vector<int> rest(lambda.parts().begin() + 1, lambda.parts().end());
      value = expand_monomial(Partition(rest)) * power_sum(lambda.parts().front());
    }
    return monomials.emplace(lambda, std::move(value)).first->second;
  };
  for (const auto& [lambda, c] : f.terms()) {
    FinitePoly term = expand_monomial(lambda);
    term *= c;
    result += term;
  }
  return result;
}

}  // namespace symfock
