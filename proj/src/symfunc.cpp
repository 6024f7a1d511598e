#include "symfock/symfunc.hpp"

#include <sstream>

#include "symfock/error.hpp"

namespace symfock {

SymFunc::SymFunc(const TRational& c) {
  if (!c.is_zero()) terms_.emplace(Partition(), c);
}

SymFunc SymFunc::monomial(const Partition& lambda, const TRational& c) {
  SymFunc f;
  f.add_term(lambda, c);
  return f;
}

SymFunc SymFunc::power_sum(int n) {
  if (n < 1) throw InvalidArgument("power sum index must be positive");
  return monomial(Partition({n}));
}

int SymFunc::degree() const {
  int d = -1;
  for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.weight());
  return d;
}

TRational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? TRational() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const TRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymFunc::add_scaled(const SymFunc& f, const TRational& c) {
  if (c.is_zero()) return;
  for (const auto& [lambda, x] : f.terms_) {
    auto [it, inserted] = terms_.try_emplace(lambda);
    if (inserted) {
      it->second = x * c;
      continue;
    }
    it->second.add_product(x, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [lambda, c] : r.terms_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const TRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [lambda, x] : terms_) x *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) r.add_term(la.merged(lb), ca * cb);
  return r;
}

SymFunc SymFunc::times_monomial(const Partition& nu, const TRational& c) const {
  SymFunc r;
  if (c.is_zero()) return r;
  for (const auto& [lambda, x] : terms_) r.add_term(lambda.merged(nu), x * c);
  return r;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    if (!lambda.empty()) os << "*p" << lambda.to_string();
  }
  return os.str();
}

SymFunc ring_multiply(const SymFunc& f, const SymFunc& g) { return f * g; }

bool partial_derivative(const Partition& mu, const Partition& lambda, BigInteger& factor, Partition& rest) {
  factor = 1;
  if (mu.empty()) {
    rest = lambda;
    return true;
  }
  const auto& lp = lambda.parts();
  const auto& mp = mu.parts();
  std::vector<int> remaining;
  remaining.reserve(lp.size());
  std::size_t i = 0, j = 0;
  while (i < lp.size()) {
    const int v = lp[i];
    std::size_t cl = 0, cm = 0;
    while (i < lp.size() && lp[i] == v) {
      ++i;
      ++cl;
    }
    while (j < mp.size() && mp[j] > v) return false;
    while (j < mp.size() && mp[j] == v) {
      ++j;
      ++cm;
    }
    if (cm > cl) return false;
    for (std::size_t k = 0; k < cm; ++k) factor *= static_cast<unsigned long>(cl - k);
    for (std::size_t k = 0; k < cl - cm; ++k) remaining.push_back(v);
  }
  if (j != mp.size()) return false;
  rest = Partition(std::move(remaining));
  return true;
}

SymFunc diff_p(int n, const SymFunc& f) {
  if (n < 1) throw InvalidArgument("derivative index must be positive");
  SymFunc r;
  const Partition mu({n});
  BigInteger factor;
  Partition rest;
  for (const auto& [lambda, c] : f.terms())
    if (partial_derivative(mu, lambda, factor, rest)) r.add_term(rest, c * TRational(BigRational(factor)));
  return r;
}

SymFunc substitute_p_scaling(const SymFunc& f, const std::function<TRational(int)>& scale) {
  SymFunc r;
  std::map<int, TRational> cache;
  for (const auto& [lambda, c] : f.terms()) {
    TRational w = c;
    for (int part : lambda.parts()) {
      auto it = cache.find(part);
      if (it == cache.end()) it = cache.emplace(part, scale(part)).first;
      w *= it->second;
    }
    r.add_term(lambda, w);
  }
  return r;
}

SymFunc sigma_t(const SymFunc& f) { return substitute_p_scaling(f, [](int n) { return one_minus_t_pow(n); }); }

namespace {

TRational deformation_weight(const Partition& lambda) {
  TRational w(1);
  for (int part : lambda.parts()) w *= one_minus_t_pow(part).inverse();
  return w;
}

}  // namespace

TRational scalar_product(const SymFunc& f, const SymFunc& g, Pairing pairing) {
  TRational acc;
  const SymFunc& small = f.size() <= g.size() ? f : g;
  const SymFunc& large = f.size() <= g.size() ? g : f;
  for (const auto& [lambda, c] : small.terms()) {
    auto it = large.terms().find(lambda);
    if (it == large.terms().end()) continue;
    TRational w = c * it->second * TRational(BigRational(lambda.z_factor()));
    if (pairing == Pairing::deformed) w *= deformation_weight(lambda);
    acc += w;
  }
  return acc;
}

SymFunc perp_apply(const SymFunc& f, const SymFunc& g, Pairing pairing) {
  SymFunc r;
  BigInteger factor;
  Partition rest;
  for (const auto& [mu, cf] : f.terms()) {
    // p_mu^perp = prod_i mu_i d/dp_{mu_i} (times 1/(1-t^{mu_i}) when deformed).
    TRational op_weight = cf;
    BigInteger prod = 1;
    for (int part : mu.parts()) prod *= part;
    op_weight *= TRational(BigRational(prod));
    if (pairing == Pairing::deformed) op_weight *= deformation_weight(mu);
    for (const auto& [lambda, cg] : g.terms())
      if (partial_derivative(mu, lambda, factor, rest)) r.add_term(rest, op_weight * cg * TRational(BigRational(factor)));
  }
  return r;
}

}  // namespace symfock
