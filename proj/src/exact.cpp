#include "symfock/exact.hpp"

#include <algorithm>
#include <sstream>

#include "symfock/error.hpp"

namespace symfock {

BigRational rational(long a, long b) {
  if (b == 0) throw DivisionByZero("rational with zero denominator");
  BigRational q(a, b);
  q.canonicalize();
  return q;
}

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string n = text.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
    throw ParseError("malformed rational literal '" + text + "'");
  if (n[0] == '+') n.erase(0, 1);
  BigInteger den(d);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  BigRational q(BigInteger(n), den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// TPolynomial

TPolynomial::TPolynomial(const std::vector<BigRational>& coeffs) {
  BigInteger lcm = 1;
  for (const auto& c : coeffs)
    if (c != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  num_.reserve(coeffs.size());
  for (const auto& c : coeffs) num_.push_back(c.get_num() * (lcm / c.get_den()));
  den_ = lcm;
  strip();
  reduce();
}

TPolynomial::TPolynomial(long c) {
  if (c != 0) num_.emplace_back(c);
}

TPolynomial::TPolynomial(const BigRational& c) {
  if (c == 0) return;
  num_.push_back(c.get_num());
  den_ = c.get_den();
}

TPolynomial TPolynomial::monomial(const BigRational& c, int power) {
  if (power < 0) throw InvalidArgument("negative power of t");
  TPolynomial p;
  if (c == 0) return p;
  p.num_.assign(static_cast<std::size_t>(power) + 1, BigInteger(0));
  p.num_.back() = c.get_num();
  p.den_ = c.get_den();
  return p;
}

void TPolynomial::strip() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  if (num_.empty()) den_ = 1;
}

void TPolynomial::reduce() {
  if (den_ == 1) return;
  BigInteger g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

TPolynomial TPolynomial::from_integers(std::vector<BigInteger> coeffs, BigInteger den) {
  if (den <= 0) throw InvalidArgument("integer polynomial needs a positive denominator");
  TPolynomial p;
  p.num_ = std::move(coeffs);
  p.den_ = std::move(den);
  p.strip();
  p.reduce();
  return p;
}

std::vector<BigRational> TPolynomial::coeffs() const {
  std::vector<BigRational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    BigRational q(c, den_);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

bool TPolynomial::is_one() const { return num_.size() == 1 && num_[0] == 1 && den_ == 1; }

BigRational TPolynomial::leading() const {
  BigRational q(num_.back(), den_);
  q.canonicalize();
  return q;
}

BigRational TPolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  BigRational q(num_[static_cast<std::size_t>(power)], den_);
  q.canonicalize();
  return q;
}

TPolynomial TPolynomial::operator-() const {
  TPolynomial r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

// this += sign * o
void TPolynomial::add_scaled_integers(const TPolynomial& o, int sign) {
  if (o.is_zero()) return;
  if (num_.size() < o.num_.size()) num_.resize(o.num_.size(), BigInteger(0));
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < o.num_.size(); ++i) {
      if (sign > 0) num_[i] += o.num_[i];
      else num_[i] -= o.num_[i];
    }
    strip();
    reduce();
    return;
  }
  BigInteger g;
  mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
  const BigInteger mine = o.den_ / g, theirs = den_ / g;
  if (mine != 1)
    for (auto& c : num_) c *= mine;
  for (std::size_t i = 0; i < o.num_.size(); ++i) {
    if (sign > 0) mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), theirs.get_mpz_t());
    else mpz_submul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), theirs.get_mpz_t());
  }
  den_ *= mine;
  strip();
  reduce();
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& o) {
  add_scaled_integers(o, 1);
  return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& o) {
  add_scaled_integers(o, -1);
  return *this;
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
  TPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  r.num_.assign(a.num_.size() + b.num_.size() - 1, BigInteger(0));
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      mpz_addmul(r.num_[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  r.den_ = a.den_ * b.den_;
  r.reduce();
  return r;
}

TPolynomial& TPolynomial::operator*=(const TPolynomial& o) { return *this = *this * o; }

TPolynomial TPolynomial::scaled(const BigRational& c) const {
  if (c == 0 || is_zero()) return {};
  TPolynomial r = *this;
  if (c.get_num() != 1)
    for (auto& x : r.num_) x *= c.get_num();
  r.den_ *= c.get_den();
  if (r.den_ < 0) {
    r.den_ = -r.den_;
    for (auto& x : r.num_) x = -x;
  }
  r.reduce();
  return r;
}

void TPolynomial::add_product(const TPolynomial& a, const TPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (is_zero()) {
    *this = a * b;
    return;
  }
  // this = n/d, a*b = (conv)/D. Rescale both to lcm(d, D).
  BigInteger D;
  if (a.den_ == 1) D = b.den_;
  else if (b.den_ == 1) D = a.den_;
  else D = a.den_ * b.den_;
  BigInteger scale_product;  // lcm / D, 0 when 1
  if (D != den_) {
    BigInteger g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), D.get_mpz_t());
    BigInteger scale_this = D / g;
    if (scale_this != 1) {
      for (auto& c : num_) c *= scale_this;
      den_ *= scale_this;
    }
    scale_product = den_ / D;
    if (scale_product == 1) scale_product = 0;
  }
  const std::size_t n = a.num_.size() + b.num_.size() - 1;
  if (num_.size() < n) num_.resize(n, BigInteger(0));
  BigInteger scaled_a;
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    const BigInteger* ai = &a.num_[i];
    if (scale_product != 0) {
      scaled_a = a.num_[i] * scale_product;
      ai = &scaled_a;
    }
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      mpz_addmul(num_[i + j].get_mpz_t(), ai->get_mpz_t(), b.num_[j].get_mpz_t());
  }
  strip();
  reduce();
}

TPolynomial TPolynomial::monic() const {
  if (is_zero()) return *this;
  BigRational lead = leading();
  if (lead == 1) return *this;
  return scaled(1 / lead);
}

TPolynomial::DivMod TPolynomial::divmod(const TPolynomial& a, const TPolynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  DivMod out;
  if (a.degree() < b.degree()) {
    out.remainder = a;
    return out;
  }
  std::vector<BigRational> rem = a.coeffs();
  const std::vector<BigRational> bc = b.coeffs();
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigRational(0));
  const BigRational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const BigRational& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    BigRational f = top * inv_lead;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= f * bc[static_cast<std::size_t>(i)];
    quo[static_cast<std::size_t>(k)] = f;
  }
  out.quotient = TPolynomial(std::move(quo));
  out.remainder = TPolynomial(std::move(rem));
  return out;
}

TPolynomial TPolynomial::exact_quotient(const TPolynomial& a, const TPolynomial& b) {
  if (b.is_one()) return a;
  auto dm = divmod(a, b);
  if (!dm.remainder.is_zero()) throw Error("inexact polynomial division");
  return std::move(dm.quotient);
}

TPolynomial TPolynomial::gcd(TPolynomial a, TPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return TPolynomial(1);
    TPolynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

BigRational TPolynomial::eval(const BigRational& t0) const {
  BigRational acc = 0;
  const auto cs = coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * t0 + *it;
  return acc;
}

std::string TPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto cs = coeffs();
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = cs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) os << symfock::to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// TRational

TRational TRational::make(TPolynomial num, TPolynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  TRational r(std::move(num), std::move(den), 0);
  r.normalize();
  return r;
}

void TRational::normalize() {
  if (num_.is_zero()) {
    den_ = TPolynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    TPolynomial g = TPolynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = TPolynomial::exact_quotient(num_, g);
      den_ = TPolynomial::exact_quotient(den_, g);
    }
  }
  if (den_.leading() != 1) {
    BigRational inv = 1 / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

TRational TRational::operator-() const { return TRational(-num_, den_, 0); }

TRational& TRational::operator+=(const TRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  TPolynomial g = TPolynomial::gcd(den_, o.den_);
  if (g.is_one()) {
    // Reduced inputs with coprime monic denominators stay reduced.
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = TPolynomial(1);
    return *this;
  }
  TPolynomial left = TPolynomial::exact_quotient(o.den_, g);
  TPolynomial right = TPolynomial::exact_quotient(den_, g);
  num_ = num_ * left + o.num_ * right;
  den_ = den_ * left;
  normalize();
  return *this;
}

TRational& TRational::operator-=(const TRational& o) { return *this += -o; }

TRational& TRational::operator*=(const TRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = TRational();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  TPolynomial a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    TPolynomial g = TPolynomial::gcd(a, d);
    if (!g.is_one()) {
      a = TPolynomial::exact_quotient(a, g);
      d = TPolynomial::exact_quotient(d, g);
    }
  }
  if (!b.is_one()) {
    TPolynomial g = TPolynomial::gcd(c, b);
    if (!g.is_one()) {
      c = TPolynomial::exact_quotient(c, g);
      b = TPolynomial::exact_quotient(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  if (den_.leading() != 1) {
    BigRational inv = 1 / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

void TRational::add_product(const TRational& a, const TRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (den_.is_one() && a.den_.is_one() && b.den_.is_one()) {
    num_.add_product(a.num_, b.num_);
    return;
  }
  *this += a * b;
}

TRational TRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  TRational r(den_, num_, 0);
  if (r.den_.leading() != 1) {
    BigRational inv = 1 / r.den_.leading();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

TRational& TRational::operator/=(const TRational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  return *this *= o.inverse();
}

TRational TRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TRational acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

BigRational TRational::eval_at(const BigRational& t0) const {
  BigRational d = den_.eval(t0);
  if (d == 0) throw PoleError("pole at t = " + symfock::to_string(t0) + " (denominator " + den_.to_string() + ")");
  return num_.eval(t0) / d;
}

std::string TRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

TRational one_minus_t_pow(int n) { return TRational(TPolynomial(1) - TPolynomial::monomial(1, n)); }

}  // namespace symfock
