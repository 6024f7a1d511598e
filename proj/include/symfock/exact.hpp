#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace symfock {

using BigInteger = mpz_class;
using BigRational = mpq_class;

// a/b in canonical form; mpq_class(a, b) alone does not reduce.
BigRational rational(long a, long b = 1);
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& q);

/// Univariate polynomial in t over the rationals, coefficients ascending.
/// Stored as integer coefficients over one positive denominator with
/// gcd(content, den) = 1 and no trailing zeros, so equal polynomials have
/// identical representations. The zero polynomial has no coefficients.
class TPolynomial {
 public:
  TPolynomial() = default;
  explicit TPolynomial(const std::vector<BigRational>& coeffs);
  TPolynomial(long c);  // NOLINT(google-explicit-constructor)
  TPolynomial(const BigRational& c);  // NOLINT(google-explicit-constructor)

  static TPolynomial monomial(const BigRational& c, int power);
  static TPolynomial t() { return monomial(1, 1); }

  std::vector<BigRational> coeffs() const;
  // Integer form: coeffs() == integer_coeffs() / common_den().
  const std::vector<BigInteger>& integer_coeffs() const { return num_; }
  const BigInteger& common_den() const { return den_; }
  // Normalizes; den must be positive.
  static TPolynomial from_integers(std::vector<BigInteger> coeffs, BigInteger den);
  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  bool is_constant() const { return num_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(num_.size()) - 1; }
  BigRational leading() const;
  BigRational coeff(int power) const;

  TPolynomial operator-() const;
  TPolynomial& operator+=(const TPolynomial& o);
  TPolynomial& operator-=(const TPolynomial& o);
  TPolynomial& operator*=(const TPolynomial& o);
  TPolynomial scaled(const BigRational& c) const;
  TPolynomial monic() const;
  // this += a * b
  void add_product(const TPolynomial& a, const TPolynomial& b);

  friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
  friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
  friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
  friend bool operator==(const TPolynomial& a, const TPolynomial& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  struct DivMod;
  // Euclidean division; throws DivisionByZero for a zero divisor.
  static DivMod divmod(const TPolynomial& a, const TPolynomial& b);
  // Throws Error if b does not divide a.
  static TPolynomial exact_quotient(const TPolynomial& a, const TPolynomial& b);
  // Monic gcd; gcd(0, 0) = 0.
  static TPolynomial gcd(TPolynomial a, TPolynomial b);

  BigRational eval(const BigRational& t0) const;
  std::string to_string() const;

 private:
  void strip();
  void reduce();
  void add_scaled_integers(const TPolynomial& o, int sign);
  std::vector<BigInteger> num_;
  BigInteger den_ = 1;
};

struct TPolynomial::DivMod {
  TPolynomial quotient;
  TPolynomial remainder;
};

/// Element of Q(t): num/den with gcd(num, den) = 1 and den monic.
/// Equal values have identical representations.
class TRational {
 public:
  TRational() : den_(1) {}
  TRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  TRational(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
  TRational(TPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT

  // Throws DivisionByZero if den is zero.
  static TRational make(TPolynomial num, TPolynomial den);
  static TRational t() { return TRational(TPolynomial::t()); }

  const TPolynomial& num() const { return num_; }
  const TPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  TRational operator-() const;
  TRational& operator+=(const TRational& o);
  TRational& operator-=(const TRational& o);
  TRational& operator*=(const TRational& o);
  TRational& operator/=(const TRational& o);
  TRational inverse() const;
  TRational pow(int e) const;
  // this += a * b
  void add_product(const TRational& a, const TRational& b);

  friend TRational operator+(TRational a, const TRational& b) { return a += b; }
  friend TRational operator-(TRational a, const TRational& b) { return a -= b; }
  friend TRational operator*(TRational a, const TRational& b) { return a *= b; }
  friend TRational operator/(TRational a, const TRational& b) { return a /= b; }
  friend bool operator==(const TRational& a, const TRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Throws PoleError when den(t0) = 0.
  BigRational eval_at(const BigRational& t0) const;
  std::string to_string() const;

 private:
  TRational(TPolynomial num, TPolynomial den, int /*trusted*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  TPolynomial num_;
  TPolynomial den_;
};

// Convenience: 1 - t^n.
TRational one_minus_t_pow(int n);

}  // namespace symfock
