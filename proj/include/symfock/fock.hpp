#pragma once

#include <functional>
#include <memory>
#include <string>

#include "symfock/symfunc.hpp"

namespace symfock {

/// z^charge * body, an element of the charge-m component B^(m)[t].
struct FockVector {
  int charge = 0;
  SymFunc body;

  static FockVector vacuum() { return {0, SymFunc(1)}; }
  bool is_zero() const { return body.is_zero(); }
  int degree() const { return body.degree(); }

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const TRational& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const TRational& c, FockVector v) { return v *= c; }
  // Zero vectors compare equal regardless of charge.
  friend bool operator==(const FockVector& a, const FockVector& b);
};

using CoefficientSequence = std::function<TRational(int)>;

// A_k = coefficient of u^{-k} in exp(sum_n a_n p_n u^{-n} / n), computed by
// k A_k = sum_{n=1}^k a_n p_n A_{k-n}.
SymFunc multiplication_coefficient(const CoefficientSequence& a, int k);

/// C_r = coefficient of u^r in exp(sum_n c_n d/dp_n u^n): a finite sum of
/// coefficient * d_mu over partitions mu of r.
class DifferentialOperator {
 public:
  SymFunc::Terms& terms() { return terms_; }
  const SymFunc::Terms& terms() const { return terms_; }
  SymFunc apply(const SymFunc& f) const;

 private:
  SymFunc::Terms terms_;
};

DifferentialOperator derivation_coefficient(const CoefficientSequence& c, int r);

enum class KernelKind { phi_plus, phi_minus, psi_plus, psi_minus, phi_t_plus, phi_t_minus };

/// R^eps(u) exp(sum_n a_n p_n u^{-n}/n) exp(sum_n c_n d/dp_n u^n).
///
/// Modes are labelled by the literal power of u: mode(j, v) is the coefficient
/// of u^j in K(u) v. For v = z^m f this is
///   z^{m+eps} sum_{r - k = j + eps m + 1} A_k C_r f.
/// Copies share one cache of A_k and of mode images of monomials, so a kernel
/// is cheap to pass by value and safe to use from several threads.
struct DenseImage;

class VertexKernel {
 public:
  VertexKernel(std::string name, int charge_shift, CoefficientSequence a, CoefficientSequence c);

  static const VertexKernel& standard(KernelKind kind);
  static const VertexKernel& phi_plus() { return standard(KernelKind::phi_plus); }
  static const VertexKernel& phi_minus() { return standard(KernelKind::phi_minus); }
  static const VertexKernel& psi_plus() { return standard(KernelKind::psi_plus); }
  static const VertexKernel& psi_minus() { return standard(KernelKind::psi_minus); }
  static const VertexKernel& phi_t_plus() { return standard(KernelKind::phi_t_plus); }
  static const VertexKernel& phi_t_minus() { return standard(KernelKind::phi_t_minus); }

  const std::string& name() const;
  int charge_shift() const;
  TRational a(int n) const;
  TRational c(int n) const;

  const SymFunc& multiplication_coefficient(int k) const;

  // Coefficient of u^j in K(u) v.
  FockVector mode(int j, const FockVector& v) const;

  // mode(j, z^m f) vanishes whenever j > max_mode(m, deg f).
  int max_mode(int charge, int degree) const { return degree - 1 - charge_shift() * charge; }

  friend bool operator==(const VertexKernel& a, const VertexKernel& b) { return a.state_ == b.state_; }

 private:
  struct State;
  const DenseImage& dense_mode_on_monomial(int shift, const Partition& lambda) const;
  SymFunc compute_mode_image(int shift, const Partition& lambda) const;
  bool compute_dense_image(int shift, const Partition& lambda, DenseImage& out) const;
  const DenseImage& dense_multiplication_coefficient(int k) const;
  // Entries are never erased, so the reference stays valid.
  const SymFunc& mode_on_monomial(int shift, const Partition& lambda) const;
  std::shared_ptr<State> state_;
};

FockVector mode_apply(const VertexKernel& kernel, int j, const FockVector& v);

}  // namespace symfock
