#pragma once

#include <functional>

#include "symfock/fock.hpp"

namespace symfock {

/// Fermion pair whose normal-ordered bilinears define alpha_k and L_k.
struct FermionPair {
  VertexKernel plus = VertexKernel::phi_plus();
  VertexKernel minus = VertexKernel::phi_minus();
};

// Weighted normal-ordered bilinear
//   sum_{a+b=k-1} w(a,b) :Phi+[a] Phi-[b]: v
// where the creation part of Phi+ (modes a <= -1) stands to the left and the
// remaining modes a >= 0 are moved right with a fermionic sign. In the field
// variable x = 1/u, x^{-1} Phi^{+-}(1/x) = sum_a Phi^{+-}[a] x^{-a-1}, so this is
// the coefficient of x^{-k-1} (resp. x^{-k-2} for weights carrying a
// derivative) of the usual normal-ordered product. The a-range is finite
// because Phi^{+-}[j] z^m f vanishes for j > deg f - 1 -+ m.
FockVector normal_ordered_bilinear(const FermionPair& pair, int k, const std::function<TRational(int, int)>& weight,
                                   const FockVector& v);

// alpha_k = :Phi+ Phi-: mode. Agrees with alpha_{-n} = p_n, alpha_n = n d/dp_n,
// alpha_0 = charge.
FockVector alpha_mode(int k, const FockVector& v, const FermionPair& pair = {});

// The bosonic action alpha_{-n} = p_n, alpha_n = n d/dp_n, alpha_0 = m as
// operators directly on B^(m).
FockVector heisenberg_action(int k, const FockVector& v);

// h_{-n} = alpha_{-n} (n >= 0), h_n = alpha_n / (1 - t^n) (n > 0).
FockVector twisted_heisenberg_mode(int k, const FockVector& v, const FermionPair& pair = {});

// L^(beta)_k = sum_{a+b=k-1} [ -beta (a+1) + (1-beta)(b+1) ] :Phi+[a] Phi-[b]:,
// the modes of beta :d psi psi*: - (1-beta) :psi d psi*: in the field variable;
// central charge -12 beta^2 + 12 beta - 2.
FockVector virasoro_mode(const BigRational& beta, int k, const FockVector& v, const FermionPair& pair = {});

BigRational virasoro_central_charge(const BigRational& beta);

}  // namespace symfock
