#include "symfock/mode_algebra.hpp"

#include "symfock/error.hpp"

namespace symfock {

namespace {

// out += sign * w * x, moving x when no rescaling is needed.
void accumulate(SymFunc& out, const TRational& w, bool negate, FockVector&& x) {
  if (!w.is_one() || negate) x.body *= negate ? -w : w;
  if (out.is_zero())
    out = std::move(x.body);
  else
    out += x.body;
}

}  // namespace

FockVector normal_ordered_bilinear(const FermionPair& pair, int k, const std::function<TRational(int, int)>& weight,
                                   const FockVector& v) {
  FockVector out{v.charge, SymFunc()};
  if (v.is_zero()) return out;
  const int d = v.degree();
  const int m = v.charge;
  // Creation part: Phi+[a] Phi-[b], a <= -1; needs b = k-1-a <= d-1+m.
  for (int a = k - d - m; a <= -1; ++a) {
    const int b = k - 1 - a;
    TRational w = weight(a, b);
    if (w.is_zero()) continue;
    FockVector inner = pair.minus.mode(b, v);
    if (inner.is_zero()) continue;
    accumulate(out.body, w, false, pair.plus.mode(a, inner));
  }
  // Annihilation part: -Phi-[b] Phi+[a], 0 <= a <= d-1-m.
  for (int a = 0; a <= d - 1 - m; ++a) {
    const int b = k - 1 - a;
    TRational w = weight(a, b);
    if (w.is_zero()) continue;
    FockVector inner = pair.plus.mode(a, v);
    if (inner.is_zero()) continue;
    accumulate(out.body, w, true, pair.minus.mode(b, inner));
  }
  out.charge = v.charge;
  return out;
}

FockVector alpha_mode(int k, const FockVector& v, const FermionPair& pair) {
  return normal_ordered_bilinear(pair, k, [](int, int) { return TRational(1); }, v);
}

FockVector heisenberg_action(int k, const FockVector& v) {
  if (k == 0) return TRational(v.charge) * v;
  if (k < 0) return {v.charge, v.body.times_monomial(Partition({-k}))};
  return {v.charge, diff_p(k, v.body) * TRational(k)};
}

FockVector twisted_heisenberg_mode(int k, const FockVector& v, const FermionPair& pair) {
  FockVector out = alpha_mode(k, v, pair);
  if (k > 0) out *= one_minus_t_pow(k).inverse();
  return out;
}

FockVector virasoro_mode(const BigRational& beta, int k, const FockVector& v, const FermionPair& pair) {
  const BigRational rest = 1 - beta;
  return normal_ordered_bilinear(
      pair, k,
      [&](int a, int b) { return TRational(BigRational(-beta * (a + 1) + rest * (b + 1))); }, v);
}

BigRational virasoro_central_charge(const BigRational& beta) { return -12 * beta * beta + 12 * beta - 2; }

}  // namespace symfock
