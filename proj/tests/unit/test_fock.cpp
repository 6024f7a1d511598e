#include <doctest.h>

#include <memory>

#include "support.hpp"
#include "symfock/bases.hpp"
#include "symfock/fock.hpp"
#include "symfock/mode_algebra.hpp"
#include "symfock/mode_expression.hpp"
#include "symfock/verify.hpp"

using namespace symfock;
using symfock::test::schur_by_characters;

namespace {

const TRational t = TRational::t();

SymFunc p(std::initializer_list<int> parts, const TRational& c = TRational(1)) {
  return SymFunc::monomial(Partition(std::vector<int>(parts)), c);
}

FockVector vec(int m, const SymFunc& f) { return {m, f}; }

ModeExpression word(std::vector<ModeOperator> ops, const TRational& c = TRational(1)) {
  ModeExpression e;
  e.add(c, std::move(ops));
  return e;
}

ModeOperator mode(const VertexKernel& k, int a) { return VertexModeOp{k, a}; }

bool holds(const ModeExpression& lhs, const ModeExpression& rhs, int degree, std::vector<int> charges = {-1, 0, 1}) {
  return check_mode_identity(lhs, rhs, degree, charges).equal;
}

}  // namespace

TEST_CASE("multiplication coefficients") {
  CHECK(multiplication_coefficient([](int) { return TRational(1); }, 2) == complete_h(2));
  CHECK(multiplication_coefficient([](int n) { return one_minus_t_pow(n); }, 1) == p({1}, 1 - t));
  CHECK(multiplication_coefficient([](int) { return TRational(7); }, 0) == 1);
  for (int k = 0; k <= 6; ++k) {
    CHECK(multiplication_coefficient([](int) { return TRational(-1); }, k) ==
          TRational(k % 2 ? -1 : 1) * elementary_e(k));
    CHECK(multiplication_coefficient([](int n) { return one_minus_t_pow(n); }, k) == q_series_coefficient(k));
  }
}

TEST_CASE("derivation coefficients") {
  const DifferentialOperator c1 = derivation_coefficient([](int) { return TRational(1); }, 1);
  CHECK(c1.terms().size() == 1);
  CHECK(c1.terms().at(Partition{1}) == 1);
  const DifferentialOperator c2 = derivation_coefficient([](int) { return TRational(-1); }, 2);
  CHECK(c2.terms().size() == 2);
  CHECK(c2.terms().at(Partition{1, 1}) == rational(1, 2));
  CHECK(c2.terms().at(Partition{2}) == -1);
  const DifferentialOperator ct = derivation_coefficient([](int n) { return TRational(-1) / one_minus_t_pow(n); }, 1);
  CHECK(ct.terms().at(Partition{1}) == TRational(-1) / (1 - t));
  CHECK(derivation_coefficient([](int) { return TRational(3); }, 0).apply(p({2, 1})) == p({2, 1}));
  // C_2 with c = -1 on p_1^2 p_2: (1/2) * 2 p_2 - p_1^2.
  CHECK(c2.apply(p({2, 1, 1})) == p({2}) - p({1, 1}));
}

TEST_CASE("derivation coefficients of H-perp are adjoint to h") {
  // The u^r mode of H^perp(u) is the adjoint of multiplication by h_r.
  for (int r = 0; r <= 4; ++r) {
    const DifferentialOperator c = derivation_coefficient([](int) { return TRational(1); }, r);
    for (int w = 0; w <= 6; ++w)
      for (const auto& lambda : enumerate_by_weight(w)) {
        const SymFunc f = SymFunc::monomial(lambda);
        CHECK(c.apply(f) == perp_apply(complete_h(r), f, Pairing::classical));
      }
  }
}

TEST_CASE("mode application examples") {
  const auto& plus = VertexKernel::phi_plus();
  const auto& minus = VertexKernel::phi_minus();
  CHECK(mode_apply(plus, -1, FockVector::vacuum()) == vec(1, SymFunc(1)));
  CHECK(mode_apply(plus, -1, FockVector::vacuum()).charge == 1);
  for (int j = 0; j <= 4; ++j) CHECK(mode_apply(plus, j, FockVector::vacuum()).is_zero());
  const FockVector m = mode_apply(minus, -1, FockVector::vacuum());
  CHECK(m.charge == -1);
  CHECK(m.body == 1);
  CHECK(mode_apply(plus, -3, FockVector::vacuum()) == vec(1, complete_h(2)));
  CHECK(mode_apply(minus, -3, FockVector::vacuum()) == vec(-1, elementary_e(2)));
}

TEST_CASE("mode vanishing bound") {
  for (auto kind : {KernelKind::phi_plus, KernelKind::phi_minus, KernelKind::psi_plus, KernelKind::psi_minus,
                    KernelKind::phi_t_plus, KernelKind::phi_t_minus}) {
    const VertexKernel& k = VertexKernel::standard(kind);
    for (int m = -2; m <= 2; ++m)
      for (int w = 0; w <= 4; ++w)
        for (const auto& lambda : enumerate_by_weight(w)) {
          const FockVector v{m, SymFunc::monomial(lambda)};
          const int top = k.max_mode(m, w);
          CHECK(mode_apply(k, top + 1, v).is_zero());
          CHECK(mode_apply(k, top + 2, v).is_zero());
        }
  }
}

TEST_CASE("Phi+ creates Schur functions from Schur functions") {
  // Phi+[-k-1] (0, s_mu) = (1, s_(k, mu)) whenever k >= mu_1.
  for (int w = 0; w <= 4; ++w)
    for (const auto& mu : enumerate_by_weight(w))
      for (int k = std::max(1, mu.part(1)); k <= mu.part(1) + 2; ++k) {
        std::vector<int> parts{k};
        for (int x : mu.parts()) parts.push_back(x);
        const FockVector out = mode_apply(VertexKernel::phi_plus(), -k - 1, vec(0, schur_by_characters(mu)));
        CHECK(out == vec(1, schur_by_characters(Partition(parts))));
      }
}

TEST_CASE("Heisenberg mode examples") {
  CHECK(alpha_mode(0, vec(2, p({1}))) == vec(2, p({1}, 2)));
  CHECK(alpha_mode(-1, FockVector::vacuum()) == vec(0, p({1})));
  CHECK(alpha_mode(1, vec(0, p({1}))) == FockVector::vacuum());
  CHECK(alpha_mode(-3, vec(1, p({2}))) == vec(1, p({3, 2})));
  CHECK(alpha_mode(2, vec(-1, p({2, 2}))) == vec(-1, p({2}, 4)));
  CHECK(heisenberg_action(2, vec(-1, p({2, 2}))) == vec(-1, p({2}, 4)));
}

TEST_CASE("twisted Heisenberg examples") {
  CHECK(twisted_heisenberg_mode(-2, FockVector::vacuum()) == vec(0, p({2})));
  CHECK(twisted_heisenberg_mode(2, vec(0, p({2}))) == vec(0, SymFunc(TRational(2) / (1 - t * t))));
  CHECK(twisted_heisenberg_mode(1, FockVector::vacuum()).is_zero());
  CHECK(twisted_heisenberg_mode(0, vec(3, p({1}))) == vec(3, p({1}, 3)));
}

TEST_CASE("the twisted Heisenberg bracket carries the sign of the lowering index") {
  // With h_{-n} = alpha_{-n} and h_n = alpha_n/(1-t^n): [h_n, h_{-n}] = n/(1-t^n).
  for (int n = 1; n <= 3; ++n) {
    ModeExpression lhs;
    lhs.add(TRational(1), {TwistedHeisenbergOp{n}, TwistedHeisenbergOp{-n}});
    lhs.add(TRational(-1), {TwistedHeisenbergOp{-n}, TwistedHeisenbergOp{n}});
    ModeExpression right_sign, printed_sign;
    right_sign.add_identity(TRational(n) / one_minus_t_pow(n));
    // k delta_{k,-j}/(1-t^|k|) at (j, k) = (n, -n).
    printed_sign.add_identity(TRational(-n) / one_minus_t_pow(n));
    CHECK(holds(lhs, right_sign, 4));
    const auto refuted = check_mode_identity(lhs, printed_sign, 4, {0});
    CHECK_FALSE(refuted.equal);
    REQUIRE(refuted.witness.has_value());
    CHECK(refuted.witness->input == FockVector::vacuum());
  }
}

TEST_CASE("Virasoro examples") {
  CHECK(virasoro_central_charge(0) == -2);
  CHECK(virasoro_central_charge(1) == -2);
  CHECK(virasoro_central_charge(rational(1, 2)) == 1);
  CHECK(virasoro_central_charge(2) == -26);
  for (const BigRational& beta : {BigRational(0), rational(1, 2), BigRational(2)}) {
    const BigRational c = virasoro_central_charge(beta);
    ModeExpression l1l1, l2l2;
    l1l1.add(TRational(1), {VirasoroOp{beta, 1}, VirasoroOp{beta, -1}});
    l1l1.add(TRational(-1), {VirasoroOp{beta, -1}, VirasoroOp{beta, 1}});
    CHECK(holds(l1l1, word({VirasoroOp{beta, 0}}, TRational(2)), 4));
    l2l2.add(TRational(1), {VirasoroOp{beta, 2}, VirasoroOp{beta, -2}});
    l2l2.add(TRational(-1), {VirasoroOp{beta, -2}, VirasoroOp{beta, 2}});
    ModeExpression rhs = word({VirasoroOp{beta, 0}}, TRational(4));
    rhs.add_identity(TRational(BigRational(c / 2)));
    CHECK(holds(l2l2, rhs, 4));
  }
}

TEST_CASE("L_0 grades by degree and charge") {
  // L_0 on z^m f of degree d is d + m^2/2 + (1/2 - beta) m.
  for (const BigRational& beta : {BigRational(0), BigRational(1), rational(1, 2), BigRational(2)})
    for (int m = -2; m <= 2; ++m)
      for (int d = 0; d <= 4; ++d)
        for (const auto& lambda : enumerate_by_weight(d)) {
          const FockVector v{m, SymFunc::monomial(lambda)};
          const BigRational eigenvalue = d + rational(m * m, 2) + (rational(1, 2) - beta) * m;
          CHECK(virasoro_mode(beta, 0, v) == TRational(eigenvalue) * v);
        }
}

TEST_CASE("splitting on a >= 1 leaves infinitely many terms on the vacuum") {
  // Phi+[a] Phi-[-1-a] fixes the vacuum for every a >= 1, so the literal a >= 1 | a <= 0
  // split of L_0 (or alpha_0) is not a finite sum.
  for (int a = 1; a <= 10; ++a)
    CHECK(mode_apply(VertexKernel::phi_plus(), a, mode_apply(VertexKernel::phi_minus(), -1 - a, FockVector::vacuum())) ==
          FockVector::vacuum());
  CHECK(virasoro_mode(rational(1, 2), 0, FockVector::vacuum()).is_zero());
  CHECK(alpha_mode(0, FockVector::vacuum()).is_zero());
}

TEST_CASE("check_mode_identity reports identities and witnesses") {
  const auto& plus = VertexKernel::phi_plus();
  const ModeExpression e = word({mode(plus, -2), mode(plus, 0)});
  CHECK(holds(e, e, 3));
  // e_perp_1 e_1 - e_perp_0 e_0 = e_1 e_perp_1.
  ModeExpression lhs;
  lhs.add(TRational(1), {perp_of("e1", elementary_e(1)), multiply_by("e1", elementary_e(1))});
  lhs.add(TRational(-1), {perp_of("e0", elementary_e(0)), multiply_by("e0", elementary_e(0))});
  const ModeExpression rhs = word({multiply_by("e1", elementary_e(1)), perp_of("e1", elementary_e(1))});
  CHECK(holds(lhs, rhs, 4, {0}));
  // Wrong sign: the smallest failing vector is reported.
  const ModeExpression wrong = word({multiply_by("e1", elementary_e(1)), perp_of("e1", elementary_e(1))}, TRational(-1));
  const auto v = check_mode_identity(lhs, wrong, 4, {0});
  CHECK_FALSE(v.equal);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->input == vec(0, p({1})));
  CHECK(v.witness->lhs == vec(0, p({1})));
  CHECK(v.witness->rhs == vec(0, p({1}, -1)));
}

TEST_CASE("basis vector order") {
  const auto vs = basis_vectors(2, {1, -1});
  REQUIRE(vs.size() == 8);
  CHECK(vs[0] == vec(1, SymFunc(1)));
  CHECK(vs[1] == vec(1, p({1})));
  CHECK(vs[4] == vec(-1, SymFunc(1)));
}

TEST_CASE("perp-multiplication relations in a small window") {
  const auto ids = commutation_identities(3);
  CHECK(check_identities(ids, basis_vectors(4, {0})).ok);
}

TEST_CASE("charged and twisted fermion relations in a small window") {
  const auto vs = basis_vectors(3, {-1, 0, 1});
  CHECK(check_identities(fermion_identities(VertexKernel::phi_plus(), VertexKernel::phi_minus(), 3), vs).ok);
  CHECK(check_identities(fermion_identities(VertexKernel::phi_t_plus(), VertexKernel::phi_t_minus(), 2), vs).ok);
  CHECK(check_identities(twisted_fermion_identities(3), vs).ok);
}

TEST_CASE("twisted fermions do not anticommute canonically") {
  const auto vs = basis_vectors(2, {0});
  CHECK_FALSE(check_identities(fermion_identities(VertexKernel::psi_plus(), VertexKernel::psi_minus(), 2), vs).ok);
}

TEST_CASE("the shifted mixed twisted relation fails") {
  // (1 - vt/u) at u^a v^b needs Psi+[a+1] Psi-[b-1]; the [a-1][b+1] variant is refuted.
  const auto& P = VertexKernel::psi_plus();
  const auto& M = VertexKernel::psi_minus();
  const TRational omt2 = (1 - t) * (1 - t);
  bool all = true;
  for (int a = -2; a <= 2 && all; ++a)
    for (int b = -2; b <= 2 && all; ++b) {
      ModeExpression lhs;
      lhs.add(TRational(1), {mode(P, a), mode(M, b)});
      lhs.add(-t, {mode(P, a - 1), mode(M, b + 1)});
      lhs.add(TRational(1), {mode(M, b), mode(P, a)});
      lhs.add(-t, {mode(M, b + 1), mode(P, a - 1)});
      ModeExpression rhs;
      if (a + b == -1) rhs.add_identity(omt2);
      all = holds(lhs, rhs, 3);
    }
  CHECK_FALSE(all);
}

TEST_CASE("Heisenberg, twisted Heisenberg and Virasoro in a small window") {
  const auto vs = basis_vectors(3, {-1, 0, 1});
  const FermionPair pair;
  CHECK(check_identities(heisenberg_bracket_identities(pair, 3), vs).ok);
  CHECK(check_identities(heisenberg_action_identities(pair, 4), vs).ok);
  CHECK(check_identities(twisted_heisenberg_identities(3), vs).ok);
  for (const BigRational& beta : {BigRational(0), BigRational(1), rational(1, 2), BigRational(2)})
    CHECK(check_identities(virasoro_identities(beta, pair, 2), vs).ok);
}

TEST_CASE("the Virasoro bracket detects a wrong central charge") {
  const FermionPair pair;
  auto ids = virasoro_identities(rational(1, 2), pair, 2);
  // [L_-2, L_2] with beta = 1/2 operators against the c = -26 central term.
  std::vector<ModeIdentity> wrong;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i].label.find("[L_-2, L_2]") != std::string::npos) {
      ModeExpression rhs;
      rhs.add(TRational(-4), {VirasoroOp{rational(1, 2), 0}});
      rhs.add_identity(TRational(BigRational(-virasoro_central_charge(BigRational(2)) / 2)));
      wrong.push_back({ids[i].label, ids[i].lhs, rhs});
    }
  REQUIRE(wrong.size() == 1);
  CHECK_FALSE(check_identities(wrong, basis_vectors(2, {0})).ok);
}

TEST_CASE("kernel factorizations and conjugation in a small window") {
  const auto vs = basis_vectors(3, {-1, 0, 1});
  CHECK(check_identities(kernel_factorization_identities(VertexKernel::phi_plus(), 3, 3, 1), vs).ok);
  CHECK(check_identities(conjugation_identities(3), vs).ok);
}

TEST_CASE("a corrupted kernel breaks every kernel identity family") {
  const auto vs = basis_vectors(3, {-1, 0, 1});
  const VertexKernel bad = corrupted_phi_plus();
  const FermionPair pair{bad, VertexKernel::phi_minus()};
  CHECK_FALSE(check_identities(fermion_identities(bad, VertexKernel::phi_minus(), 3), vs).ok);
  CHECK_FALSE(check_identities(heisenberg_bracket_identities(pair, 3), vs).ok);
  CHECK_FALSE(check_identities(kernel_factorization_identities(bad, 3, 3, 1), vs).ok);
}
