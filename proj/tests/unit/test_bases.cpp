#include <doctest.h>

#include "support.hpp"
#include "symfock/bases.hpp"
#include "symfock/error.hpp"
#include "symfock/finite_poly.hpp"

using namespace symfock;
using symfock::test::schur_by_characters;

namespace {

const TRational t = TRational::t();

SymFunc p(std::initializer_list<int> parts, const TRational& c = TRational(1)) {
  return SymFunc::monomial(Partition(std::vector<int>(parts)), c);
}

SymFunc specialize(const SymFunc& f, const BigRational& t0) {
  SymFunc out;
  for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, TRational(c.eval_at(t0)));
  return out;
}

FinitePoly specialize(const FinitePoly& f, const BigRational& t0) { return f.evaluate_t(t0); }

FinitePoly x(std::initializer_list<int> e, const TRational& c = TRational(1)) {
  return FinitePoly::monomial(std::vector<int>(e), c);
}

}  // namespace

TEST_CASE("complete and elementary examples") {
  CHECK(complete_h(0) == 1);
  CHECK(complete_h(1) == p({1}));
  CHECK(complete_h(2) == p({1, 1}, rational(1, 2)) + p({2}, rational(1, 2)));
  CHECK(elementary_e(1) == p({1}));
  CHECK(elementary_e(2) == p({1, 1}, rational(1, 2)) - p({2}, rational(1, 2)));
  CHECK(elementary_e(3) == p({1, 1, 1}, rational(1, 6)) - p({2, 1}, rational(1, 2)) + p({3}, rational(1, 3)));
  CHECK(complete_h(-1).is_zero());
}

TEST_CASE("H(u)E(-u) = 1 in modes") {
  for (int k = 0; k <= 10; ++k) {
    SymFunc sum;
    for (int s = 0; s <= k; ++s) sum += TRational(s % 2 ? -1 : 1) * (elementary_e(s) * complete_h(k - s));
    CHECK(sum == (k == 0 ? SymFunc(1) : SymFunc()));
  }
}

TEST_CASE("Jacobi-Trudi examples") {
  CHECK(schur_jacobi_trudi(Partition{}) == 1);
  CHECK(schur_jacobi_trudi(Partition{1, 1}) == p({1, 1}, rational(1, 2)) - p({2}, rational(1, 2)));
  CHECK(schur_jacobi_trudi(Partition{2, 1}) == p({1, 1, 1}, rational(1, 3)) - p({3}, rational(1, 3)));
}

TEST_CASE("one-row and one-column Schur functions") {
  for (int k = 0; k <= 8; ++k) {
    CHECK(complete_h(k) == schur_jacobi_trudi(k ? Partition{k} : Partition{}));
    CHECK(elementary_e(k) == schur_jacobi_trudi(Partition(std::vector<int>(static_cast<std::size_t>(k), 1))));
  }
}

TEST_CASE("Jacobi-Trudi agrees with the character formula up to weight 8") {
  for (int w = 0; w <= 8; ++w)
    for (const auto& lambda : enumerate_by_weight(w)) CHECK(schur_jacobi_trudi(lambda) == schur_by_characters(lambda));
}

TEST_CASE("generalized Jacobi-Trudi tuples") {
  CHECK(jacobi_trudi_tuple({2, 1}) == schur_jacobi_trudi(Partition{2, 1}));
  CHECK(jacobi_trudi_tuple({}) == 1);
  // det[[h_1, h_2], [h_0, h_1]] with mu = (1, 2) is zero: rows repeat after the shift.
  CHECK(jacobi_trudi_tuple({1, 2}).is_zero());
  // mu = (0, 2): det[[h_0, h_1], [h_1, h_2]] = h_2 - h_1^2 = -s_(1,1).
  CHECK(jacobi_trudi_tuple({0, 2}) == -schur_jacobi_trudi(Partition{1, 1}));
}

TEST_CASE("q examples") {
  CHECK(q_series_coefficient(0) == 1);
  CHECK(q_series_coefficient(1) == p({1}, 1 - t));
  CHECK(q_series_coefficient(2) ==
        (1 - t) * (p({1, 1}, (1 - t) / TRational(2)) + p({2}, (1 + t) / TRational(2))));
}

TEST_CASE("one-row Hall-Littlewood examples") {
  CHECK(hall_littlewood_row(0) == 1);
  CHECK(hall_littlewood_row(1) == p({1}));
  CHECK(specialize(hall_littlewood_row(2), 0) == complete_h(2));
  for (int k = 0; k <= 6; ++k) CHECK(specialize(q_series_coefficient(k), 0) == complete_h(k));
}

TEST_CASE("dual Schur determinant examples") {
  CHECK(dual_schur_det(Partition{}) == 1);
  CHECK(dual_schur_det(Partition{1}) == p({1}, 1 - t));
  for (int w = 0; w <= 5; ++w)
    for (const auto& lambda : enumerate_by_weight(w))
      CHECK(specialize(dual_schur_det(lambda), 0) == schur_jacobi_trudi(lambda));
}

TEST_CASE("dual Schur functions are Schur functions under p_n -> (1 - t^n) p_n") {
  for (int w = 0; w <= 6; ++w)
    for (const auto& lambda : enumerate_by_weight(w)) CHECK(dual_schur_det(lambda) == sigma_t(schur_jacobi_trudi(lambda)));
}

TEST_CASE("bialternant examples") {
  CHECK(schur_oracle_bialternant(Partition{1}, 2) == x({1, 0}) + x({0, 1}));
  CHECK(schur_oracle_bialternant(Partition{1, 1}, 2) == x({1, 1}));
  CHECK(schur_oracle_bialternant(Partition{2}, 2) == x({2, 0}) + x({1, 1}) + x({0, 2}));
  CHECK_THROWS_AS(schur_oracle_bialternant(Partition{1, 1, 1}, 2), InvalidArgument);
}

TEST_CASE("Hall-Littlewood oracle examples") {
  CHECK(hall_littlewood_oracle(Partition{1}, 2) == x({1, 0}) + x({0, 1}));
  CHECK(hall_littlewood_oracle(Partition{2}, 2) == x({2, 0}) + x({0, 2}) + x({1, 1}, 1 - t));
  for (int w = 0; w <= 4; ++w)
    for (const auto& lambda : enumerate_by_weight(w)) {
      const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(w));
      CHECK(specialize(hall_littlewood_oracle(lambda, n), 0) == schur_oracle_bialternant(lambda, n));
    }
}

TEST_CASE("expand_in_variables examples") {
  CHECK(expand_in_variables(p({1}), 2) == x({1, 0}) + x({0, 1}));
  CHECK(expand_in_variables(complete_h(2), 2) == x({2, 0}) + x({1, 1}) + x({0, 2}));
  CHECK(expand_in_variables(elementary_e(2), 1).is_zero());
}

TEST_CASE("Jacobi-Trudi matches the bialternant in |lambda| variables up to weight 6") {
  for (int w = 1; w <= 6; ++w)
    for (const auto& lambda : enumerate_by_weight(w)) {
      const auto n = static_cast<std::size_t>(w);
      CHECK(expand_in_variables(schur_jacobi_trudi(lambda), n) == schur_oracle_bialternant(lambda, n));
    }
}

TEST_CASE("finite-variable complete and elementary oracles") {
  for (int k = 0; k <= 5; ++k)
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(expand_in_variables(complete_h(k), n) == complete_oracle(k, n));
      CHECK(expand_in_variables(elementary_e(k), n) == elementary_oracle(k, n));
    }
  CHECK(elementary_oracle(3, 2).is_zero());
}

TEST_CASE("oracles reject zero variables") {
  CHECK_THROWS(schur_oracle_bialternant(Partition{1}, 0));
  CHECK_THROWS(complete_oracle(1, 0));
}
