#include <doctest.h>

#include <cstdlib>
#include <string>

#include "symfock/error.hpp"
#include "symfock/verify.hpp"

using namespace symfock;

namespace {

VerifyOptions small(int degree, int modes) {
  VerifyOptions o;
  o.max_degree = degree;
  o.max_mode = modes;
  return o;
}

// Runs fn with SF_THREADS set to n, restoring the previous value.
template <class F>
auto with_threads(const char* n, F&& fn) {
  const char* old = std::getenv("SF_THREADS");
  const std::string saved = old ? old : "";
  setenv("SF_THREADS", n, 1);
  auto result = fn();
  if (old)
    setenv("SF_THREADS", saved.c_str(), 1);
  else
    unsetenv("SF_THREADS");
  return result;
}

}  // namespace

TEST_CASE("every suite passes in a small window") {
  for (const auto& name : suite_names()) {
    VerifyOptions o = small(3, 2);
    if (name == "virasoro") o.max_mode = 1;
    std::size_t reports = 0;
    const SuiteResult r = run_suite(name, o, [&](const IdentityReport& rep) {
      ++reports;
      CHECK(rep.ok);
      CHECK(rep.instances > 0);
    });
    CHECK_MESSAGE(r.ok, name);
    CHECK(reports == r.reports.size());
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("corrupted kernels fail every kernel suite with a witness") {
  for (const char* name : {"fermion", "heisenberg", "virasoro", "kernel-factorization"}) {
    VerifyOptions o = small(3, 2);
    o.corrupt = true;
    o.betas = {rational(1, 2)};
    const SuiteResult r = run_suite(name, o);
    CHECK_FALSE_MESSAGE(r.ok, name);
    REQUIRE(r.witness.has_value());
    CHECK((*r.witness)["suite"] == name);
    CHECK(r.witness->contains("identity"));
    CHECK(r.witness->contains("input"));
    CHECK((*r.witness)["lhs"] != (*r.witness)["rhs"]);
    CHECK_FALSE(r.reports.back().ok);
  }
}

TEST_CASE("invalid suite requests are rejected") {
  CHECK_THROWS_AS(run_suite("nonsense", small(2, 2)), InvalidArgument);
  VerifyOptions o = small(2, 2);
  o.corrupt = true;
  CHECK_THROWS_AS(run_suite("duality", o), InvalidArgument);
  CHECK_THROWS_AS(run_suite("fermion", small(-1, 2)), InvalidArgument);
  VerifyOptions none = small(2, 2);
  none.charges.clear();
  CHECK_THROWS_AS(run_suite("fermion", none), InvalidArgument);
}

TEST_CASE("witness selection does not depend on the worker count") {
  VerifyOptions o = small(4, 3);
  o.corrupt = true;
  const auto one = with_threads("1", [&] { return run_suite("fermion", o); });
  const auto four = with_threads("4", [&] { return run_suite("fermion", o); });
  REQUIRE(one.witness.has_value());
  REQUIRE(four.witness.has_value());
  CHECK(one.witness->dump() == four.witness->dump());
}

TEST_CASE("check_identities reports the first failing identity") {
  const auto vectors = basis_vectors(2, {0});
  auto ids = heisenberg_bracket_identities(FermionPair{}, 2);
  REQUIRE(ids.size() > 3);
  ModeExpression shifted = ids[2].rhs;
  shifted.add_identity(TRational(1));
  ids[2].rhs = shifted;
  ids[3].rhs = shifted;
  const FamilyVerdict v = check_identities(ids, vectors);
  CHECK_FALSE(v.ok);
  CHECK(v.failing_identity == 2);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->input == FockVector::vacuum());
}
