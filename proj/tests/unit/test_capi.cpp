#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "symfock.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sfk_string_free(s);
  return out;
}

sfk_symfunc* element(sfk_basis basis, std::vector<int> parts, sfk_route route) {
  sfk_symfunc* f = nullptr;
  REQUIRE(sfk_basis_element(basis, parts.data(), parts.size(), route, &f) == SFK_OK);
  return f;
}

bool same(const sfk_symfunc* a, const sfk_symfunc* b) {
  int eq = -1;
  REQUIRE(sfk_symfunc_equal(a, b, &eq) == SFK_OK);
  return eq == 1;
}

}  // namespace

TEST_CASE("names round-trip") {
  for (int b = SFK_BASIS_H; b <= SFK_BASIS_DUAL_SCHUR; ++b) {
    sfk_basis out;
    REQUIRE(sfk_basis_from_name(sfk_basis_name(static_cast<sfk_basis>(b)), &out) == SFK_OK);
    CHECK(out == b);
  }
  sfk_route r;
  CHECK(sfk_route_from_name("generating", &r) == SFK_OK);
  CHECK(r == SFK_ROUTE_GENERATING);
  CHECK(sfk_route_from_name("sideways", &r) == SFK_INVALID_ARGUMENT);
  CHECK(std::string(sfk_last_error()).size() > 0);
}

TEST_CASE("partition parsing") {
  int parts[4];
  size_t n = 0;
  CHECK(sfk_partition_parse("3,1", parts, 4, &n) == SFK_OK);
  CHECK(n == 2);
  CHECK(parts[0] == 3);
  CHECK(parts[1] == 1);
  CHECK(sfk_partition_parse("1,2", parts, 4, &n) == SFK_PARSE_ERROR);
  CHECK(sfk_partition_parse("5,4,3,2,1", parts, 4, &n) == SFK_INVALID_ARGUMENT);
  CHECK(n == 5);
}

TEST_CASE("routes agree through the C interface") {
  sfk_symfunc* det = element(SFK_BASIS_SCHUR, {2, 1}, SFK_ROUTE_DET);
  sfk_symfunc* vtx = element(SFK_BASIS_SCHUR, {2, 1}, SFK_ROUTE_VERTEX);
  sfk_symfunc* gen = element(SFK_BASIS_SCHUR, {2, 1}, SFK_ROUTE_GENERATING);
  CHECK(same(det, vtx));
  CHECK(same(det, gen));
  char* json = nullptr;
  REQUIRE(sfk_symfunc_to_json(det, &json) == SFK_OK);
  const std::string text = take(json);
  CHECK(text == R"({"terms":[{"coeff":{"den":["1"],"num":["-1/3"]},"p":[3]},{"coeff":{"den":["1"],"num":["1/3"]},"p":[1,1,1]}]})");
  sfk_symfunc* back = nullptr;
  REQUIRE(sfk_symfunc_from_json(text.c_str(), &back) == SFK_OK);
  CHECK(same(back, det));
  sfk_symfunc_free(back);
  sfk_symfunc_free(det);
  sfk_symfunc_free(vtx);
  sfk_symfunc_free(gen);
  sfk_symfunc* out = nullptr;
  const int one[] = {1};
  CHECK(sfk_basis_element(SFK_BASIS_HL, one, 1, SFK_ROUTE_DET, &out) == SFK_INVALID_ARGUMENT);
  CHECK(out == nullptr);
}

TEST_CASE("malformed input is reported, not thrown") {
  sfk_symfunc* f = nullptr;
  CHECK(sfk_symfunc_from_json("{", &f) == SFK_PARSE_ERROR);
  CHECK(sfk_symfunc_from_json(R"({"terms":[{"p":[1],"coeff":{"num":["1"],"den":["0"]}}]})", &f) == SFK_PARSE_ERROR);
  CHECK(f == nullptr);
  CHECK(sfk_symfunc_from_json(nullptr, &f) == SFK_INVALID_ARGUMENT);
}

TEST_CASE("oracle JSON") {
  const int two[] = {2};
  char* json = nullptr;
  REQUIRE(sfk_oracle_json(SFK_BASIS_SCHUR, two, 1, 2, &json) == SFK_OK);
  CHECK(take(json).find("\"variables\":2") != std::string::npos);
  const int tall[] = {1, 1, 1};
  CHECK(sfk_oracle_json(SFK_BASIS_SCHUR, tall, 3, 2, &json) == SFK_INVALID_ARGUMENT);
  CHECK(sfk_oracle_json(SFK_BASIS_DUAL_SCHUR, two, 1, 2, &json) == SFK_INVALID_ARGUMENT);
}

TEST_CASE("KP checks and the negative control") {
  sfk_symfunc* s = element(SFK_BASIS_SCHUR, {3, 1}, SFK_ROUTE_DET);
  char* witness = nullptr;
  CHECK(sfk_kp_check(s, 0, &witness) == SFK_OK);
  CHECK(witness == nullptr);
  sfk_symfunc_free(s);
  sfk_symfunc* d = element(SFK_BASIS_DUAL_SCHUR, {2, 1}, SFK_ROUTE_DET);
  CHECK(sfk_kp_check(d, 1, nullptr) == SFK_OK);
  sfk_symfunc_free(d);
  sfk_symfunc* bad = nullptr;
  REQUIRE(sfk_search_negative_control(4, &bad) == SFK_OK);
  REQUIRE(bad != nullptr);
  CHECK(sfk_kp_check(bad, 0, &witness) == SFK_COUNTEREXAMPLE);
  CHECK(take(witness).find("\"left_charge\":1") != std::string::npos);
  sfk_symfunc_free(bad);
  REQUIRE(sfk_search_negative_control(1, &bad) == SFK_OK);
  CHECK(bad == nullptr);
}

TEST_CASE("verification through the C interface") {
  std::vector<std::string> lines;
  auto collect = [](const char* json, const char*, void* user) {
    static_cast<std::vector<std::string>*>(user)->push_back(json);
  };
  sfk_verify_options o;
  sfk_verify_options_init(&o);
  o.max_degree = 3;
  o.max_mode = 2;
  char* witness = nullptr;
  CHECK(sfk_verify("fermion", &o, collect, &lines, &witness) == SFK_OK);
  CHECK(witness == nullptr);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("\"ok\":true") != std::string::npos);
  o.corrupt = 1;
  CHECK(sfk_verify("fermion", &o, nullptr, nullptr, &witness) == SFK_COUNTEREXAMPLE);
  CHECK_FALSE(take(witness).empty());
  const char* betas[] = {"1/2", "x"};
  o.corrupt = 0;
  o.betas = betas;
  o.n_betas = 2;
  CHECK(sfk_verify("virasoro", &o, nullptr, nullptr, &witness) == SFK_PARSE_ERROR);
  o.n_betas = 0;
  CHECK(sfk_verify("nonsense", &o, nullptr, nullptr, &witness) == SFK_INVALID_ARGUMENT);
  std::size_t count = 0;
  for (const char* const* n = sfk_suite_names(); *n; ++n) ++count;
  CHECK(count == 10);
}
