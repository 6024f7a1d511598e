// symfock command-line front end. Exit codes: 0 success, 1 counterexample,
// 2 usage, parse or other errors. JSON goes to stdout, prose to stderr.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symfock.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

struct Failure {
  std::string message;
};

void check(sfk_status status) {
  if (status != SFK_OK && status != SFK_COUNTEREXAMPLE) throw Failure{sfk_last_error()};
}

// Owning wrappers for C API results.
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { sfk_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedSymFunc {
  sfk_symfunc* ptr = nullptr;
  ~OwnedSymFunc() { sfk_symfunc_free(ptr); }
};

std::vector<int> parse_partition(const std::string& text) {
  std::size_t length = 0;
  if (sfk_partition_parse(text.c_str(), nullptr, 0, &length) == SFK_PARSE_ERROR) throw Failure{sfk_last_error()};
  std::vector<int> parts(length);
  check(sfk_partition_parse(text.c_str(), parts.data(), parts.size(), &length));
  return parts;
}

std::string symfunc_json(const sfk_symfunc* f) {
  OwnedString s;
  check(sfk_symfunc_to_json(f, &s.ptr));
  return s.str();
}

struct ExpandArgs {
  std::string basis;
  std::string partition;
  std::optional<std::string> route;
  std::optional<std::size_t> n;
};

int run_expand(const ExpandArgs& a) {
  sfk_basis basis;
  check(sfk_basis_from_name(a.basis.c_str(), &basis));
  const std::vector<int> parts = parse_partition(a.partition);
  const std::string route_name = a.route.value_or(basis == SFK_BASIS_HL ? "vertex" : "det");
  if (route_name == "oracle") {
    if (!a.n) throw Failure{"--route oracle requires --n"};
    OwnedString out;
    check(sfk_oracle_json(basis, parts.data(), parts.size(), *a.n, &out.ptr));
    std::cout << out.str() << "\n";
    return kExitOk;
  }
  sfk_route route;
  check(sfk_route_from_name(route_name.c_str(), &route));
  OwnedSymFunc f;
  check(sfk_basis_element(basis, parts.data(), parts.size(), route, &f.ptr));
  std::cout << symfunc_json(f.ptr) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  int max_degree = 4;
  int max_mode = 3;
  std::vector<int> charges;
  std::vector<std::string> betas;
  bool corrupt = false;
};

int run_verify(const VerifyArgs& a) {
  sfk_verify_options options;
  sfk_verify_options_init(&options);
  options.max_degree = a.max_degree;
  options.max_mode = a.max_mode;
  options.charges = a.charges.data();
  options.n_charges = a.charges.size();
  std::vector<const char*> betas;
  for (const auto& b : a.betas) betas.push_back(b.c_str());
  options.betas = betas.data();
  options.n_betas = betas.size();
  options.corrupt = a.corrupt ? 1 : 0;

  OwnedString witness;
  const auto report = [](const char* line, const char* summary, void*) {
    std::cout << line << "\n" << std::flush;
    std::cerr << summary << "\n";
  };
  const sfk_status status = sfk_verify(a.suite.c_str(), &options, report, nullptr, &witness.ptr);
  check(status);
  if (status == SFK_COUNTEREXAMPLE) {
    std::cout << witness.str() << "\n";
    std::cerr << a.suite << ": counterexample found\n";
    return kExitCounterexample;
  }
  std::cerr << a.suite << ": all identities hold\n";
  return kExitOk;
}

struct KpArgs {
  std::optional<std::string> schur;
  std::optional<std::string> dualschur;
  std::optional<std::string> file;
  bool deformed = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_kp(const KpArgs& a) {
  OwnedSymFunc tau;
  if (a.file) {
    const std::string text = read_file(*a.file);
    const sfk_status status = sfk_symfunc_from_json(text.c_str(), &tau.ptr);
    if (status != SFK_OK) throw Failure{*a.file + ": " + sfk_last_error()};
  } else {
    const bool schur = a.schur.has_value();
    const std::vector<int> parts = parse_partition(schur ? *a.schur : *a.dualschur);
    check(sfk_basis_element(schur ? SFK_BASIS_SCHUR : SFK_BASIS_DUAL_SCHUR, parts.data(), parts.size(), SFK_ROUTE_DET,
                            &tau.ptr));
  }
  OwnedString witness;
  const sfk_status status = sfk_kp_check(tau.ptr, a.deformed ? 1 : 0, &witness.ptr);
  check(status);
  if (status == SFK_COUNTEREXAMPLE) {
    std::cout << witness.str() << "\n";
    std::cerr << "not a tau-function: Omega(tau (x) tau) != 0\n";
    return kExitCounterexample;
  }
  std::cout << "TAU\n";
  std::cerr << "Omega(tau (x) tau) = 0\n";
  return kExitOk;
}

int run_search(int degree_bound) {
  OwnedSymFunc found;
  check(sfk_search_negative_control(degree_bound, &found.ptr));
  if (found.ptr == nullptr) {
    std::cerr << "no non-tau combination up to degree " << degree_bound << "\n";
    return kExitCounterexample;
  }
  std::cout << symfunc_json(found.ptr) << "\n";
  std::cerr << "found a non-tau combination\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetric functions, vertex operators and KP checks"};
  app.require_subcommand(1);

  ExpandArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "Print a basis element in the power-sum basis");
  expand_cmd->add_option("basis", expand.basis, "h, e, q, schur, hl or dualschur")->required();
  expand_cmd->add_option("partition", expand.partition, "e.g. 3,1")->required();
  expand_cmd->add_option("--route", expand.route, "det, vertex, generating or oracle");
  expand_cmd->add_option("--n", expand.n, "number of variables for the oracle route");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a family of identities exactly");
  std::string suites;
  for (const char* const* s = sfk_suite_names(); *s != nullptr; ++s) suites += std::string(suites.empty() ? "" : ", ") + *s;
  verify_cmd->add_option("suite", verify.suite, suites)->required();
  verify_cmd->add_option("--max-degree", verify.max_degree, "largest weight of basis vectors")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-mode", verify.max_mode, "largest absolute mode index")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--charge", verify.charges, "charge to test on (repeatable)");
  verify_cmd->add_option("--beta", verify.betas, "Virasoro parameter, e.g. 1/2 (repeatable)");
  verify_cmd->add_flag("--corrupt", verify.corrupt)->group("");

  KpArgs kp;
  auto* kp_cmd = app.add_subcommand("kp", "Check the bilinear identity for tau");
  auto* src_schur = kp_cmd->add_option("--schur", kp.schur, "tau = s_lambda");
  auto* src_dual = kp_cmd->add_option("--dualschur", kp.dualschur, "tau = S_lambda");
  auto* src_file = kp_cmd->add_option("--file", kp.file, "tau as SymFunc JSON");
  src_schur->excludes(src_dual)->excludes(src_file);
  src_dual->excludes(src_file);
  kp_cmd->add_flag("--deformed", kp.deformed, "use the Phi_t kernels");

  int degree_bound = 4;
  auto* search_cmd = app.add_subcommand("search-nontau", "Find a combination of Schur functions that is not a tau");
  search_cmd->add_option("--degree-bound", degree_bound, "largest Schur degree")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*expand_cmd) return run_expand(expand);
    if (*verify_cmd) return run_verify(verify);
    if (*kp_cmd) {
      if (!kp.schur && !kp.dualschur && !kp.file) throw Failure{"kp needs one of --schur, --dualschur, --file"};
      return run_kp(kp);
    }
    if (*search_cmd) return run_search(degree_bound);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
