#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symfock/json_io.hpp"
#include "symfock/mode_expression.hpp"

namespace symfock {

struct VerifyOptions {
  int max_degree = 4;
  int max_mode = 3;
  std::vector<int> charges = {-1, 0, 1};
  std::vector<BigRational> betas = {BigRational(0), BigRational(1), rational(1, 2), BigRational(2)};
  // Replaces Phi+ by a kernel with a_2 = 2; every kernel-based suite must then fail.
  bool corrupt = false;
};

/// One family of identities within a suite, e.g. all anticommutators {Phi+[a], Phi-[b]}.
struct IdentityReport {
  std::string identity;
  std::size_t instances = 0;  // identities (or coefficient comparisons) in the family
  std::size_t vectors = 0;    // basis vectors per identity, 0 for coefficient checks
  bool ok = true;
};

struct SuiteResult {
  bool ok = true;
  std::vector<IdentityReport> reports;
  std::optional<Json> witness;
};

using ReportCallback = std::function<void(const IdentityReport&)>;

const std::vector<std::string>& suite_names();

// Runs the named suite, stopping at the first failing family. Throws
// InvalidArgument for an unknown suite or options the suite cannot honour.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options, const ReportCallback& on_report = {});

struct ModeIdentity {
  std::string label;
  ModeExpression lhs;
  ModeExpression rhs;
};

// Checks every identity on every vector. The reported failure is the first in
// (identity, vector) order regardless of worker count.
struct FamilyVerdict {
  bool ok = true;
  std::size_t failing_identity = 0;
  std::optional<IdentityWitness> witness;
};
FamilyVerdict check_identities(const std::vector<ModeIdentity>& identities, const std::vector<FockVector>& vectors);

// Identity families, exposed for tests.
std::vector<ModeIdentity> commutation_identities(int max_mode);
std::vector<ModeIdentity> fermion_identities(const VertexKernel& plus, const VertexKernel& minus, int max_mode);
std::vector<ModeIdentity> twisted_fermion_identities(int max_mode);
std::vector<ModeIdentity> heisenberg_bracket_identities(const FermionPair& pair, int max_mode);
std::vector<ModeIdentity> heisenberg_action_identities(const FermionPair& pair, int max_mode);
std::vector<ModeIdentity> twisted_heisenberg_identities(int max_mode);
std::vector<ModeIdentity> virasoro_identities(const BigRational& beta, const FermionPair& pair, int max_mode);
// s-sums are bounded by the degree and charge window they are checked on.
std::vector<ModeIdentity> kernel_factorization_identities(const VertexKernel& phi_plus, int max_mode, int max_degree,
                                                          int max_abs_charge);
std::vector<ModeIdentity> conjugation_identities(int max_mode);

VertexKernel corrupted_phi_plus();

Json witness_json(const std::string& suite, const ModeIdentity& identity, const IdentityWitness& w);

}  // namespace symfock
