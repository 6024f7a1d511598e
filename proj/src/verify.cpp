#include "symfock/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#include "symfock/bases.hpp"
#include "symfock/error.hpp"
#include "symfock/finite_poly.hpp"
#include "symfock/parallel.hpp"
#include "symfock/vertex_expansion.hpp"

namespace symfock {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Smallest i in [0, n) with fails(i), or kNone. Items past a known failure are skipped.
template <class Pred>
std::size_t first_failure(std::size_t n, Pred&& fails) {
  std::atomic<std::size_t> first{kNone};
  parallel_for(n, [&](std::size_t i) {
    if (i > first.load()) return;
    if (!fails(i)) return;
    std::size_t cur = first.load();
    while (i < cur && !first.compare_exchange_weak(cur, i)) {
    }
  });
  return first.load();
}

ModeOperator mode(const VertexKernel& k, int a) { return VertexModeOp{k, a}; }

std::string idx(int a) { return std::to_string(a); }

ModeExpression word(std::vector<ModeOperator> ops, const TRational& c = TRational(1)) {
  ModeExpression e;
  e.add(c, std::move(ops));
  return e;
}

ModeExpression identity_times(const TRational& c) {
  ModeExpression e;
  e.add_identity(c);
  return e;
}

ModeExpression commutator(const ModeOperator& x, const ModeOperator& y) {
  ModeExpression e;
  e.add(TRational(1), {x, y});
  e.add(TRational(-1), {y, x});
  return e;
}

int max_abs_charge(const std::vector<int>& charges) {
  int m = 0;
  for (int c : charges) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

FamilyVerdict check_identities(const std::vector<ModeIdentity>& identities, const std::vector<FockVector>& vectors) {
  FamilyVerdict verdict;
  const std::size_t nv = vectors.size(), ni = identities.size();
  if (nv == 0 || ni == 0) return verdict;
  // Per vector, the first failing identity; words are shared across identities.
  std::vector<std::size_t> first_bad(nv, kNone);
  std::atomic<std::size_t> best{kNone};
  parallel_for(nv, [&](std::size_t vi) {
    WordCache cache;
    for (std::size_t ii = 0; ii < ni; ++ii) {
      if (ii > best.load()) return;
      const auto& id = identities[ii];
      if (id.lhs.apply(vectors[vi], cache) == id.rhs.apply(vectors[vi], cache)) continue;
      first_bad[vi] = ii;
      std::size_t cur = best.load();
      while (ii < cur && !best.compare_exchange_weak(cur, ii)) {
      }
      return;
    }
  });
  const std::size_t ii = best.load();
  if (ii == kNone) return verdict;
  std::size_t vi = 0;
  while (first_bad[vi] != ii) ++vi;
  verdict.ok = false;
  verdict.failing_identity = ii;
  const auto& id = identities[ii];
  verdict.witness = IdentityWitness{vectors[vi], id.lhs.apply(vectors[vi]), id.rhs.apply(vectors[vi])};
  return verdict;
}

VertexKernel corrupted_phi_plus() {
  static const VertexKernel k(
      "Phi+~", 1, [](int n) { return TRational(n == 2 ? 2 : 1); }, [](int) { return TRational(-1); });
  return k;
}

std::vector<ModeIdentity> commutation_identities(int max_mode) {
  std::vector<ModeIdentity> out;
  auto mult = [](const char* name, const SymFunc& (*g)(int), int k) { return multiply_by(name + idx(k), g(k)); };
  auto perp = [](const char* name, const SymFunc& (*g)(int), int k) { return perp_of(name + idx(k), g(k)); };
  for (int a = 0; a <= max_mode; ++a)
    for (int b = 0; b <= max_mode; ++b) {
      // (1 - u/v) X^perp(u) X(v) = X(v) X^perp(u), X = E, H
      for (auto [name, g] : {std::pair{"e", &elementary_e}, std::pair{"h", &complete_h}}) {
        ModeExpression lhs;
        lhs.add(TRational(1), {perp(name, g, a), mult(name, g, b)});
        lhs.add(TRational(-1), {perp(name, g, a - 1), mult(name, g, b - 1)});
        out.push_back({std::string(name) + "perp_" + idx(a) + " " + name + "_" + idx(b) + " - " + name + "perp_" +
                           idx(a - 1) + " " + name + "_" + idx(b - 1) + " = " + name + "_" + idx(b) + " " + name +
                           "perp_" + idx(a),
                       lhs, word({mult(name, g, b), perp(name, g, a)})});
      }
      // X^perp(u) Y(v) = (1 + u/v) Y(v) X^perp(u), (X, Y) = (H, E), (E, H)
      for (auto [xn, x, yn, y] : {std::tuple{"h", &complete_h, "e", &elementary_e},
                                  std::tuple{"e", &elementary_e, "h", &complete_h}}) {
        ModeExpression rhs;
        rhs.add(TRational(1), {mult(yn, y, b), perp(xn, x, a)});
        rhs.add(TRational(1), {mult(yn, y, b - 1), perp(xn, x, a - 1)});
        out.push_back({std::string(xn) + "perp_" + idx(a) + " " + yn + "_" + idx(b) + " = " + yn + "_" + idx(b) + " " +
                           xn + "perp_" + idx(a) + " + " + yn + "_" + idx(b - 1) + " " + xn + "perp_" + idx(a - 1),
                       word({perp(xn, x, a), mult(yn, y, b)}), rhs});
      }
    }
  return out;
}

std::vector<ModeIdentity> fermion_identities(const VertexKernel& plus, const VertexKernel& minus, int max_mode) {
  std::vector<ModeIdentity> out;
  for (int a = -max_mode; a <= max_mode; ++a)
    for (int b = -max_mode; b <= max_mode; ++b) {
      for (const VertexKernel* k : {&plus, &minus}) {
        if (b < a) continue;
        ModeExpression lhs;
        lhs.add(TRational(1), {mode(*k, a), mode(*k, b)});
        lhs.add(TRational(1), {mode(*k, b), mode(*k, a)});
        out.push_back({"{" + k->name() + "[" + idx(a) + "], " + k->name() + "[" + idx(b) + "]} = 0", lhs, {}});
      }
      ModeExpression lhs;
      lhs.add(TRational(1), {mode(plus, a), mode(minus, b)});
      lhs.add(TRational(1), {mode(minus, b), mode(plus, a)});
      out.push_back({"{" + plus.name() + "[" + idx(a) + "], " + minus.name() + "[" + idx(b) + "]} = delta",
                     lhs, identity_times(TRational(a + b == -1 ? 1 : 0))});
    }
  return out;
}

std::vector<ModeIdentity> twisted_fermion_identities(int max_mode) {
  const VertexKernel& P = VertexKernel::psi_plus();
  const VertexKernel& M = VertexKernel::psi_minus();
  const TRational mt = -TRational::t();
  std::vector<ModeIdentity> out;
  for (int a = -max_mode; a <= max_mode; ++a)
    for (int b = -max_mode; b <= max_mode; ++b) {
      // (1 - ut/v) K(u)K(v) + (1 - vt/u) K(v)K(u) = 0 at u^a v^b
      for (const VertexKernel* k : {&P, &M}) {
        ModeExpression lhs;
        lhs.add(TRational(1), {mode(*k, a), mode(*k, b)});
        lhs.add(mt, {mode(*k, a - 1), mode(*k, b + 1)});
        lhs.add(TRational(1), {mode(*k, b), mode(*k, a)});
        lhs.add(mt, {mode(*k, b - 1), mode(*k, a + 1)});
        out.push_back({"twisted " + k->name() + k->name() + " (" + idx(a) + "," + idx(b) + ") = 0", lhs, {}});
      }
      // (1 - vt/u) Psi+(u)Psi-(v) + (1 - ut/v) Psi-(v)Psi+(u) = (1-t)^2 delta(u,v)
      ModeExpression lhs;
      lhs.add(TRational(1), {mode(P, a), mode(M, b)});
      lhs.add(mt, {mode(P, a + 1), mode(M, b - 1)});
      lhs.add(TRational(1), {mode(M, b), mode(P, a)});
      lhs.add(mt, {mode(M, b + 1), mode(P, a - 1)});
      const TRational omt = one_minus_t_pow(1);
      out.push_back({"twisted Psi+Psi- (" + idx(a) + "," + idx(b) + ") = (1-t)^2 delta", lhs,
                     identity_times(a + b == -1 ? omt * omt : TRational(0))});
    }
  return out;
}

std::vector<ModeIdentity> heisenberg_bracket_identities(const FermionPair& pair, int max_mode) {
  auto shared = std::make_shared<const FermionPair>(pair);
  std::vector<ModeIdentity> out;
  for (int j = -max_mode; j <= max_mode; ++j)
    for (int k = j + 1; k <= max_mode; ++k)
      out.push_back({"[alpha_" + idx(j) + ", alpha_" + idx(k) + "] = " + idx(j) + " delta",
                     commutator(AlphaOp{j, shared}, AlphaOp{k, shared}),
                     identity_times(TRational(j + k == 0 ? j : 0))});
  return out;
}

std::vector<ModeIdentity> heisenberg_action_identities(const FermionPair& pair, int max_mode) {
  auto shared = std::make_shared<const FermionPair>(pair);
  std::vector<ModeIdentity> out;
  for (int k = -max_mode; k <= max_mode; ++k)
    out.push_back({"alpha_" + idx(k) + " = bosonic action", word({AlphaOp{k, shared}}), word({HeisenbergActionOp{k}})});
  return out;
}

std::vector<ModeIdentity> twisted_heisenberg_identities(int max_mode) {
  std::vector<ModeIdentity> out;
  for (int j = -max_mode; j <= max_mode; ++j)
    for (int k = j + 1; k <= max_mode; ++k) {
      if (j == 0 || k == 0) continue;
      const TRational rhs = j + k == 0 ? TRational(j) / one_minus_t_pow(std::abs(j)) : TRational(0);
      out.push_back({"[h_" + idx(j) + ", h_" + idx(k) + "] = " + idx(j) + " delta/(1-t^|j|)",
                     commutator(TwistedHeisenbergOp{j}, TwistedHeisenbergOp{k}), identity_times(rhs)});
    }
  return out;
}

std::vector<ModeIdentity> virasoro_identities(const BigRational& beta, const FermionPair& pair, int max_mode) {
  auto shared = std::make_shared<const FermionPair>(pair);
  const BigRational c = virasoro_central_charge(beta);
  std::vector<ModeIdentity> out;
  for (int j = -max_mode; j <= max_mode; ++j)
    for (int k = j + 1; k <= max_mode; ++k) {
      ModeExpression rhs;
      rhs.add(TRational(j - k), {VirasoroOp{beta, j + k, shared}});
      if (j + k == 0) rhs.add_identity(TRational(BigRational(c * (j * j * j - j) / 12)));
      out.push_back({"[L_" + idx(j) + ", L_" + idx(k) + "] (beta=" + to_string(beta) + ")",
                     commutator(VirasoroOp{beta, j, shared}, VirasoroOp{beta, k, shared}), rhs});
    }
  return out;
}

std::vector<ModeIdentity> kernel_factorization_identities(const VertexKernel& phi_plus, int max_mode, int max_degree,
                                                          int max_abs_charge) {
  const VertexKernel& psi_plus = VertexKernel::psi_plus();
  const VertexKernel& psi_minus = VertexKernel::psi_minus();
  const VertexKernel& phi_minus = VertexKernel::phi_minus();
  const TRational t = TRational::t();
  std::vector<ModeIdentity> out;
  // K[a + s] vanishes on z^m f, deg f <= D, |m| <= M, once a + s > D - 1 + M, for either charge shift.
  auto s_bound = [&](int a) { return std::max(0, max_degree + max_abs_charge - a); };
  for (int a = -max_mode; a <= max_mode; ++a) {
    ModeExpression rhs;
    // Phi+(u) = H(u/t) Psi+(u), H(u/t) = sum_s t^s h_s u^{-s}
    for (int s = 0; s <= s_bound(a); ++s)
      rhs.add(t.pow(s), {multiply_by("h_" + idx(s), complete_h(s)), mode(psi_plus, a + s)});
    out.push_back({phi_plus.name() + "[" + idx(a) + "] = sum_s t^s h_s Psi+[a+s]", word({mode(phi_plus, a)}), rhs});
    ModeExpression rhs2;
    // Psi+(u) = E(-u/t) Phi+(u), E(-u/t) = sum_s (-t)^s e_s u^{-s}
    for (int s = 0; s <= s_bound(a); ++s)
      rhs2.add((-t).pow(s), {multiply_by("e_" + idx(s), elementary_e(s)), mode(phi_plus, a + s)});
    out.push_back({"Psi+[" + idx(a) + "] = sum_s (-t)^s e_s " + phi_plus.name() + "[a+s]", word({mode(psi_plus, a)}),
                   rhs2});
    ModeExpression rhs3;
    // Phi-(u) = E(-u/t) Psi-(u)
    for (int s = 0; s <= s_bound(a); ++s)
      rhs3.add((-t).pow(s), {multiply_by("e_" + idx(s), elementary_e(s)), mode(psi_minus, a + s)});
    out.push_back({"Phi-[" + idx(a) + "] = sum_s (-t)^s e_s Psi-[a+s]", word({mode(phi_minus, a)}), rhs3});
    ModeExpression rhs4;
    // Psi-(u) = H(u/t) Phi-(u)
    for (int s = 0; s <= s_bound(a); ++s)
      rhs4.add(t.pow(s), {multiply_by("h_" + idx(s), complete_h(s)), mode(phi_minus, a + s)});
    out.push_back({"Psi-[" + idx(a) + "] = sum_s t^s h_s Phi-[a+s]", word({mode(psi_minus, a)}), rhs4});
  }
  return out;
}

std::vector<ModeIdentity> conjugation_identities(int max_mode) {
  std::vector<ModeIdentity> out;
  for (int a = -max_mode; a <= max_mode; ++a)
    for (auto [twisted, plain] : {std::pair{&VertexKernel::phi_t_plus(), &VertexKernel::phi_plus()},
                                  std::pair{&VertexKernel::phi_t_minus(), &VertexKernel::phi_minus()}})
      out.push_back({twisted->name() + "[" + idx(a) + "] sigma_t = sigma_t " + plain->name() + "[" + idx(a) + "]",
                     word({mode(*twisted, a), SigmaTOp{}}), word({SigmaTOp{}, mode(*plain, a)})});
  return out;
}

Json witness_json(const std::string& suite, const ModeIdentity& identity, const IdentityWitness& w) {
  return Json{{"suite", suite},
              {"identity", identity.label},
              {"lhs_expression", identity.lhs.to_string()},
              {"rhs_expression", identity.rhs.to_string()},
              {"input", to_json(w.input)},
              {"lhs", to_json(w.lhs)},
              {"rhs", to_json(w.rhs)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"commutation",        "fermion", "twisted-fermion",
                                                 "heisenberg",         "twisted-heisenberg",
                                                 "virasoro",           "kernel-factorization",
                                                 "duality",            "bases-agreement",
                                                 "corollaries"};
  return names;
}

namespace {

class SuiteRunner {
 public:
  SuiteRunner(std::string suite, const ReportCallback& cb) : suite_(std::move(suite)), cb_(cb) {}

  // Returns false once a family has failed; later families are skipped.
  bool modes(const std::string& family, const std::vector<ModeIdentity>& ids, const std::vector<FockVector>& vectors) {
    if (!result_.ok) return false;
    FamilyVerdict v = check_identities(ids, vectors);
    IdentityReport r{family, ids.size(), vectors.size(), v.ok};
    if (!v.ok) {
      result_.ok = false;
      result_.witness = witness_json(suite_, ids[v.failing_identity], *v.witness);
    }
    report(r);
    return v.ok;
  }

  // Coefficient family over partitions; check(lambda) returns a witness on failure.
  bool coefficients(const std::string& family, const std::vector<Partition>& items,
                    const std::function<std::optional<Json>(const Partition&)>& check) {
    if (!result_.ok) return false;
    std::vector<std::optional<Json>> witnesses(items.size());
    const std::size_t fail = first_failure(items.size(), [&](std::size_t i) {
      witnesses[i] = check(items[i]);
      return witnesses[i].has_value();
    });
    IdentityReport r{family, items.size(), 0, fail == kNone};
    if (fail != kNone) {
      result_.ok = false;
      Json w = *witnesses[fail];
      w["suite"] = suite_;
      w["identity"] = family;
      result_.witness = w;
    }
    report(r);
    return r.ok;
  }

  SuiteResult take() { return std::move(result_); }

 private:
  void report(const IdentityReport& r) {
    result_.reports.push_back(r);
    if (cb_) cb_(r);
  }

  std::string suite_;
  const ReportCallback& cb_;
  SuiteResult result_;
};

std::optional<Json> compare(const Partition& lambda, const std::string& lhs_name, const SymFunc& lhs,
                            const std::string& rhs_name, const SymFunc& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Json{{"lambda", to_json(lambda)}, {"lhs_route", lhs_name}, {"rhs_route", rhs_name},
              {"lhs", to_json(lhs)},       {"rhs", to_json(rhs)}};
}

std::optional<Json> compare(const Partition& lambda, const std::string& lhs_name, const FinitePoly& lhs,
                            const std::string& rhs_name, const FinitePoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Json{{"lambda", to_json(lambda)}, {"lhs_route", lhs_name}, {"rhs_route", rhs_name},
              {"lhs", to_json(lhs)},       {"rhs", to_json(rhs)}};
}

}  // namespace

SuiteResult run_suite(const std::string& name, const VerifyOptions& o, const ReportCallback& on_report) {
  if (o.max_degree < 0 || o.max_mode < 0) throw InvalidArgument("bounds must be nonnegative");
  if (o.charges.empty()) throw InvalidArgument("at least one charge is required");
  static const std::vector<std::string> kernel_suites = {"fermion", "heisenberg", "virasoro", "kernel-factorization"};
  if (o.corrupt && std::find(kernel_suites.begin(), kernel_suites.end(), name) == kernel_suites.end())
    throw InvalidArgument("--corrupt applies only to fermion, heisenberg, virasoro and kernel-factorization");
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw InvalidArgument("unknown suite: " + name);

  SuiteRunner run(name, on_report);
  const VertexKernel plus = o.corrupt ? corrupted_phi_plus() : VertexKernel::phi_plus();
  const FermionPair pair{plus, VertexKernel::phi_minus()};
  const int M = max_abs_charge(o.charges);
  const auto vectors = basis_vectors(o.max_degree, o.charges);

  if (name == "commutation") {
    run.modes("perp-multiplication commutation relations, 0 <= a,b <= " + idx(o.max_mode), commutation_identities(o.max_mode),
              basis_vectors(o.max_degree, {0}));
  } else if (name == "fermion") {
    run.modes("charged fermion anticommutators, |a|,|b| <= " + idx(o.max_mode),
              fermion_identities(plus, VertexKernel::phi_minus(), o.max_mode), vectors);
  } else if (name == "twisted-fermion") {
    run.modes("twisted fermion relations, |a|,|b| <= " + idx(o.max_mode), twisted_fermion_identities(o.max_mode),
              vectors);
  } else if (name == "heisenberg") {
    run.modes("[alpha_j, alpha_k] = j delta_{j,-k}, |j|,|k| <= " + idx(o.max_mode),
              heisenberg_bracket_identities(pair, o.max_mode), vectors) &&
        run.modes("alpha_k = bosonic action, |k| <= " + idx(o.max_mode),
                  heisenberg_action_identities(pair, o.max_mode), vectors);
  } else if (name == "twisted-heisenberg") {
    run.modes("[h_j, h_k] = j delta_{j,-k}/(1-t^|j|), 1 <= |j|,|k| <= " + idx(o.max_mode),
              twisted_heisenberg_identities(o.max_mode), vectors);
  } else if (name == "virasoro") {
    for (const auto& beta : o.betas)
      if (!run.modes("Virasoro bracket, beta = " + to_string(beta) + ", c = " + to_string(virasoro_central_charge(beta)) +
                         ", |j|,|k| <= " + idx(o.max_mode),
                     virasoro_identities(beta, pair, o.max_mode), vectors))
        break;
  } else if (name == "kernel-factorization") {
    run.modes("Phi/Psi factorizations through H(u/t), E(-u/t), |a| <= " + idx(o.max_mode),
              kernel_factorization_identities(plus, o.max_mode, o.max_degree, M), vectors) &&
        run.modes("Phi_t[a] sigma_t = sigma_t Phi[a], |a| <= " + idx(o.max_mode), conjugation_identities(o.max_mode),
                  vectors);
  } else if (name == "duality") {
    const auto all = enumerate_up_to_weight(o.max_degree);
    run.coefficients("<S_lambda, s_mu>_t = delta, |lambda| = |mu| <= " + idx(o.max_degree), all,
                     [](const Partition& lambda) -> std::optional<Json> {
                       const SymFunc S = dual_schur_det(lambda);
                       for (const auto& mu : enumerate_by_weight(lambda.weight())) {
                         TRational v = scalar_product(S, schur_jacobi_trudi(mu), Pairing::deformed);
                         if (v == TRational(lambda == mu ? 1 : 0)) continue;
                         return Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"value", to_json(v)}};
                       }
                       return std::nullopt;
                     });
  } else if (name == "bases-agreement") {
    const auto all = enumerate_up_to_weight(o.max_degree);
    run.coefficients("s_lambda: vertex = generating Q = Jacobi-Trudi = bialternant, |lambda| <= " + idx(o.max_degree),
                     all, [](const Partition& l) -> std::optional<Json> {
                       const SymFunc jt = schur_jacobi_trudi(l);
                       if (auto w = compare(l, "vertex", basis_via_vertex(VertexBasis::schur, l), "det", jt)) return w;
                       if (auto w = compare(l, "generating", generating_coefficient_direct(GeneratingKind::Q, l), "det", jt))
                         return w;
                       const std::size_t n = std::max(1, l.weight());
                       return compare(l, "det", expand_in_variables(jt, n), "oracle", schur_oracle_bialternant(l, n));
                     }) &&
        run.coefficients("P_lambda: vertex = direct F = symmetrization oracle, |lambda| <= " + idx(o.max_degree), all,
                         [](const Partition& l) -> std::optional<Json> {
                           const SymFunc v = basis_via_vertex(VertexBasis::hall_littlewood, l);
                           if (auto w = compare(l, "vertex", v, "generating",
                                                generating_coefficient_direct(GeneratingKind::F, l)))
                             return w;
                           const std::size_t n = std::max(1, l.weight());
                           return compare(l, "vertex", expand_in_variables(v, n), "oracle", hall_littlewood_oracle(l, n));
                         }) &&
        run.coefficients("S_lambda: det = vertex = direct S = sigma_t s_lambda, |lambda| <= " + idx(o.max_degree), all,
                         [](const Partition& l) -> std::optional<Json> {
                           const SymFunc d = dual_schur_det(l);
                           if (auto w = compare(l, "vertex", basis_via_vertex(VertexBasis::dual_schur, l), "det", d))
                             return w;
                           if (auto w = compare(l, "generating", generating_coefficient_direct(GeneratingKind::S, l),
                                                "det", d))
                             return w;
                           return compare(l, "sigma_t", sigma_t(schur_jacobi_trudi(l)), "det", d);
                         });
  } else if (name == "corollaries") {
    run.coefficients("F and S from Q-expansion data, |lambda| <= " + idx(o.max_degree),
                     enumerate_up_to_weight(o.max_degree), [](const Partition& l) -> std::optional<Json> {
                       auto v = crosscheck_corollaries(l);
                       if (v.equal) return std::nullopt;
                       return compare(l, v.relation + " direct", v.lhs, v.relation + " from Q", v.rhs);
                     });
  }
  return run.take();
}

}  // namespace symfock
