#include "symfock.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "symfock/bases.hpp"
#include "symfock/error.hpp"
#include "symfock/finite_poly.hpp"
#include "symfock/json_io.hpp"
#include "symfock/kp.hpp"
#include "symfock/verify.hpp"
#include "symfock/vertex_expansion.hpp"

struct sfk_symfunc {
  symfock::SymFunc value;
};

namespace {

using namespace symfock;

thread_local std::string last_error;

sfk_status fail(sfk_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
sfk_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const InvalidArgument& e) {
    return fail(SFK_INVALID_ARGUMENT, e.what());
  } catch (const ParseError& e) {
    return fail(SFK_PARSE_ERROR, e.what());
  } catch (const DivisionByZero& e) {
    return fail(SFK_ARITHMETIC_ERROR, e.what());
  } catch (const PoleError& e) {
    return fail(SFK_ARITHMETIC_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SFK_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SFK_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(SFK_INTERNAL_ERROR, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) throw InvalidArgument(message);
}

Partition make_partition(const int* parts, std::size_t length) {
  require(parts != nullptr || length == 0, "null partition");
  return Partition::from_multiset(std::vector<int>(parts, parts + length));
}

constexpr const char* basis_names[] = {"h", "e", "q", "schur", "hl", "dualschur"};
constexpr const char* route_names[] = {"det", "vertex", "generating"};

bool valid_basis(sfk_basis b) { return b >= SFK_BASIS_H && b <= SFK_BASIS_DUAL_SCHUR; }
bool valid_route(sfk_route r) { return r >= SFK_ROUTE_DET && r <= SFK_ROUTE_GENERATING; }

template <class F>
SymFunc product_over_parts(const Partition& lambda, F&& factor) {
  SymFunc out(1);
  for (int k : lambda.parts()) out = out * factor(k);
  return out;
}

SymFunc build_basis(sfk_basis basis, const Partition& lambda, sfk_route route) {
  const auto unavailable = [&]() -> SymFunc {
    throw InvalidArgument(std::string("route ") + route_names[route] + " is not available for basis " +
                          basis_names[basis]);
  };
  switch (basis) {
    case SFK_BASIS_H:
      if (route != SFK_ROUTE_DET) return unavailable();
      return product_over_parts(lambda, complete_h);
    case SFK_BASIS_E:
      if (route != SFK_ROUTE_DET) return unavailable();
      return product_over_parts(lambda, elementary_e);
    case SFK_BASIS_Q:
      if (route != SFK_ROUTE_DET) return unavailable();
      return product_over_parts(lambda, q_series_coefficient);
    case SFK_BASIS_SCHUR:
      if (route == SFK_ROUTE_DET) return schur_jacobi_trudi(lambda);
      if (route == SFK_ROUTE_VERTEX) return basis_via_vertex(VertexBasis::schur, lambda);
      return generating_coefficient_direct(GeneratingKind::Q, lambda);
    case SFK_BASIS_HL:
      if (route == SFK_ROUTE_DET) return unavailable();
      if (route == SFK_ROUTE_VERTEX) return basis_via_vertex(VertexBasis::hall_littlewood, lambda);
      return generating_coefficient_direct(GeneratingKind::F, lambda);
    case SFK_BASIS_DUAL_SCHUR:
      if (route == SFK_ROUTE_DET) return dual_schur_det(lambda);
      if (route == SFK_ROUTE_VERTEX) return basis_via_vertex(VertexBasis::dual_schur, lambda);
      return generating_coefficient_direct(GeneratingKind::S, lambda);
  }
  return unavailable();
}

template <class F>
FinitePoly product_oracle(const Partition& lambda, std::size_t n, F&& factor) {
  FinitePoly out = FinitePoly::constant(n, TRational(1));
  for (int k : lambda.parts()) out = out * factor(k);
  return out;
}

// q_k(x) = sum_s h_{k-s}(x) e_s(x) (-t)^s
FinitePoly q_oracle(int k, std::size_t n) {
  FinitePoly out(n);
  TRational minus_t_pow(1);
  for (int s = 0; s <= k; ++s) {
    FinitePoly term = complete_oracle(k - s, n) * elementary_oracle(s, n);
    term *= minus_t_pow;
    out += term;
    minus_t_pow *= -TRational::t();
  }
  return out;
}

FinitePoly build_oracle(sfk_basis basis, const Partition& lambda, std::size_t n) {
  require(n >= 1, "oracle needs at least one variable");
  require(n >= lambda.length(), "oracle needs n >= length(lambda)");
  switch (basis) {
    case SFK_BASIS_H:
      return product_oracle(lambda, n, [n](int k) { return complete_oracle(k, n); });
    case SFK_BASIS_E:
      return product_oracle(lambda, n, [n](int k) { return elementary_oracle(k, n); });
    case SFK_BASIS_Q:
      return product_oracle(lambda, n, [n](int k) { return q_oracle(k, n); });
    case SFK_BASIS_SCHUR:
      return schur_oracle_bialternant(lambda, n);
    case SFK_BASIS_HL:
      return hall_littlewood_oracle(lambda, n);
    case SFK_BASIS_DUAL_SCHUR:
      break;
  }
  throw InvalidArgument(std::string("no finite-variable oracle for basis ") + basis_names[basis]);
}

Json report_json(const std::string& suite, const IdentityReport& r) {
  return Json{{"suite", suite},
              {"identity", r.identity},
              {"instances", r.instances},
              {"vectors", r.vectors},
              {"ok", r.ok}};
}

std::string report_summary(const IdentityReport& r) {
  std::ostringstream out;
  out << (r.ok ? "ok   " : "FAIL ") << r.identity << " (" << r.instances << (r.vectors ? " identities on " : " checks");
  if (r.vectors) out << r.vectors << " vectors";
  out << ")";
  return out.str();
}

}  // namespace

extern "C" {

const char* sfk_last_error(void) { return last_error.c_str(); }

void sfk_string_free(char* s) { delete[] s; }

const char* sfk_basis_name(sfk_basis basis) { return valid_basis(basis) ? basis_names[basis] : nullptr; }

const char* sfk_route_name(sfk_route route) { return valid_route(route) ? route_names[route] : nullptr; }

sfk_status sfk_basis_from_name(const char* name, sfk_basis* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    for (int i = 0; i <= SFK_BASIS_DUAL_SCHUR; ++i)
      if (std::strcmp(name, basis_names[i]) == 0) {
        *out = static_cast<sfk_basis>(i);
        return SFK_OK;
      }
    throw InvalidArgument(std::string("unknown basis: ") + name);
  });
}

sfk_status sfk_route_from_name(const char* name, sfk_route* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    for (int i = 0; i <= SFK_ROUTE_GENERATING; ++i)
      if (std::strcmp(name, route_names[i]) == 0) {
        *out = static_cast<sfk_route>(i);
        return SFK_OK;
      }
    throw InvalidArgument(std::string("unknown route: ") + name);
  });
}

sfk_status sfk_partition_parse(const char* text, int* parts, size_t capacity, size_t* length) {
  return guarded([&] {
    require(text != nullptr && length != nullptr, "null argument");
    const Partition lambda = parse_partition(text);
    *length = lambda.length();
    require(lambda.length() <= capacity, "partition buffer too small");
    if (lambda.length() > 0) {
      require(parts != nullptr, "null partition buffer");
      std::copy(lambda.parts().begin(), lambda.parts().end(), parts);
    }
    return SFK_OK;
  });
}

sfk_status sfk_symfunc_from_json(const char* json, sfk_symfunc** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new sfk_symfunc{parse_symfunc_json(json)};
    return SFK_OK;
  });
}

sfk_status sfk_symfunc_to_json(const sfk_symfunc* f, char** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = copy_string(to_json(f->value).dump());
    return SFK_OK;
  });
}

sfk_status sfk_symfunc_equal(const sfk_symfunc* a, const sfk_symfunc* b, int* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = a->value == b->value ? 1 : 0;
    return SFK_OK;
  });
}

void sfk_symfunc_free(sfk_symfunc* f) { delete f; }

sfk_status sfk_basis_element(sfk_basis basis, const int* parts, size_t length, sfk_route route, sfk_symfunc** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(valid_basis(basis), "unknown basis");
    require(valid_route(route), "unknown route");
    const Partition lambda = make_partition(parts, length);
    *out = new sfk_symfunc{build_basis(basis, lambda, route)};
    return SFK_OK;
  });
}

sfk_status sfk_oracle_json(sfk_basis basis, const int* parts, size_t length, size_t n, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(valid_basis(basis), "unknown basis");
    const Partition lambda = make_partition(parts, length);
    *out = copy_string(to_json(build_oracle(basis, lambda, n)).dump());
    return SFK_OK;
  });
}

sfk_status sfk_kp_check(const sfk_symfunc* tau, int deformed, char** witness) {
  return guarded([&] {
    require(tau != nullptr, "null argument");
    const TensorState omega = omega_apply(tau->value, tau->value, deformed != 0);
    if (omega.is_zero()) return SFK_OK;
    if (witness != nullptr) *witness = copy_string(to_json(omega).dump());
    return SFK_COUNTEREXAMPLE;
  });
}

sfk_status sfk_search_negative_control(int degree_bound, sfk_symfunc** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    std::optional<SymFunc> found = search_negative_control(degree_bound);
    *out = found ? new sfk_symfunc{std::move(*found)} : nullptr;
    return SFK_OK;
  });
}

void sfk_verify_options_init(sfk_verify_options* options) {
  if (options == nullptr) return;
  const VerifyOptions defaults;
  *options = sfk_verify_options{};
  options->max_degree = defaults.max_degree;
  options->max_mode = defaults.max_mode;
}

const char* const* sfk_suite_names(void) {
  static const std::vector<const char*> names = [] {
    std::vector<const char*> v;
    for (const auto& s : suite_names()) v.push_back(s.c_str());
    v.push_back(nullptr);
    return v;
  }();
  return names.data();
}

sfk_status sfk_verify(const char* suite, const sfk_verify_options* options, sfk_report_fn report, void* user,
                      char** witness) {
  return guarded([&] {
    require(suite != nullptr && options != nullptr, "null argument");
    require(options->max_degree >= 0, "max_degree must be nonnegative");
    require(options->max_mode >= 0, "max_mode must be nonnegative");
    VerifyOptions opts;
    opts.max_degree = options->max_degree;
    opts.max_mode = options->max_mode;
    opts.corrupt = options->corrupt != 0;
    if (options->n_charges > 0) {
      require(options->charges != nullptr, "null charge list");
      opts.charges.assign(options->charges, options->charges + options->n_charges);
    }
    if (options->n_betas > 0) {
      require(options->betas != nullptr, "null beta list");
      opts.betas.clear();
      for (std::size_t i = 0; i < options->n_betas; ++i) {
        require(options->betas[i] != nullptr, "null beta");
        opts.betas.push_back(parse_rational(options->betas[i]));
      }
    }
    const std::string name = suite;
    const SuiteResult result = run_suite(name, opts, [&](const IdentityReport& r) {
      if (report == nullptr) return;
      const std::string line = report_json(name, r).dump();
      const std::string summary = report_summary(r);
      report(line.c_str(), summary.c_str(), user);
    });
    if (result.ok) return SFK_OK;
    if (witness != nullptr && result.witness) *witness = copy_string(result.witness->dump());
    return SFK_COUNTEREXAMPLE;
  });
}

}  // extern "C"
