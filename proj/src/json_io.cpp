#include "symfock/json_io.hpp"

#include "symfock/error.hpp"

namespace symfock {

namespace {

Json coefficient_list(const TPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

BigRational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  throw ParseError("expected a rational as string \"p/q\" or integer");
}

TPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of coefficients");
  std::vector<BigRational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return TPolynomial(std::move(coeffs));
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

const Json& terms_array(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  return terms;
}

}  // namespace

Json to_json(const TRational& r) { return Json{{"num", coefficient_list(r.num())}, {"den", coefficient_list(r.den())}}; }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back(Json{{"p", to_json(lambda)}, {"coeff", to_json(c)}});
  return Json{{"terms", terms}};
}

Json to_json(const FockVector& v) {
  Json j = to_json(v.body);
  j["charge"] = v.charge;
  return j;
}

Json to_json(const TensorState& s) {
  Json terms = Json::array();
  for (const auto& [key, c] : s.terms())
    terms.push_back(Json{{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", to_json(c)}});
  return Json{{"left_charge", s.left_charge()}, {"right_charge", s.right_charge()}, {"terms", terms}};
}

Json to_json(const FinitePoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"x", e}, {"coeff", to_json(c)}});
  return Json{{"variables", f.variables()}, {"terms", terms}};
}

TRational trational_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return TRational(rational_from_json(j));
  TPolynomial num = polynomial_from_json(field(j, "num"));
  TPolynomial den = polynomial_from_json(field(j, "den"));
  if (den.is_zero()) throw ParseError("zero denominator");
  return TRational::make(std::move(num), std::move(den));
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("partition entries must be integers");
    long v = x.get<long>();
    if (v < 0) throw ParseError("partition entries must be nonnegative");
    if (v > 1000000) throw ParseError("partition entry too large");
    if (v > 0) parts.push_back(static_cast<int>(v));
  }
  try {
    return Partition(parts);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid partition: ") + e.what());
  }
}

SymFunc symfunc_from_json(const Json& j) {
  SymFunc f;
  for (const auto& term : terms_array(j)) f.add_term(partition_from_json(field(term, "p")), trational_from_json(field(term, "coeff")));
  return f;
}

FockVector fock_vector_from_json(const Json& j) { return {int_field(j, "charge"), symfunc_from_json(j)}; }

TensorState tensor_state_from_json(const Json& j) {
  TensorState s(int_field(j, "left_charge"), int_field(j, "right_charge"));
  for (const auto& term : terms_array(j))
    s.add_term(partition_from_json(field(term, "left")), partition_from_json(field(term, "right")),
               trational_from_json(field(term, "coeff")));
  return s;
}

SymFunc parse_symfunc_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return symfunc_from_json(j);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid SymFunc JSON: ") + e.what());
  }
}

}  // namespace symfock
