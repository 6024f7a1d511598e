#include "symfock/mode_expression.hpp"

#include <atomic>
#include <limits>
#include <sstream>

#include "symfock/error.hpp"
#include "symfock/parallel.hpp"

namespace symfock {

MultiplyOp multiply_by(std::string label, SymFunc f) {
  return {std::move(label), std::make_shared<const SymFunc>(std::move(f))};
}

PerpOp perp_of(std::string label, SymFunc f, Pairing pairing) {
  return {std::move(label), std::make_shared<const SymFunc>(std::move(f)), pairing};
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const FermionPair& pair_or_default(const std::shared_ptr<const FermionPair>& pair) {
  static const FermionPair canonical;
  return pair ? *pair : canonical;
}

std::string pair_tag(const std::shared_ptr<const FermionPair>& pair) {
  if (!pair) return "";
  return "{" + pair->plus.name() + "," + pair->minus.name() + "}";
}

}  // namespace

FockVector apply_operator(const ModeOperator& op, const FockVector& v) {
  return std::visit(
      Overloaded{
          [&](const VertexModeOp& o) { return o.kernel.mode(o.mode, v); },
          [&](const MultiplyOp& o) { return FockVector{v.charge, *o.factor * v.body}; },
          [&](const PerpOp& o) { return FockVector{v.charge, perp_apply(*o.factor, v.body, o.pairing)}; },
          [&](const AlphaOp& o) { return alpha_mode(o.mode, v, pair_or_default(o.pair)); },
          [&](const HeisenbergActionOp& o) { return heisenberg_action(o.mode, v); },
          [&](const TwistedHeisenbergOp& o) { return twisted_heisenberg_mode(o.mode, v, pair_or_default(o.pair)); },
          [&](const VirasoroOp& o) { return virasoro_mode(o.beta, o.mode, v, pair_or_default(o.pair)); },
          [&](const SigmaTOp&) { return FockVector{v.charge, sigma_t(v.body)}; },
      },
      op);
}

std::string describe(const ModeOperator& op) {
  return std::visit(
      Overloaded{
          [](const VertexModeOp& o) { return o.kernel.name() + "[" + std::to_string(o.mode) + "]"; },
          [](const MultiplyOp& o) { return o.label; },
          [](const PerpOp& o) { return o.label + (o.pairing == Pairing::deformed ? "^perp_t" : "^perp"); },
          [](const AlphaOp& o) { return "alpha" + pair_tag(o.pair) + "[" + std::to_string(o.mode) + "]"; },
          [](const HeisenbergActionOp& o) { return "heis[" + std::to_string(o.mode) + "]"; },
          [](const TwistedHeisenbergOp& o) { return "h" + pair_tag(o.pair) + "[" + std::to_string(o.mode) + "]"; },
          [](const VirasoroOp& o) {
            return "L^(" + to_string(o.beta) + ")" + pair_tag(o.pair) + "[" + std::to_string(o.mode) + "]";
          },
          [](const SigmaTOp&) { return std::string("sigma_t"); },
      },
      op);
}

ModeExpression& ModeExpression::add(const TRational& coeff, std::vector<ModeOperator> ops) {
  if (!coeff.is_zero()) terms_.push_back({coeff, std::move(ops)});
  return *this;
}

namespace {

void accumulate(FockVector& acc, const FockVector& v, const TRational& c) {
  if (v.is_zero()) return;
  if (acc.is_zero()) acc.charge = v.charge;
  else if (acc.charge != v.charge) throw InvalidArgument("mode expression terms of different charge");
  acc.body.add_scaled(v.body, c);
}

}  // namespace

FockVector ModeExpression::apply(const FockVector& v) const {
  FockVector acc{v.charge, SymFunc()};
  for (const auto& term : terms_) {
    FockVector cur = v;
    for (auto it = term.ops.rbegin(); it != term.ops.rend() && !cur.is_zero(); ++it) cur = apply_operator(*it, cur);
    accumulate(acc, cur, term.coeff);
  }
  return acc;
}

FockVector ModeExpression::apply(const FockVector& v, WordCache& cache) const {
  FockVector acc{v.charge, SymFunc()};
  for (const auto& term : terms_) {
    const FockVector* cur = &v;
    std::string key;
    for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it) {
      key = describe(*it) + "|" + key;
      auto found = cache.find(key);
      if (found == cache.end()) found = cache.emplace(key, apply_operator(*it, *cur)).first;
      cur = &found->second;
      if (cur->is_zero()) break;
    }
    accumulate(acc, *cur, term.coeff);
  }
  return acc;
}

std::string ModeExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "[" << terms_[i].coeff.to_string() << "]";
    if (terms_[i].ops.empty()) os << "*id";
    for (const auto& op : terms_[i].ops) os << "*" << describe(op);
  }
  return os.str();
}

std::vector<FockVector> basis_vectors(int max_degree, const std::vector<int>& charges) {
  std::vector<FockVector> out;
  const auto partitions = enumerate_up_to_weight(max_degree);
  for (int m : charges)
    for (const auto& lambda : partitions) out.push_back({m, SymFunc::monomial(lambda)});
  return out;
}

IdentityVerdict check_on_vectors(const ModeExpression& lhs, const ModeExpression& rhs,
                                 const std::vector<FockVector>& vectors) {
  IdentityVerdict verdict;
  for (const auto& v : vectors) {
    ++verdict.vectors_checked;
    FockVector l = lhs.apply(v), r = rhs.apply(v);
    if (!(l == r)) {
      verdict.equal = false;
      verdict.witness = IdentityWitness{v, std::move(l), std::move(r)};
      return verdict;
    }
  }
  return verdict;
}

IdentityVerdict check_mode_identity(const ModeExpression& lhs, const ModeExpression& rhs, int max_degree,
                                    const std::vector<int>& charges) {
  const auto vectors = basis_vectors(max_degree, charges);
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> first_failure{none};
  parallel_for(vectors.size(), [&](std::size_t i) {
    if (i > first_failure.load()) return;
    if (lhs.apply(vectors[i]) == rhs.apply(vectors[i])) return;
    std::size_t cur = first_failure.load();
    while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
    }
  });
  IdentityVerdict verdict;
  const std::size_t fail = first_failure.load();
  if (fail == none) {
    verdict.vectors_checked = vectors.size();
    return verdict;
  }
  verdict.equal = false;
  verdict.vectors_checked = fail + 1;
  const auto& v = vectors[fail];
  verdict.witness = IdentityWitness{v, lhs.apply(v), rhs.apply(v)};
  return verdict;
}

}  // namespace symfock
