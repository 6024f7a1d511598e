#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "symfock/fock.hpp"
#include "symfock/mode_algebra.hpp"

namespace symfock {

struct VertexModeOp {
  VertexKernel kernel;
  int mode;
};
struct MultiplyOp {
  std::string label;
  std::shared_ptr<const SymFunc> factor;
};
struct PerpOp {
  std::string label;
  std::shared_ptr<const SymFunc> factor;
  Pairing pairing = Pairing::classical;
};
// Bilinear operators are built from `pair`, the canonical Phi+- when null.
struct AlphaOp {
  int mode;
  std::shared_ptr<const FermionPair> pair = nullptr;
};
struct HeisenbergActionOp {
  int mode;
};
struct TwistedHeisenbergOp {
  int mode;
  std::shared_ptr<const FermionPair> pair = nullptr;
};
struct VirasoroOp {
  BigRational beta;
  int mode;
  std::shared_ptr<const FermionPair> pair = nullptr;
};
// p_n -> (1 - t^n) p_n on the body.
struct SigmaTOp {};

using ModeOperator = std::variant<VertexModeOp, MultiplyOp, PerpOp, AlphaOp, HeisenbergActionOp, TwistedHeisenbergOp,
                                  VirasoroOp, SigmaTOp>;

MultiplyOp multiply_by(std::string label, SymFunc f);
PerpOp perp_of(std::string label, SymFunc f, Pairing pairing = Pairing::classical);

FockVector apply_operator(const ModeOperator& op, const FockVector& v);
// Labels identify operators: two ops with the same description act identically.
std::string describe(const ModeOperator& op);

// Images of one input vector under operator words, keyed by word description.
using WordCache = std::unordered_map<std::string, FockVector>;

/// Finite Q(t)-combination of operator words. Within a word, ops are written
/// left to right as in operator notation: the last op acts first. An empty
/// word is the identity.
class ModeExpression {
 public:
  struct Term {
    TRational coeff;
    std::vector<ModeOperator> ops;
  };

  ModeExpression() = default;
  ModeExpression& add(const TRational& coeff, std::vector<ModeOperator> ops);
  ModeExpression& add_identity(const TRational& coeff) { return add(coeff, {}); }

  const std::vector<Term>& terms() const { return terms_; }
  FockVector apply(const FockVector& v) const;
  // Same result; word images are shared through `cache`, which must belong to v.
  FockVector apply(const FockVector& v, WordCache& cache) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

struct IdentityWitness {
  FockVector input;
  FockVector lhs;
  FockVector rhs;
};

struct IdentityVerdict {
  bool equal = true;
  std::size_t vectors_checked = 0;
  std::optional<IdentityWitness> witness;
};

// Basis vectors z^m p_lambda, m in charges (in the given order), |lambda| <= max_degree
// by increasing weight; this fixes which witness is reported.
std::vector<FockVector> basis_vectors(int max_degree, const std::vector<int>& charges);

// Evaluates both sides on every basis vector; the reported witness is the
// first failing vector in basis_vectors order regardless of worker count.
IdentityVerdict check_mode_identity(const ModeExpression& lhs, const ModeExpression& rhs, int max_degree,
                                    const std::vector<int>& charges);

// Same check over an explicit list of vectors, run sequentially.
IdentityVerdict check_on_vectors(const ModeExpression& lhs, const ModeExpression& rhs,
                                 const std::vector<FockVector>& vectors);

}  // namespace symfock
