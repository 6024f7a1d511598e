#include "symfock/fock.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "symfock/error.hpp"

namespace symfock {

FockVector& FockVector::operator+=(const FockVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (charge != o.charge) throw InvalidArgument("adding Fock vectors of different charge");
  body += o.body;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    charge = o.charge;
    body = -o.body;
    return *this;
  }
  if (charge != o.charge) throw InvalidArgument("subtracting Fock vectors of different charge");
  body -= o.body;
  return *this;
}

FockVector& FockVector::operator*=(const TRational& c) {
  body *= c;
  return *this;
}

bool operator==(const FockVector& a, const FockVector& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.charge == b.charge && a.body == b.body;
}

SymFunc multiplication_coefficient(const CoefficientSequence& a, int k) {
  if (k < 0) return {};
  std::vector<SymFunc> values{SymFunc(1)};
  for (int n = 1; n <= k; ++n) {
    SymFunc acc;
    for (int i = 1; i <= n; ++i) acc += values[static_cast<std::size_t>(n - i)].times_monomial(Partition({i}), a(i));
    values.push_back(acc * TRational(rational(1, n)));
  }
  return values.back();
}

namespace {

// prod over distinct values v of c_v^{m_v} / m_v!
TRational exponential_weight(const Partition& mu, const CoefficientSequence& c) {
  TRational w(1);
  for (auto [value, count] : mu.multiplicities()) {
    BigInteger fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(count));
    w *= c(value).pow(count) / TRational(BigRational(fact));
  }
  return w;
}

}  // namespace

SymFunc DifferentialOperator::apply(const SymFunc& f) const {
  SymFunc r;
  BigInteger factor;
  Partition rest;
  for (const auto& [mu, w] : terms_)
    for (const auto& [lambda, x] : f.terms())
      if (partial_derivative(mu, lambda, factor, rest)) r.add_term(rest, w * x * TRational(BigRational(factor)));
  return r;
}

DifferentialOperator derivation_coefficient(const CoefficientSequence& c, int r) {
  DifferentialOperator op;
  if (r < 0) return op;
  for (const auto& mu : enumerate_by_weight(r)) {
    TRational w = exponential_weight(mu, c);
    if (!w.is_zero()) op.terms().emplace(mu, w);
  }
  return op;
}

// A mode image with coefficients in Q[t], as integer polynomials over one
// common denominator, indexed by partition rank within `weight`.
struct DenseImage {
  bool dense = false;
  int weight = 0;
  std::vector<std::uint32_t> rank;
  std::vector<std::vector<BigInteger>> coeff;
  BigInteger den = 1;
  // Copy of coeff in machine words when every entry fits; max_bits bounds |entry|.
  bool small = false;
  int max_bits = 0;
  std::size_t max_length = 0;
  std::vector<std::vector<std::int64_t>> small_coeff;
};

static void fill_small(DenseImage& d) {
  d.small = true;
  d.max_bits = 0;
  d.max_length = 0;
  d.small_coeff.clear();
  for (const auto& c : d.coeff) {
    d.max_length = std::max(d.max_length, c.size());
    for (const auto& x : c) {
      if (!mpz_fits_slong_p(x.get_mpz_t())) d.small = false;
      d.max_bits = std::max(d.max_bits, static_cast<int>(mpz_sizeinbase(x.get_mpz_t(), 2)));
    }
  }
  if (d.small)
    for (const auto& c : d.coeff) {
      std::vector<std::int64_t> row;
      row.reserve(c.size());
      for (const auto& x : c) row.push_back(x.get_si());
      d.small_coeff.push_back(std::move(row));
    }
}

static DenseImage make_dense(const SymFunc& f) {
  DenseImage d;
  if (f.is_zero()) {
    d.dense = true;
    return d;
  }
  d.weight = f.terms().begin()->first.weight();
  BigInteger lcm = 1;
  for (const auto& [lambda, c] : f.terms()) {
    if (!c.is_polynomial() || lambda.weight() != d.weight) return d;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.num().common_den().get_mpz_t());
  }
  d.den = lcm;
  for (const auto& [lambda, c] : f.terms()) {
    d.rank.push_back(partition_rank(lambda));
    std::vector<BigInteger> ints = c.num().integer_coeffs();
    const BigInteger scale = lcm / c.num().common_den();
    if (scale != 1)
      for (auto& x : ints) x *= scale;
    d.coeff.push_back(std::move(ints));
  }
  d.dense = true;
  fill_small(d);
  return d;
}

namespace {

void set_int128(mpz_t out, __int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_set_ui(out, static_cast<unsigned long>(u >> 64));
  mpz_mul_2exp(out, out, 64);
  mpz_add_ui(out, out, static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  if (negative) mpz_neg(out, out);
}

}  // namespace

struct VertexKernel::State {
  std::string name;
  int charge_shift;
  CoefficientSequence a;
  CoefficientSequence c;

  std::mutex a_mutex;
  std::deque<SymFunc> a_values;
  std::mutex a_dense_mutex;
  std::deque<DenseImage> a_dense;

  std::shared_mutex memo_mutex;
  std::map<std::pair<int, Partition>, SymFunc> memo;
  std::map<std::pair<int, Partition>, DenseImage> dense_memo;
};

VertexKernel::VertexKernel(std::string name, int charge_shift, CoefficientSequence a, CoefficientSequence c)
    : state_(std::make_shared<State>()) {
  if (charge_shift != 1 && charge_shift != -1) throw InvalidArgument("vertex kernel charge shift must be +1 or -1");
  state_->name = std::move(name);
  state_->charge_shift = charge_shift;
  state_->a = std::move(a);
  state_->c = std::move(c);
}

const VertexKernel& VertexKernel::standard(KernelKind kind) {
  auto t_pow = [](int n) { return TRational(TPolynomial::monomial(1, n)); };
  static const VertexKernel phi_p("phi+", 1, [](int) { return TRational(1); }, [](int) { return TRational(-1); });
  static const VertexKernel phi_m("phi-", -1, [](int) { return TRational(-1); }, [](int) { return TRational(1); });
  static const VertexKernel psi_p("psi+", 1, [](int n) { return one_minus_t_pow(n); },
                                  [](int) { return TRational(-1); });
  static const VertexKernel psi_m("psi-", -1, [t_pow](int n) { return t_pow(n) - TRational(1); },
                                  [](int) { return TRational(1); });
  static const VertexKernel phi_tp("phi_t+", 1, [](int n) { return one_minus_t_pow(n); },
                                   [](int n) { return -one_minus_t_pow(n).inverse(); });
  static const VertexKernel phi_tm("phi_t-", -1, [t_pow](int n) { return t_pow(n) - TRational(1); },
                                   [](int n) { return one_minus_t_pow(n).inverse(); });
  switch (kind) {
    case KernelKind::phi_plus: return phi_p;
    case KernelKind::phi_minus: return phi_m;
    case KernelKind::psi_plus: return psi_p;
    case KernelKind::psi_minus: return psi_m;
    case KernelKind::phi_t_plus: return phi_tp;
    case KernelKind::phi_t_minus: return phi_tm;
  }
  throw InvalidArgument("unknown kernel kind");
}

const std::string& VertexKernel::name() const { return state_->name; }
int VertexKernel::charge_shift() const { return state_->charge_shift; }
TRational VertexKernel::a(int n) const { return state_->a(n); }
TRational VertexKernel::c(int n) const { return state_->c(n); }

const SymFunc& VertexKernel::multiplication_coefficient(int k) const {
  std::lock_guard lock(state_->a_mutex);
  auto& values = state_->a_values;
  if (values.empty()) values.emplace_back(1);
  while (static_cast<int>(values.size()) <= k) {
    const int n = static_cast<int>(values.size());
    SymFunc acc;
    for (int i = 1; i <= n; ++i) acc += values[static_cast<std::size_t>(n - i)].times_monomial(Partition({i}), state_->a(i));
    values.push_back(acc * TRational(rational(1, n)));
  }
  return values[static_cast<std::size_t>(k)];
}

namespace {

// Calls fn(mu) for every sub-multiset mu of lambda.
template <class Fn>
void for_each_submultiset(const Partition& lambda, Fn&& fn) {
  const auto mult = lambda.multiplicities();
  std::vector<std::pair<int, int>> groups(mult.rbegin(), mult.rend());  // descending values
  std::vector<int> chosen(groups.size(), 0);
  while (true) {
    std::vector<int> parts;
    for (std::size_t g = 0; g < groups.size(); ++g) parts.insert(parts.end(), static_cast<std::size_t>(chosen[g]), groups[g].first);
    fn(Partition(std::move(parts)));
    std::size_t g = 0;
    while (g < groups.size() && chosen[g] == groups[g].second) chosen[g++] = 0;
    if (g == groups.size()) return;
    ++chosen[g];
  }
}

}  // namespace

// Body of the coefficient of u^j in K(u) z^m p_lambda, with shift = j + eps m + 1:
// sum over mu in lambda with k = |mu| - shift >= 0 of A_k * C-weight(mu) * d_mu p_lambda.
SymFunc VertexKernel::compute_mode_image(int shift, const Partition& lambda) const {
  SymFunc result;
  if (shift > lambda.weight()) return result;
  BigInteger factor;
  Partition rest;
  for_each_submultiset(lambda, [&](const Partition& mu) {
    const int k = mu.weight() - shift;
    if (k < 0) return;
    partial_derivative(mu, lambda, factor, rest);
    TRational w = exponential_weight(mu, state_->c) * TRational(BigRational(factor));
    if (w.is_zero()) return;
    result.add_scaled(multiplication_coefficient(k).times_monomial(rest), w);
  });
  return result;
}

const DenseImage& VertexKernel::dense_multiplication_coefficient(int k) const {
  std::lock_guard lock(state_->a_dense_mutex);
  auto& values = state_->a_dense;
  while (static_cast<int>(values.size()) <= k)
    values.push_back(make_dense(multiplication_coefficient(static_cast<int>(values.size()))));
  return values[static_cast<std::size_t>(k)];
}

// compute_mode_image in dense form when every C-weight and A_k lies in Q[t];
// returns false otherwise.
bool VertexKernel::compute_dense_image(int shift, const Partition& lambda, DenseImage& out) const {
  out = DenseImage();
  out.weight = lambda.weight() - shift;
  out.dense = true;
  if (out.weight < 0) {
    out.weight = 0;
    return true;
  }
  struct Piece {
    std::vector<BigInteger> w;
    BigInteger den;
    const DenseImage* a;
    int k;
    Partition rest;
  };
  std::vector<Piece> pieces;
  bool polynomial = true;
  BigInteger factor;
  Partition rest;
  for_each_submultiset(lambda, [&](const Partition& mu) {
    if (!polynomial) return;
    const int k = mu.weight() - shift;
    if (k < 0) return;
    partial_derivative(mu, lambda, factor, rest);
    TRational w = exponential_weight(mu, state_->c) * TRational(BigRational(factor));
    if (w.is_zero()) return;
    const DenseImage& a = dense_multiplication_coefficient(k);
    if (!w.is_polynomial() || !a.dense) {
      polynomial = false;
      return;
    }
    pieces.push_back({w.num().integer_coeffs(), w.num().common_den() * a.den, &a, k, rest});
  });
  if (!polynomial) return false;

  BigInteger lcm = 1;
  for (const auto& p : pieces) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.den.get_mpz_t());
  std::vector<std::vector<BigInteger>> acc(partitions_of_weight(out.weight).size());
  for (auto& p : pieces) {
    const BigInteger scale = lcm / p.den;
    if (scale != 1)
      for (auto& c : p.w) c *= scale;
    const auto& a_parts = partitions_of_weight(p.k);
    for (std::size_t r = 0; r < p.a->rank.size(); ++r) {
      const auto& src = p.a->coeff[r];
      auto& dst = acc[partition_rank(a_parts[p.a->rank[r]].merged(p.rest))];
      const std::size_t n = p.w.size() + src.size() - 1;
      if (dst.size() < n) dst.resize(n);
      for (std::size_t i = 0; i < p.w.size(); ++i) {
        if (p.w[i] == 0) continue;
        for (std::size_t j = 0; j < src.size(); ++j)
          mpz_addmul(dst[i + j].get_mpz_t(), p.w[i].get_mpz_t(), src[j].get_mpz_t());
      }
    }
  }

  // Drop cancelled rows and trailing zeros, then divide out the content.
  BigInteger g = lcm;
  for (std::size_t r = 0; r < acc.size(); ++r) {
    auto& row = acc[r];
    while (!row.empty() && row.back() == 0) row.pop_back();
    if (row.empty()) continue;
    for (const auto& c : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    out.rank.push_back(static_cast<std::uint32_t>(r));
    out.coeff.push_back(std::move(row));
  }
  out.den = lcm;
  if (g != 1) {
    out.den /= g;
    for (auto& row : out.coeff)
      for (auto& c : row) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  fill_small(out);
  return true;
}

const SymFunc& VertexKernel::mode_on_monomial(int shift, const Partition& lambda) const {
  const auto key = std::make_pair(shift, lambda);
  {
    std::shared_lock lock(state_->memo_mutex);
    auto it = state_->memo.find(key);
    if (it != state_->memo.end()) return it->second;
  }
  SymFunc result = compute_mode_image(shift, lambda);
  std::unique_lock lock(state_->memo_mutex);
  return state_->memo.emplace(key, std::move(result)).first->second;
}

// Images that fit the dense form are kept only in that form; the others are
// kept as SymFunc in `memo`.
const DenseImage& VertexKernel::dense_mode_on_monomial(int shift, const Partition& lambda) const {
  const auto key = std::make_pair(shift, lambda);
  {
    std::shared_lock lock(state_->memo_mutex);
    auto it = state_->dense_memo.find(key);
    if (it != state_->dense_memo.end()) return it->second;
  }
  DenseImage dense;
  SymFunc image;
  if (!compute_dense_image(shift, lambda, dense)) {
    image = compute_mode_image(shift, lambda);
    dense = make_dense(image);
  }
  std::unique_lock lock(state_->memo_mutex);
  if (!dense.dense) state_->memo.emplace(key, std::move(image));
  return state_->dense_memo.emplace(key, std::move(dense)).first->second;
}

// Rebuilds a SymFunc from its dense form.
static SymFunc from_dense(const DenseImage& d) {
  SymFunc out;
  const auto& parts = partitions_of_weight(d.weight);
  for (std::size_t r = 0; r < d.rank.size(); ++r)
    out.add_term(parts[d.rank[r]], TRational(TPolynomial::from_integers(d.coeff[r], d.den)));
  return out;
}

// K[j] sum_mu x_mu p_mu = sum_mu x_mu img_mu. Terms with x_mu and img_mu in
// Q[t] are accumulated per output weight as integer polynomials over
// L = lcm(den x_mu * den img_mu); the rest goes through SymFunc arithmetic.
FockVector VertexKernel::mode(int j, const FockVector& v) const {
  const int eps = charge_shift();
  FockVector out{v.charge + eps, SymFunc()};
  const int shift = j + eps * v.charge + 1;

  struct Pending {
    const TPolynomial* x;
    const DenseImage* image;
    BigInteger den;
  };
  std::map<int, std::vector<Pending>> by_weight;
  for (const auto& [lambda, x] : v.body.terms()) {
    if (shift > lambda.weight()) continue;
    const DenseImage* image = &dense_mode_on_monomial(shift, lambda);
    if (!image->dense) {
      out.body.add_scaled(mode_on_monomial(shift, lambda), x);
      continue;
    }
    if (!x.is_polynomial()) {
      out.body.add_scaled(from_dense(*image), x);
      continue;
    }
    if (image->rank.empty()) continue;
    by_weight[image->weight].push_back({&x.num(), image, x.num().common_den() * image->den});
  }

  std::vector<std::vector<BigInteger>> acc;
  std::vector<std::vector<__int128>> acc_small;
  std::vector<std::vector<BigInteger>> ys;
  for (auto& [weight, pending] : by_weight) {
    BigInteger lcm = 1;
    for (const auto& p : pending) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.den.get_mpz_t());
    const auto& parts = partitions_of_weight(weight);
    ys.resize(pending.size());
    // Machine-word accumulation is exact when every cell stays below 2^126.
    bool small = true;
    double bound = 0;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto& p = pending[i];
      const BigInteger scale = lcm / p.den;
      auto& y = ys[i];
      y = p.x->integer_coeffs();
      int y_bits = 0;
      for (auto& c : y) {
        if (scale != 1) c *= scale;
        if (!mpz_fits_slong_p(c.get_mpz_t())) small = false;
        y_bits = std::max(y_bits, static_cast<int>(mpz_sizeinbase(c.get_mpz_t(), 2)));
      }
      if (!p.image->small) small = false;
      if (small)
        bound += std::ldexp(static_cast<double>(std::min(y.size(), p.image->max_length)), y_bits + p.image->max_bits);
    }
    if (small && bound < std::ldexp(1.0, 125)) {
      acc_small.assign(parts.size(), {});
      std::vector<std::int64_t> y64;
      for (std::size_t i = 0; i < pending.size(); ++i) {
        y64.clear();
        for (const auto& c : ys[i]) y64.push_back(c.get_si());
        const DenseImage& img = *pending[i].image;
        for (std::size_t r = 0; r < img.rank.size(); ++r) {
          const auto& src = img.small_coeff[r];
          auto& dst = acc_small[img.rank[r]];
          const std::size_t n = y64.size() + src.size() - 1;
          if (dst.size() < n) dst.resize(n, 0);
          for (std::size_t a = 0; a < y64.size(); ++a) {
            if (y64[a] == 0) continue;
            const __int128 ya = y64[a];
            for (std::size_t b = 0; b < src.size(); ++b) dst[a + b] += ya * src[b];
          }
        }
      }
      std::vector<BigInteger> cell;
      for (std::size_t r = 0; r < acc_small.size(); ++r) {
        if (acc_small[r].empty()) continue;
        cell.assign(acc_small[r].size(), BigInteger());
        for (std::size_t k = 0; k < cell.size(); ++k) set_int128(cell[k].get_mpz_t(), acc_small[r][k]);
        TPolynomial c = TPolynomial::from_integers(std::move(cell), lcm);
        if (!c.is_zero()) out.body.add_term(parts[r], TRational(std::move(c)));
      }
      continue;
    }
    acc.assign(parts.size(), {});
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto& y = ys[i];
      const DenseImage& img = *pending[i].image;
      for (std::size_t r = 0; r < img.rank.size(); ++r) {
        const auto& src = img.coeff[r];
        auto& dst = acc[img.rank[r]];
        const std::size_t n = y.size() + src.size() - 1;
        if (dst.size() < n) dst.resize(n);
        for (std::size_t a = 0; a < y.size(); ++a) {
          if (y[a] == 0) continue;
          for (std::size_t b = 0; b < src.size(); ++b)
            mpz_addmul(dst[a + b].get_mpz_t(), y[a].get_mpz_t(), src[b].get_mpz_t());
        }
      }
    }
    for (std::size_t r = 0; r < acc.size(); ++r) {
      if (acc[r].empty()) continue;
      TPolynomial c = TPolynomial::from_integers(std::move(acc[r]), lcm);
      if (!c.is_zero()) out.body.add_term(parts[r], TRational(std::move(c)));
    }
  }
  return out;
}

FockVector mode_apply(const VertexKernel& kernel, int j, const FockVector& v) { return kernel.mode(j, v); }

}  // namespace symfock
