#include "symfock/partition.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "symfock/error.hpp"

namespace symfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::vector<int> parts, Trusted) : parts_(std::move(parts)) {
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiset(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw InvalidArgument("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts), Trusted{});
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out), Trusted{});
}

BigInteger Partition::z_factor() const {
  BigInteger z = 1;
  for (auto [value, count] : multiplicities()) {
    for (int k = 0; k < count; ++k) z *= value;
    BigInteger fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(count));
    z *= fact;
  }
  return z;
}

Partition Partition::merged(const Partition& other) const {
  if (other.empty()) return *this;
  if (empty()) return other;
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(out),
             std::greater<>());
  return Partition(std::move(out), Trusted{});
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_by_weight(int w) {
  if (w < 0) throw InvalidArgument("negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(w, w, cur, out);
  return out;
}

namespace {

struct PartitionVectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

struct WeightLayer {
  std::vector<Partition> list;
  std::unordered_map<std::vector<int>, std::uint32_t, PartitionVectorHash> rank;
};

class PartitionIndex {
 public:
  const WeightLayer& layer(int w) {
    {
      std::shared_lock lock(mutex_);
      if (w < static_cast<int>(layers_.size())) return *layers_[static_cast<std::size_t>(w)];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(layers_.size()) <= w) {
      auto layer = std::make_unique<WeightLayer>();
      layer->list = enumerate_by_weight(static_cast<int>(layers_.size()));
      for (std::uint32_t i = 0; i < layer->list.size(); ++i) layer->rank.emplace(layer->list[i].parts(), i);
      layers_.push_back(std::move(layer));
    }
    return *layers_[static_cast<std::size_t>(w)];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::unique_ptr<WeightLayer>> layers_;
};

PartitionIndex& partition_index() {
  static PartitionIndex index;
  return index;
}

}  // namespace

const std::vector<Partition>& partitions_of_weight(int w) {
  if (w < 0) throw InvalidArgument("negative weight");
  return partition_index().layer(w).list;
}

std::uint32_t partition_rank(const Partition& lambda) {
  return partition_index().layer(lambda.weight()).rank.at(lambda.parts());
}

std::vector<Partition> enumerate_up_to_weight(int max_weight) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto layer = enumerate_by_weight(w);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

BigInteger partition_count(int w) {
  if (w < 0) return 0;
  std::vector<BigInteger> ways(static_cast<std::size_t>(w) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= w; ++part)
    for (int s = part; s <= w; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(w)];
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '[' && c != ']' && c != '(' && c != ')') s += c;
  std::vector<int> parts;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw ParseError("malformed partition '" + text + "'");
      if (item.size() > 6) throw ParseError("partition part too large in '" + text + "'");
      parts.push_back(std::stoi(item));
    }
  }
  std::erase(parts, 0);
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw ParseError("partition parts must be weakly decreasing: '" + text + "'");
  return Partition(std::move(parts));
}

}  // namespace symfock
