#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symfock/exact.hpp"

namespace symfock {

/// Weakly decreasing sequence of positive integers. Zero parts are never
/// stored; the empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Sorts and drops zeros; throws on negative entries.
  static Partition from_multiset(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const { return weight_; }
  // lambda_i with 1-based index; 0 past the end.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  std::map<int, int> multiplicities() const;
  Partition conjugate() const;
  // z_lambda = prod_i i^{m_i} m_i!
  BigInteger z_factor() const;

  // Multiset union (product of power-sum monomials).
  Partition merged(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  struct Trusted {};
  Partition(std::vector<int> parts, Trusted);
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Orders partitions reverse-lexicographically: (3) before (2,1) before (1,1,1).
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

// All partitions of w, reverse-lexicographic.
std::vector<Partition> enumerate_by_weight(int w);

// Cached enumerate_by_weight(w); the reference stays valid for the program's lifetime.
const std::vector<Partition>& partitions_of_weight(int w);
// Position of lambda in partitions_of_weight(lambda.weight()).
std::uint32_t partition_rank(const Partition& lambda);

// Partitions of every weight 0..max_weight, grouped by weight ascending.
std::vector<Partition> enumerate_up_to_weight(int max_weight);

// Number of partitions of w by the standard coin-change recurrence.
BigInteger partition_count(int w);

// Parses "3,1", "[3,1]", "" or "0" style arguments.
Partition parse_partition(const std::string& text);

}  // namespace symfock
