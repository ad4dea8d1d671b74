#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsf/rational.hpp"

namespace tsf {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is a valid value of weight 0.
class Partition {
public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts and drops zeros; accepts any multiset of nonnegative parts.
  static Partition from_unsorted(std::vector<int> parts);

  /// Parses "3,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int> &parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// n_k, the number of parts equal to k.
  int multiplicity(int k) const;

  std::string to_string() const;

  // Lexicographic on parts. The canonical order is the reverse of this one.
  friend auto operator<=>(const Partition &, const Partition &) = default;
  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// A truncation degree d >= 1, or infinity.
class Truncation {
public:
  static Truncation finite(int d);
  static Truncation infinity() { return Truncation{}; }
  /// "2" or "inf".
  static Truncation parse(std::string_view text);

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error for infinity.
  int value() const;
  /// min(d, bound); for infinity returns bound.
  int cap(int bound) const;

  std::string to_string() const;

  friend bool operator==(const Truncation &, const Truncation &) = default;
  friend auto operator<=>(const Truncation &, const Truncation &) = default;

private:
  Truncation() = default;
  std::optional<int> value_;
};

/// All partitions of n, (n) first and (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

/// Position of lambda in enumerate_partitions(|lambda|).
std::size_t partition_index(const Partition &lambda);

/// Number of partitions of n.
std::size_t partition_count(int n);

Partition conjugate(const Partition &lambda);

/// z_lambda = prod_k k^{n_k} n_k!
Integer z(const Partition &lambda);

/// (-1)^{|lambda| - l(lambda)}
int epsilon(const Partition &lambda);

/// (-d)^{sum_k n_{k(d+1)}}, and 1 for d = infinity.
Integer d_coefficient(const Partition &lambda, Truncation d);

/// Ordered tuples (mu^1, ..., mu^l) with mu^i a partition of lambda_i whose
/// combined parts are exactly mu. Equal parts of lambda are distinct slots.
std::vector<std::vector<Partition>> refinement_tuples(const Partition &lambda,
                                                      const Partition &mu);

} // namespace tsf
