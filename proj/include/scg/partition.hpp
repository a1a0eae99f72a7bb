#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scg {

/// Sorted player indices of one communicating group.
using Coalition = std::vector<int>;

/// Communication partition of players 0..n-1. Coalitions are stored sorted,
/// and ordered by their smallest member.
class Partition {
 public:
  /// Canonicalizes and validates. Throws ValidationError.
  Partition(std::vector<Coalition> coalitions, int n);

  static Partition grand(int n);
  static Partition singletons(int n);
  /// Consecutive blocks of players with the given sizes.
  static Partition from_sizes(const std::vector<int>& sizes);

  const std::vector<Coalition>& coalitions() const noexcept { return coalitions_; }
  std::size_t size() const noexcept { return coalitions_.size(); }
  const Coalition& operator[](std::size_t i) const { return coalitions_[i]; }
  int players() const noexcept { return n_; }

  /// Coalition sizes in coalition order.
  std::vector<int> sizes() const;
  /// Coalition sizes sorted descending.
  std::vector<int> size_multiset() const;
  /// Index of the coalition holding `player`.
  std::size_t coalition_of(int player) const;

  /// "[01|23|4]"-style notation (with commas once indices exceed 9).
  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Coalition> coalitions_;
  int n_;
};

struct PartitionReport {
  std::vector<int> duplicated;
  std::vector<int> missing;
  std::vector<int> out_of_range;
  bool empty_coalition = false;

  bool ok() const noexcept {
    return duplicated.empty() && missing.empty() && out_of_range.empty() && !empty_coalition;
  }
  std::string describe() const;
};

PartitionReport validate_partition(const std::vector<Coalition>& coalitions, int n);

enum class CoalitionClass {
  divisible,   // m | size
  remainder,   // size < m
  infeasible,  // size > m, m does not divide size
};

std::string to_string(CoalitionClass c);

CoalitionClass classify(int size, int m);

/// At most one coalition smaller than m; every other size divisible by m.
bool is_balanced(const Partition& p, int m);

/// Integer partitions of n, parts descending, in reverse lexicographic order
/// ({n} first, {1,...,1} last).
std::vector<std::vector<int>> integer_partitions(int n);

/// One canonical partition per coalition-size multiset. Throws CapExceeded if
/// n > bound.
std::vector<Partition> enumerate_partitions_by_sizes(int n, int bound = 10);

/// Every set partition of 0..n-1, ordered by coalition count then by
/// restricted growth string. Throws CapExceeded if n > bound.
std::vector<Partition> enumerate_set_partitions(int n, int bound = 8);

/// Blocks of `block_size` (default m; must be a positive multiple of m),
/// then blocks of m, then a single remainder coalition of size < m.
Partition make_balanced_partition(int n, int m, std::optional<int> block_size = std::nullopt);

}  // namespace scg
