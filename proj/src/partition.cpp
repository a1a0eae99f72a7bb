#include "scg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "scg/errors.hpp"

namespace scg {

Partition::Partition(std::vector<Coalition> coalitions, int n) : coalitions_(std::move(coalitions)), n_(n) {
  if (auto report = validate_partition(coalitions_, n); !report.ok())
    throw ValidationError("invalid partition: " + report.describe());
  for (auto& c : coalitions_) std::sort(c.begin(), c.end());
  std::sort(coalitions_.begin(), coalitions_.end());
}

Partition Partition::grand(int n) {
  Coalition all(n);
  std::iota(all.begin(), all.end(), 0);
  return Partition({all}, n);
}

Partition Partition::singletons(int n) {
  std::vector<Coalition> cs;
  for (int i = 0; i < n; ++i) cs.push_back({i});
  return Partition(std::move(cs), n);
}

Partition Partition::from_sizes(const std::vector<int>& sizes) {
  std::vector<Coalition> cs;
  int next = 0;
  for (int s : sizes) {
    if (s < 1) throw ValidationError("coalition sizes must be positive");
    Coalition c(s);
    std::iota(c.begin(), c.end(), next);
    next += s;
    cs.push_back(std::move(c));
  }
  return Partition(std::move(cs), next);
}

std::vector<int> Partition::sizes() const {
  std::vector<int> out;
  for (const auto& c : coalitions_) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<int> Partition::size_multiset() const {
  auto out = sizes();
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::size_t Partition::coalition_of(int player) const {
  for (std::size_t i = 0; i < coalitions_.size(); ++i)
    if (std::binary_search(coalitions_[i].begin(), coalitions_[i].end(), player)) return i;
  throw ValidationError("player " + std::to_string(player) + " not in partition");
}

std::string Partition::to_string() const {
  const bool wide = n_ > 10;
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coalitions_.size(); ++i) {
    if (i) os << '|';
    for (std::size_t k = 0; k < coalitions_[i].size(); ++k) {
      if (k && wide) os << ',';
      os << coalitions_[i][k];
    }
  }
  os << ']';
  return os.str();
}

std::string PartitionReport::describe() const {
  std::ostringstream os;
  auto list = [&](const char* what, const std::vector<int>& v) {
    if (v.empty()) return;
    os << what << ':';
    for (int p : v) os << ' ' << p;
    os << "; ";
  };
  list("duplicated", duplicated);
  list("missing", missing);
  list("out of range", out_of_range);
  if (empty_coalition) os << "empty coalition; ";
  std::string s = os.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

PartitionReport validate_partition(const std::vector<Coalition>& coalitions, int n) {
  PartitionReport report;
  std::vector<int> seen(std::max(n, 0), 0);
  for (const auto& c : coalitions) {
    if (c.empty()) report.empty_coalition = true;
    for (int p : c) {
      if (p < 0 || p >= n) {
        report.out_of_range.push_back(p);
        continue;
      }
      if (++seen[p] == 2) report.duplicated.push_back(p);
    }
  }
  for (int p = 0; p < n; ++p)
    if (seen[p] == 0) report.missing.push_back(p);
  std::sort(report.duplicated.begin(), report.duplicated.end());
  std::sort(report.out_of_range.begin(), report.out_of_range.end());
  return report;
}

std::string to_string(CoalitionClass c) {
  switch (c) {
    case CoalitionClass::divisible: return "divisible";
    case CoalitionClass::remainder: return "remainder";
    case CoalitionClass::infeasible: return "infeasible";
  }
  return "?";
}

CoalitionClass classify(int size, int m) {
  if (size < 1 || m < 1) throw ValidationError("classify needs size >= 1 and m >= 1");
  if (size % m == 0) return CoalitionClass::divisible;
  if (size < m) return CoalitionClass::remainder;
  return CoalitionClass::infeasible;
}

bool is_balanced(const Partition& p, int m) {
  int small = 0;
  for (int s : p.sizes()) {
    if (s < m) {
      ++small;
    } else if (s % m != 0) {
      return false;
    }
  }
  return small <= 1;
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  std::vector<int> parts{n};
  while (true) {
    out.push_back(parts);
    // Next partition in reverse lexicographic order.
    int rem = 0;
    while (!parts.empty() && parts.back() == 1) {
      rem += 1;
      parts.pop_back();
    }
    if (parts.empty()) break;
    int k = --parts.back();
    rem += 1;
    while (rem > k) {
      parts.push_back(k);
      rem -= k;
    }
    parts.push_back(rem);
  }
  return out;
}

std::vector<Partition> enumerate_partitions_by_sizes(int n, int bound) {
  if (n > bound) throw CapExceeded("partition enumeration limited to n <= " + std::to_string(bound));
  std::vector<Partition> out;
  for (const auto& sizes : integer_partitions(n)) out.push_back(Partition::from_sizes(sizes));
  return out;
}

std::vector<Partition> enumerate_set_partitions(int n, int bound) {
  if (n > bound) throw CapExceeded("set partition enumeration limited to n <= " + std::to_string(bound));
  if (n < 1) return {};
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::vector<std::vector<int>>> strings(n + 1);
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == n) {
      strings[maxv + 1].push_back(rgs);
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  rec(1, 0);
  std::vector<Partition> out;
  for (int blocks = 1; blocks <= n; ++blocks) {
    for (const auto& s : strings[blocks]) {
      std::vector<Coalition> cs(blocks);
      for (int i = 0; i < n; ++i) cs[s[i]].push_back(i);
      out.emplace_back(std::move(cs), n);
    }
  }
  return out;
}

Partition make_balanced_partition(int n, int m, std::optional<int> block_size) {
  if (n < 1 || m < 1) throw ValidationError("make_balanced_partition needs n >= 1 and m >= 1");
  const int block = block_size.value_or(m);
  if (block < 1 || block % m != 0) throw ValidationError("block size must be a positive multiple of m");
  std::vector<int> sizes;
  int left = n;
  while (left >= block) {
    sizes.push_back(block);
    left -= block;
  }
  while (left >= m) {
    sizes.push_back(m);
    left -= m;
  }
  if (left > 0) sizes.push_back(left);
  return Partition::from_sizes(sizes);
}

}  // namespace scg
