#include <doctest.h>

#include <set>

#include "scg/errors.hpp"
#include "scg/partition.hpp"

using namespace scg;

TEST_CASE("partition construction canonicalizes") {
  const Partition p({{4, 3}, {2, 0, 1}}, 5);
  CHECK(p.coalitions() == std::vector<Coalition>{{0, 1, 2}, {3, 4}});
  CHECK(p.to_string() == "[012|34]");
  CHECK(p.coalition_of(4) == 1);
  CHECK(p.sizes() == std::vector<int>{3, 2});
  CHECK(Partition::grand(3).size() == 1);
  CHECK(Partition::singletons(3).size() == 3);
  CHECK(Partition::from_sizes({2, 3}).coalitions() == std::vector<Coalition>{{0, 1}, {2, 3, 4}});
  CHECK(Partition::from_sizes({1, 2, 3}).size_multiset() == std::vector<int>{3, 2, 1});
}

TEST_CASE("partition validation reports problems") {
  auto r = validate_partition({{0, 1}, {1, 2}}, 4);
  CHECK(r.duplicated == std::vector<int>{1});
  CHECK(r.missing == std::vector<int>{3});
  r = validate_partition({{0, 5}, {}}, 2);
  CHECK(r.out_of_range == std::vector<int>{5});
  CHECK(r.empty_coalition);
  CHECK(validate_partition({{1}, {0}}, 2).ok());
  CHECK_THROWS_AS(Partition({{0, 1}, {1}}, 2), ValidationError);
}

TEST_CASE("coalition classes") {
  CHECK(classify(6, 3) == CoalitionClass::divisible);
  CHECK(classify(3, 3) == CoalitionClass::divisible);
  CHECK(classify(2, 3) == CoalitionClass::remainder);
  CHECK(classify(4, 3) == CoalitionClass::infeasible);
  CHECK(classify(5, 1) == CoalitionClass::divisible);
}

TEST_CASE("balanced partitions") {
  CHECK(is_balanced(Partition::from_sizes({6, 1}), 3));
  CHECK_FALSE(is_balanced(Partition::from_sizes({3, 2, 2}), 3));
  CHECK(is_balanced(Partition::from_sizes({3, 3, 1}), 3));
  CHECK_FALSE(is_balanced(Partition::from_sizes({4, 3}), 3));
  CHECK(is_balanced(Partition::from_sizes({2}), 3));
  CHECK_FALSE(is_balanced(Partition::singletons(2), 2));
}

TEST_CASE("integer partitions") {
  CHECK(integer_partitions(4).size() == 5);
  CHECK(integer_partitions(7).size() == 15);
  CHECK(integer_partitions(4).front() == std::vector<int>{4});
  CHECK(integer_partitions(4).back() == std::vector<int>{1, 1, 1, 1});
  CHECK(enumerate_partitions_by_sizes(7).size() == 15);
  CHECK_THROWS_AS(enumerate_partitions_by_sizes(11), CapExceeded);
}

TEST_CASE("set partitions are the Bell numbers, grand coalition first") {
  const int bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 7; ++n) {
    const auto all = enumerate_set_partitions(n);
    CHECK(static_cast<int>(all.size()) == bell[n]);
    CHECK(all.front() == Partition::grand(n));
    CHECK(all.back() == Partition::singletons(n));
    std::set<std::string> distinct;
    for (const auto& p : all) distinct.insert(p.to_string());
    CHECK(distinct.size() == all.size());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].size() <= all[i].size());
  }
  CHECK_THROWS_AS(enumerate_set_partitions(9), CapExceeded);
}

TEST_CASE("size-multiset enumeration covers every set partition's size class") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> from_sets, from_sizes;
    for (const auto& p : enumerate_set_partitions(n)) from_sets.insert(p.size_multiset());
    for (const auto& p : enumerate_partitions_by_sizes(n)) from_sizes.insert(p.size_multiset());
    CHECK(from_sets == from_sizes);
  }
}

TEST_CASE("balanced partition construction") {
  CHECK(make_balanced_partition(7, 3).size_multiset() == std::vector<int>{3, 3, 1});
  CHECK(make_balanced_partition(7, 3, 6).size_multiset() == std::vector<int>{6, 1});
  CHECK(make_balanced_partition(6, 3).size_multiset() == std::vector<int>{3, 3});
  CHECK_THROWS_AS(make_balanced_partition(7, 3, 4), ValidationError);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 10; ++n) CHECK(is_balanced(make_balanced_partition(n, m), m));
}
