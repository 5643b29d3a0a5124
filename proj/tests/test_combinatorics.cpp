#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "topochain/labels.hpp"

using namespace topo;

namespace {

// Brute-force oracle: enumerate all set partitions of {0,..,n-1} via
// restricted growth strings and keep those whose blocks are contiguous
// index ranges.
int count_contiguous_set_partitions(int n) {
  std::vector<int> rgs(n, 0);
  int count = 0;
  auto blocks_contiguous = [&]() {
    int nblocks = 0;
    for (int v : rgs) nblocks = std::max(nblocks, v + 1);
    for (int b = 0; b < nblocks; ++b) {
      int first = -1, last = -1, members = 0;
      for (int i = 0; i < n; ++i) {
        if (rgs[i] == b) {
          if (first < 0) first = i;
          last = i;
          ++members;
        }
      }
      if (last - first + 1 != members) return false;
    }
    return true;
  };
  // iterate restricted growth strings
  while (true) {
    if (blocks_contiguous()) ++count;
    int i = n - 1;
    for (; i > 0; --i) {
      int maxv = 0;
      for (int k = 0; k < i; ++k) maxv = std::max(maxv, rgs[k]);
      if (rgs[i] <= maxv) {
        ++rgs[i];
        for (int k = i + 1; k < n; ++k) rgs[k] = 0;
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return count;
}

std::vector<std::vector<Label>> block_labels(const IntervalPartition& p) {
  std::vector<std::vector<Label>> out;
  for (const auto& b : p.blocks) out.push_back(b.labels);
  return out;
}

}  // namespace

TEST_CASE("interval partition counts are 2^(n-1)") {
  for (int n = 1; n <= 12; ++n) {
    const int n1 = n / 2;
    const auto parts = enumerate_interval_partitions(IndexSet::canonical(n1, n - n1));
    CHECK(parts.size() == (1u << (n - 1)));
  }
}

TEST_CASE("partition count matches the contiguous set-partition oracle") {
  for (int n = 1; n <= 8; ++n) {
    const auto parts = enumerate_interval_partitions(IndexSet::canonical(0, n));
    CHECK(static_cast<int>(parts.size()) == count_contiguous_set_partitions(n));
  }
}

TEST_CASE("singleton set has one partition") {
  const auto parts = enumerate_interval_partitions(IndexSet{{1}});
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].blocks[0].labels == std::vector<Label>{1});
}

TEST_CASE("partitions of (-1,1,2) match the printed expansion order") {
  const auto parts = enumerate_interval_partitions(IndexSet::canonical(1, 2));
  REQUIRE(parts.size() == 4);
  CHECK(block_labels(parts[0]) == std::vector<std::vector<Label>>{{-1, 1, 2}});
  CHECK(block_labels(parts[1]) == std::vector<std::vector<Label>>{{-1}, {1, 2}});
  CHECK(block_labels(parts[2]) == std::vector<std::vector<Label>>{{-1, 1}, {2}});
  CHECK(block_labels(parts[3]) == std::vector<std::vector<Label>>{{-1}, {1}, {2}});
}

TEST_CASE("every partition is contiguous, disjoint, and reconstructs the set") {
  for (int n1 = 0; n1 <= 2; ++n1) {
    for (int n2 = 0; n2 <= 4; ++n2) {
      if (n1 + n2 == 0) continue;
      const IndexSet s = IndexSet::canonical(n1, n2);
      for (const auto& p : enumerate_interval_partitions(s)) {
        IndexSet rebuilt;
        for (const auto& b : p.blocks) {
          CHECK(!b.empty());
          CHECK(b.contiguous());
          CHECK(b.strictly_increasing());
          rebuilt.labels.insert(rebuilt.labels.end(), b.labels.begin(), b.labels.end());
        }
        CHECK(rebuilt == s);
      }
    }
  }
}

TEST_CASE("empty index set is rejected") {
  CHECK_THROWS(enumerate_interval_partitions(IndexSet{}));
}

TEST_CASE("clustered partitions") {
  SUBCASE("bare cluster gives the single trivial partition") {
    ClusteredIndexSet c{{}, IndexSet::canonical(1, 1), {}};
    const auto parts = enumerate_clustered_partitions(c);
    REQUIRE(parts.size() == 1);
    CHECK(block_labels(parts[0]) == std::vector<std::vector<Label>>{{-1, 1}});
  }

  SUBCASE("one right particle gives the two printed partitions") {
    ClusteredIndexSet c{{}, IndexSet::canonical(1, 1), IndexSet{{2}}};
    const auto parts = enumerate_clustered_partitions(c);
    REQUIRE(parts.size() == 2);
    CHECK(block_labels(parts[0]) == std::vector<std::vector<Label>>{{-1, 1, 2}});
    CHECK(block_labels(parts[1]) == std::vector<std::vector<Label>>{{-1, 1}, {2}});
  }

  SUBCASE("count is 2^(n1+n2)") {
    ClusteredIndexSet c{IndexSet{{-3, -2}}, IndexSet::canonical(1, 1), IndexSet{{2}}};
    CHECK(enumerate_clustered_partitions(c).size() == 8);
    // brute force over the 4 elements: every partition must keep -1,1 joined
    int oracle = 0;
    const IndexSet flat = c.flatten();
    for (const auto& p : enumerate_interval_partitions(flat)) {
      bool keeps_cluster = false;
      for (const auto& b : p.blocks) {
        const bool has_m1 = std::count(b.labels.begin(), b.labels.end(), -1) > 0;
        const bool has_p1 = std::count(b.labels.begin(), b.labels.end(), 1) > 0;
        if (has_m1 && has_p1) keeps_cluster = true;
        if (has_m1 != has_p1) keeps_cluster = false;
        if (has_m1 || has_p1) break;
      }
      if (keeps_cluster) ++oracle;
    }
    CHECK(oracle == 8);
  }

  SUBCASE("empty cluster is rejected") {
    ClusteredIndexSet c{IndexSet{{-1}}, {}, IndexSet{{1}}};
    CHECK_THROWS(enumerate_clustered_partitions(c));
  }
}

TEST_CASE("two-block splits") {
  SUBCASE("pair") {
    const auto splits = enumerate_two_block_splits(IndexSet::canonical(1, 1));
    REQUIRE(splits.size() == 1);
    CHECK(splits[0].left.labels == std::vector<Label>{-1});
    CHECK(splits[0].right.labels == std::vector<Label>{1});
    CHECK(splits[0].j == -1);
    CHECK(next_label(splits[0].j) == 1);
  }
  SUBCASE("triple") {
    const auto splits = enumerate_two_block_splits(IndexSet::canonical(1, 2));
    REQUIRE(splits.size() == 2);
    CHECK(splits[0].left.labels == std::vector<Label>{-1});
    CHECK(splits[0].j == -1);
    CHECK(splits[1].left.labels == std::vector<Label>{-1, 1});
    CHECK(splits[1].j == 1);
  }
  SUBCASE("count is n-1") {
    CHECK(enumerate_two_block_splits(IndexSet::canonical(0, 4)).size() == 3);
    CHECK(enumerate_two_block_splits(IndexSet{{1}}).empty());
  }
}

TEST_CASE("Moebius sign") {
  CHECK(mobius_sign(1) == 1);
  CHECK(mobius_sign(2) == -1);
  CHECK(mobius_sign(3) == 1);
  const auto parts = enumerate_interval_partitions(IndexSet::canonical(1, 2));
  CHECK(mobius_sign(parts[0]) == 1);
  CHECK(mobius_sign(parts[3]) == 1);
  CHECK(mobius_sign(parts[1]) == -1);
}

TEST_CASE("signed incidence identity") {
  // sum over P of (-1)^(|P|-1) * (number of refinements of P) == 1
  for (int n = 1; n <= 8; ++n) {
    long long acc = 0;
    for (const auto& p : enumerate_interval_partitions(IndexSet::canonical(0, n))) {
      long long refinements = 1;
      for (const auto& b : p.blocks) refinements <<= (b.size() - 1);
      acc += mobius_sign(p) * refinements;
    }
    CHECK(acc == 1);
  }
}

TEST_CASE("element partitions are in composition order") {
  const auto parts = enumerate_element_partitions(3);
  REQUIRE(parts.size() == 4);
  CHECK(parts[0].size() == 1);
  CHECK(parts[1].size() == 2);
  CHECK(parts[1][0].end == 1);
  CHECK(parts[2].size() == 2);
  CHECK(parts[2][0].end == 2);
  CHECK(parts[3].size() == 3);
}
