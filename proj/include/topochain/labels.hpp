#pragma once

#include <utility>
#include <vector>

namespace topo {

/// Particle label. Nonzero integer ordered ... < -2 < -1 < 1 < 2 < ...
using Label = int;

/// Successor of j in the label order (skips 0).
inline Label next_label(Label j) { return j == -1 ? 1 : j + 1; }
inline Label prev_label(Label j) { return j == 1 ? -1 : j - 1; }

/// Strictly increasing list of labels. The canonical set for arity
/// (n1, n2) is -n1,...,-1,1,...,n2.
struct IndexSet {
  std::vector<Label> labels;

  IndexSet() = default;
  explicit IndexSet(std::vector<Label> ls) : labels(std::move(ls)) {}

  static IndexSet canonical(int n1, int n2);

  int size() const { return static_cast<int>(labels.size()); }
  bool empty() const { return labels.empty(); }
  int neg_count() const;
  int pos_count() const;
  bool strictly_increasing() const;
  /// True when the labels form a gap-free run under next_label.
  bool contiguous() const;

  bool operator==(const IndexSet&) const = default;
};

/// Ordered partition of an IndexSet into contiguous, non-empty blocks.
struct IntervalPartition {
  std::vector<IndexSet> blocks;
  int size() const { return static_cast<int>(blocks.size()); }
};

/// (-1)^(|P|-1)
int mobius_sign(const IntervalPartition& p);
inline int mobius_sign(int block_count) { return block_count % 2 == 1 ? 1 : -1; }

/// Compositions of n (ordered lists of positive parts summing to n),
/// ordered by part count, then lexicographically by cut positions.
std::vector<std::vector<int>> compositions(int n);

/// All 2^(|s|-1) interval partitions of s, in composition order.
/// Throws std::invalid_argument on an empty set.
std::vector<IntervalPartition> enumerate_interval_partitions(const IndexSet& s);

/// Index set with one marked contiguous cluster: left < cluster < right.
/// flatten() is the declusterization map.
struct ClusteredIndexSet {
  IndexSet left;
  IndexSet cluster;
  IndexSet right;

  IndexSet flatten() const;
  /// Number of non-cluster elements on each side.
  int outer_left() const { return left.size(); }
  int outer_right() const { return right.size(); }
};

/// Ordered list of disjoint label runs treated as single elements.
/// Partitions of the list group adjacent elements; a group flattens to a
/// contiguous run. Elements may be empty (used for degenerate clusters).
struct ElementList {
  std::vector<IndexSet> elements;

  static ElementList singletons(const IndexSet& s);
  static ElementList of_clustered(const ClusteredIndexSet& c);
  static ElementList of_blocks(const std::vector<IndexSet>& blocks);

  int size() const { return static_cast<int>(elements.size()); }
  /// Union of the elements in range [b, e), flattened.
  IndexSet flatten_range(int b, int e) const;
  IndexSet flatten_all() const { return flatten_range(0, size()); }
};

/// One group of a partition of an element list: the half-open element range.
struct ElementRange {
  int begin = 0;
  int end = 0;
};

/// Ordered partition of m elements into adjacent groups (2^(m-1) total),
/// in composition order.
std::vector<std::vector<ElementRange>> enumerate_element_partitions(int m);

/// Partitions of (left singles, cluster, right singles) with the cluster kept
/// whole, as flattened interval partitions; count 2^(n1+n2).
/// Throws std::invalid_argument when the cluster is empty.
std::vector<IntervalPartition> enumerate_clustered_partitions(const ClusteredIndexSet& c);

/// Split of s into a left interval X1 and the complementary right interval
/// X2; the interacting pair across the cut is (j, next_label(j)) with
/// j = max X1.
struct TwoBlockSplit {
  IndexSet left;
  IndexSet right;
  Label j;
};

/// The |s|-1 two-block splits of s (empty when |s| < 2).
std::vector<TwoBlockSplit> enumerate_two_block_splits(const IndexSet& s);

}  // namespace topo
