#include "topochain/labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

IndexSet IndexSet::canonical(int n1, int n2) {
  IndexSet s;
  s.labels.reserve(n1 + n2);
  for (int j = -n1; j <= -1; ++j) s.labels.push_back(j);
  for (int j = 1; j <= n2; ++j) s.labels.push_back(j);
  return s;
}

int IndexSet::neg_count() const {
  return static_cast<int>(std::count_if(labels.begin(), labels.end(),
                                        [](Label j) { return j < 0; }));
}

int IndexSet::pos_count() const { return size() - neg_count(); }

bool IndexSet::strictly_increasing() const {
  for (size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels[i] >= labels[i + 1]) return false;
  return std::none_of(labels.begin(), labels.end(), [](Label j) { return j == 0; });
}

bool IndexSet::contiguous() const {
  for (size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels[i + 1] != next_label(labels[i])) return false;
  return true;
}

int mobius_sign(const IntervalPartition& p) { return mobius_sign(p.size()); }

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  // Cut positions are (k-1)-subsets of {1,...,n-1}, enumerated per part
  // count in lexicographic order.
  for (int parts = 1; parts <= n; ++parts) {
    std::vector<int> cuts(parts - 1);
    for (int i = 0; i < parts - 1; ++i) cuts[i] = i + 1;
    while (true) {
      std::vector<int> comp;
      comp.reserve(parts);
      int prev = 0;
      for (int c : cuts) {
        comp.push_back(c - prev);
        prev = c;
      }
      comp.push_back(n - prev);
      out.push_back(std::move(comp));
      // next lexicographic combination
      int i = parts - 2;
      while (i >= 0 && cuts[i] == n - (parts - 1 - i)) --i;
      if (i < 0) break;
      ++cuts[i];
      for (int k = i + 1; k < parts - 1; ++k) cuts[k] = cuts[k - 1] + 1;
    }
  }
  return out;
}

std::vector<IntervalPartition> enumerate_interval_partitions(const IndexSet& s) {
  if (s.empty()) throw std::invalid_argument("empty index set");
  std::vector<IntervalPartition> out;
  for (const auto& comp : compositions(s.size())) {
    IntervalPartition p;
    int pos = 0;
    for (int len : comp) {
      IndexSet block;
      block.labels.assign(s.labels.begin() + pos, s.labels.begin() + pos + len);
      p.blocks.push_back(std::move(block));
      pos += len;
    }
    out.push_back(std::move(p));
  }
  return out;
}

IndexSet ClusteredIndexSet::flatten() const {
  IndexSet s = left;
  s.labels.insert(s.labels.end(), cluster.labels.begin(), cluster.labels.end());
  s.labels.insert(s.labels.end(), right.labels.begin(), right.labels.end());
  return s;
}

ElementList ElementList::singletons(const IndexSet& s) {
  ElementList e;
  e.elements.reserve(s.size());
  for (Label j : s.labels) e.elements.push_back(IndexSet{{j}});
  return e;
}

ElementList ElementList::of_clustered(const ClusteredIndexSet& c) {
  ElementList e;
  for (Label j : c.left.labels) e.elements.push_back(IndexSet{{j}});
  e.elements.push_back(c.cluster);
  for (Label j : c.right.labels) e.elements.push_back(IndexSet{{j}});
  return e;
}

ElementList ElementList::of_blocks(const std::vector<IndexSet>& blocks) {
  ElementList e;
  e.elements = blocks;
  return e;
}

IndexSet ElementList::flatten_range(int b, int e) const {
  IndexSet s;
  for (int i = b; i < e; ++i)
    s.labels.insert(s.labels.end(), elements[i].labels.begin(), elements[i].labels.end());
  return s;
}

std::vector<std::vector<ElementRange>> enumerate_element_partitions(int m) {
  std::vector<std::vector<ElementRange>> out;
  for (const auto& comp : compositions(m)) {
    std::vector<ElementRange> groups;
    groups.reserve(comp.size());
    int pos = 0;
    for (int len : comp) {
      groups.push_back({pos, pos + len});
      pos += len;
    }
    out.push_back(std::move(groups));
  }
  return out;
}

std::vector<IntervalPartition> enumerate_clustered_partitions(const ClusteredIndexSet& c) {
  if (c.cluster.empty()) throw std::invalid_argument("empty cluster");
  const ElementList elems = ElementList::of_clustered(c);
  std::vector<IntervalPartition> out;
  for (const auto& groups : enumerate_element_partitions(elems.size())) {
    IntervalPartition p;
    for (const auto& g : groups) p.blocks.push_back(elems.flatten_range(g.begin, g.end));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<TwoBlockSplit> enumerate_two_block_splits(const IndexSet& s) {
  std::vector<TwoBlockSplit> out;
  for (int cut = 1; cut < s.size(); ++cut) {
    TwoBlockSplit split;
    split.left.labels.assign(s.labels.begin(), s.labels.begin() + cut);
    split.right.labels.assign(s.labels.begin() + cut, s.labels.end());
    split.j = split.left.labels.back();
    out.push_back(std::move(split));
  }
  return out;
}

}  // namespace topo
