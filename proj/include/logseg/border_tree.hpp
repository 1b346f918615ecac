#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "logseg/border_list.hpp"
#include "logseg/core_model.hpp"

namespace logseg {

/// Membership set over positions 1..L.
class CandidateSet {
 public:
  explicit CandidateSet(std::size_t length) : member_(length + 1, 0) {}

  void insert(Index c) {
    if (!member_[c]) ++count_;
    member_[c] = 1;
  }
  void erase(Index c) {
    if (member_[c]) --count_;
    member_[c] = 0;
  }
  bool contains(Index c) const { return c < member_.size() && member_[c] != 0; }
  std::size_t size() const { return count_; }
  std::vector<Index> members() const;

 private:
  std::vector<std::uint8_t> member_;
  std::size_t count_ = 0;
};

/// Shared border structure for all live candidates of a prefix D[1, i].
///
/// For every candidate c the path c -> ... -> root visits exactly the border
/// list of the window [c, i]. Nodes live in an arena with one slot per position
/// (slot 0 is the root) and carry three links: next sibling, previous sibling
/// or parent when the node is a first child, and first child. Children are
/// kept in increasing index order.
class BorderTree {
 public:
  static constexpr Index kRoot = 0;
  static constexpr Index kNull = std::numeric_limits<Index>::max();

  BorderTree(const PrefixSums& ps, Orientation orientation);

  /// Advances the tree from D[1, i-1] to D[1, i]. `i` must be the next
  /// position; if it is a candidate, the caller inserts it into `candidates` first.
  void update(const CandidateSet& candidates, Index i);

  /// Prunes the leaf chain left behind by a candidate that the caller has
  /// already erased from `candidates`.
  void remove_candidate(const CandidateSet& candidates, Index c);

  /// Start and mean of the extreme suffix of D[c, i]: the smallest root child >= c.
  SuffixExtreme query(Index c) const;

  Index end() const { return end_; }
  Orientation orientation() const { return orientation_; }

  bool alive(Index n) const { return n < nodes_.size() && nodes_[n].alive; }
  Index parent(Index n) const;
  std::vector<Index> children(Index n) const;
  std::vector<Index> root_children() const { return children(kRoot); }
  /// Node sequence from c up to (excluding) the root.
  std::vector<Index> path_to_root(Index c) const;

  /// Live non-root nodes.
  std::size_t node_count() const { return live_nodes_; }
  /// High-water mark of live slots, root included.
  std::size_t peak_slots() const { return peak_slots_; }
  /// Total iterations of the update walk, summed over all updates.
  std::uint64_t work() const { return work_; }
  /// Iterations of the update walk during the most recent update.
  std::uint64_t last_update_work() const { return last_update_work_; }
  std::uint64_t deleted_nodes() const { return deleted_; }
  bool ever_deleted(Index n) const { return n < nodes_.size() && nodes_[n].deleted; }

  /// Link consistency and increasing child order; false on any breach.
  bool check_links() const;

  /// Graphviz dump, edges child -> parent. Diagnostics only.
  std::string to_dot() const;

 private:
  struct Node {
    Index next = kNull;
    Index prev = kNull;  // previous sibling, or parent for a first child
    Index child = kNull;
    bool alive = false;
    bool deleted = false;
  };

  double mean_to_end(Index n) const { return ps_->mean(n, end_); }
  bool is_first_child(Index n) const;
  void unlink(Index n);
  /// Inserts `n` into the sibling list immediately before `anchor`.
  void insert_before(Index n, Index anchor);
  void kill(Index n);

  const PrefixSums* ps_;
  Orientation orientation_;
  std::vector<Node> nodes_;
  Index end_ = 0;
  std::size_t live_nodes_ = 0;
  std::size_t peak_slots_ = 1;
  std::uint64_t work_ = 0;
  std::uint64_t last_update_work_ = 0;
  std::uint64_t deleted_ = 0;
};

}  // namespace logseg
