#include "logseg/border_tree.hpp"

#include <cassert>
#include <sstream>

namespace logseg {

std::vector<Index> CandidateSet::members() const {
  std::vector<Index> out;
  out.reserve(count_);
  for (Index c = 1; c < member_.size(); ++c)
    if (member_[c]) out.push_back(c);
  return out;
}

BorderTree::BorderTree(const PrefixSums& ps, Orientation orientation)
    : ps_(&ps), orientation_(orientation), nodes_(ps.size() + 1) {
  nodes_[kRoot].alive = true;
}

bool BorderTree::is_first_child(Index n) const {
  const Index p = nodes_[n].prev;
  return p != kNull && nodes_[p].child == n;
}

Index BorderTree::parent(Index n) const {
  assert(n != kRoot && alive(n));
  while (!is_first_child(n)) n = nodes_[n].prev;
  return nodes_[n].prev;
}

std::vector<Index> BorderTree::children(Index n) const {
  std::vector<Index> out;
  for (Index c = nodes_[n].child; c != kNull; c = nodes_[c].next) out.push_back(c);
  return out;
}

std::vector<Index> BorderTree::path_to_root(Index c) const {
  std::vector<Index> out;
  for (Index n = c; n != kRoot; n = parent(n)) out.push_back(n);
  return out;
}

void BorderTree::unlink(Index n) {
  Node& node = nodes_[n];
  if (is_first_child(n)) {
    nodes_[node.prev].child = node.next;
  } else {
    nodes_[node.prev].next = node.next;
  }
  if (node.next != kNull) nodes_[node.next].prev = node.prev;
  node.next = node.prev = kNull;
}

void BorderTree::insert_before(Index n, Index anchor) {
  Node& a = nodes_[anchor];
  Node& node = nodes_[n];
  if (is_first_child(anchor)) {
    nodes_[a.prev].child = n;
  } else {
    nodes_[a.prev].next = n;
  }
  node.prev = a.prev;
  node.next = anchor;
  a.prev = n;
}

void BorderTree::kill(Index n) {
  assert(nodes_[n].child == kNull);
  unlink(n);
  nodes_[n].alive = false;
  nodes_[n].deleted = true;
  --live_nodes_;
  ++deleted_;
}

void BorderTree::update(const CandidateSet& candidates, Index i) {
  assert(i == end_ + 1 && i < nodes_.size());
  end_ = i;

  // Splice i between the root and all of its current children.
  Node& fresh = nodes_[i];
  assert(!fresh.alive && !fresh.deleted);
  fresh.alive = true;
  fresh.child = nodes_[kRoot].child;
  if (fresh.child != kNull) nodes_[fresh.child].prev = i;
  fresh.prev = kRoot;
  fresh.next = kNull;
  nodes_[kRoot].child = i;
  ++live_nodes_;
  if (live_nodes_ + 1 > peak_slots_) peak_slots_ = live_nodes_ + 1;

  // Every visited node is a child of the root.
  std::uint64_t steps = 0;
  Index a = i;
  while (a != kNull) {
    ++steps;
    Index n = nodes_[a].next;
    const Index b = nodes_[a].child;
    if (b == kNull) {
      if (!candidates.contains(a)) kill(a);
    } else if (at_least_as_extreme(orientation_, mean_to_end(b), mean_to_end(a))) {
      unlink(b);
      insert_before(b, a);
      n = b;
    }
    a = n;
  }
  last_update_work_ = steps;
  work_ += steps;
}

void BorderTree::remove_candidate(const CandidateSet& candidates, Index c) {
  assert(!candidates.contains(c));
  Index a = c;
  while (a != kRoot && alive(a) && nodes_[a].child == kNull && !candidates.contains(a)) {
    const Index p = parent(a);
    kill(a);
    a = p;
  }
}

SuffixExtreme BorderTree::query(Index c) const {
  for (Index a = nodes_[kRoot].child; a != kNull; a = nodes_[a].next) {
    if (a >= c) return {a, mean_to_end(a)};
  }
  assert(false && "query for a position past every root child");
  return {c, ps_->mean(c, end_)};
}

bool BorderTree::check_links() const {
  std::size_t seen = 0;
  std::vector<Index> stack{kRoot};
  while (!stack.empty()) {
    const Index p = stack.back();
    stack.pop_back();
    Index last = 0;
    Index expected_prev = p;
    for (Index c = nodes_[p].child; c != kNull; c = nodes_[c].next) {
      if (!nodes_[c].alive || nodes_[c].prev != expected_prev) return false;
      if (last != 0 && c <= last) return false;
      // A parent is larger than each of its children.
      if (p != kRoot && c >= p) return false;
      if (++seen > live_nodes_) return false;
      last = c;
      expected_prev = c;
      stack.push_back(c);
    }
  }
  return seen == live_nodes_;
}

std::string BorderTree::to_dot() const {
  std::ostringstream os;
  os << "digraph border_tree {\n  r [shape=box];\n";
  std::vector<Index> stack{kRoot};
  while (!stack.empty()) {
    const Index p = stack.back();
    stack.pop_back();
    for (Index c = nodes_[p].child; c != kNull; c = nodes_[c].next) {
      os << "  " << c << " -> ";
      if (p == kRoot) {
        os << "r";
      } else {
        os << p;
      }
      os << ";\n";
      stack.push_back(c);
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace logseg
