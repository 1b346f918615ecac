// Random candidate insert/delete traces over a border tree, checked step by
// step against border lists rebuilt by brute force.
#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace trace {

using logseg::Index;

struct Report {
  bool ok = true;
  std::string failure;
  std::size_t steps = 0;
  std::size_t max_candidates = 0;
  std::uint64_t work = 0;
  std::uint64_t work_bound = 0;
  std::size_t peak_slots = 0;
  std::size_t length = 0;
};

inline void fail(Report& r, const std::string& what) {
  if (r.ok) {
    r.ok = false;
    r.failure = what;
  }
}

/// Checks every candidate path and the whole shape against a fresh rebuild.
inline void check_tree(Report& r, const logseg::BorderTree& tree, const logseg::PrefixSums& ps,
                       const logseg::CandidateSet& c, Index i, std::vector<bool>& gone) {
  using logseg::BorderTree;
  const auto members = c.members();
  for (Index cand : members) {
    const auto path = tree.path_to_root(cand);
    const auto expect = logseg::borders_bruteforce(ps, cand, i, tree.orientation());
    if (path != expect) {
      std::ostringstream os;
      os << "path of " << cand << " at i=" << i << " differs from brute-force borders";
      fail(r, os.str());
      return;
    }
    // Extreme suffix query agrees with brute force.
    const auto q = tree.query(cand);
    const auto brute = oracle::extreme_suffix(ps, cand, i, tree.orientation());
    if (q.mean != brute.mean) {
      fail(r, "query mismatch at i=" + std::to_string(i));
      return;
    }
  }
  const auto rebuilt = oracle::rebuild_tree(ps, members, i, tree.orientation());
  if (!rebuilt.consistent) fail(r, "border lists disagree on a shared parent");
  if (oracle::shape_of(tree).parent != rebuilt.parent)
    fail(r, "tree shape differs from fresh reconstruction at i=" + std::to_string(i));
  if (!tree.check_links()) fail(r, "broken links or unordered children at i=" + std::to_string(i));
  if (tree.node_count() > i) fail(r, "more live nodes than positions");
  for (Index n = 1; n <= i; ++n) {
    if (gone[n] && tree.alive(n)) fail(r, "deleted node reappeared");
    if (tree.ever_deleted(n)) gone[n] = true;
  }
}

/// One trace: a random sequence of length <= max_length, candidates inserted at
/// their own position with probability 1/2 and deleted at random later.
inline Report run(std::uint64_t seed, std::size_t max_length, logseg::Orientation orientation) {
  std::mt19937_64 rng(seed);
  Report r;
  const std::size_t n = 1 + rng() % max_length;
  const auto values = oracle::random_values(rng, n, seed % 2 == 0);
  const logseg::PrefixSums ps(logseg::Sequence{values});
  logseg::BorderTree tree(ps, orientation);
  logseg::CandidateSet cands(n);
  std::vector<bool> gone(n + 1, false);
  r.length = n;

  for (Index i = 1; i <= n && r.ok; ++i) {
    if (rng() % 2 == 0) cands.insert(i);
    r.max_candidates = std::max(r.max_candidates, cands.size());
    tree.update(cands, i);
    check_tree(r, tree, ps, cands, i, gone);
    const auto members = cands.members();
    for (Index c : members) {
      if (rng() % 5 == 0) {
        cands.erase(c);
        tree.remove_candidate(cands, c);
        check_tree(r, tree, ps, cands, i, gone);
      }
    }
    ++r.steps;
  }
  r.work = tree.work();
  r.work_bound = 2 * (r.max_candidates * n + n) + n;
  r.peak_slots = tree.peak_slots();
  if (r.work > r.work_bound) fail(r, "tree work exceeds the amortized bound");
  if (r.peak_slots > n + 1) fail(r, "arena high-water mark exceeds L + 1");
  return r;
}

}  // namespace trace
