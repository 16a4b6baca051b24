#pragma once

// Moore's partition refinement, recorded step by step, together with a
// word-level signature oracle for the same fixpoint iteration.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nerode/automata.hpp"

namespace nerode {

using BlockId = std::uint32_t;

/// Partition of the states 0..n-1. Blocks are numbered by their least
/// member, so two partitions are equal iff their block_of maps are.
class StatePartition {
public:
  /// Canonicalizes arbitrary labels: states with equal labels share a block.
  template <class Label>
  static StatePartition from_labels(const std::vector<Label> &labels) {
    std::map<Label, BlockId> ids;
    std::vector<BlockId> block_of(labels.size());
    for (std::size_t q = 0; q < labels.size(); ++q) {
      auto [it, fresh] =
          ids.emplace(labels[q], static_cast<BlockId>(ids.size()));
      block_of[q] = it->second;
    }
    return StatePartition(std::move(block_of), ids.size());
  }

  /// Throws InputError unless the blocks are non-empty, disjoint and cover
  /// 0..state_count-1.
  static StatePartition from_blocks(std::size_t state_count,
                                    const std::vector<StateSet> &blocks);

  /// The single-block partition.
  static StatePartition top(std::size_t state_count);

  std::size_t state_count() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  BlockId block_of(State q) const { return block_of_.at(q); }
  const std::vector<BlockId> &labels() const noexcept { return block_of_; }

  /// Blocks as sorted state lists, ordered by least member.
  std::vector<StateSet> blocks() const;

  /// True when every block of *this lies inside a block of coarser.
  bool refines(const StatePartition &coarser) const;

  friend bool operator==(const StatePartition &,
                         const StatePartition &) = default;

private:
  StatePartition(std::vector<BlockId> block_of, std::size_t block_count);

  std::vector<BlockId> block_of_;
  std::size_t block_count_ = 0;
};

/// Coarsest common refinement. Throws InputError on ground-set mismatch.
StatePartition partition_meet(const StatePartition &p1,
                              const StatePartition &p2);

/// Distinct partitions visited by Moore's algorithm. steps[0] is {F, F^c}
/// with empty blocks dropped; one more refinement round applied to
/// steps[converged_at] (the last entry) returns it unchanged.
struct MooreTrace {
  std::vector<StatePartition> steps;
  std::size_t converged_at = 0;

  /// The n-th iterate; iterates past convergence equal the fixpoint.
  const StatePartition &at(std::size_t n) const {
    return steps[std::min(n, converged_at)];
  }
};

/// One round: meet of the current partition with, for every symbol a and
/// block p, the split {pre_a(p), pre_a(p)^c}.
StatePartition moore_round(const Dfa &d, const StatePartition &current);

/// Requires every state reachable (InputError otherwise).
MooreTrace moore_trace(const Dfa &d);

/// Quotient of d by a stable partition.
Dfa quotient(const Dfa &d, const StatePartition &p);

/// Quotient of d by its converged Moore partition.
Dfa moore_dfa(const Dfa &d);

/// Lines of the form "step 1: {0,1} {2} {3}".
std::string format_trace(const MooreTrace &trace);

/// Sampled words grouped by sig_depth(u) = { w : |w| <= depth, u·w in L }.
struct SignaturePartition {
  std::size_t depth = 0;
  std::size_t sample_bound = 0;
  /// Signatures are bit vectors over the suffixes of length <= depth, in
  /// length-lexicographic order.
  std::map<std::vector<bool>, std::vector<Word>> groups;

  std::size_t sample_count() const;
};

/// Default cap on the number of sampled words.
inline constexpr std::size_t kDefaultSampleCap = 4096;

/// Samples every word of length <= sample_bound in length-lexicographic
/// order, up to sample_cap words, then adds the least access word of any
/// state not yet reached so that every state is represented. Words are
/// grouped by sig_depth computed from membership queries on u·w.
SignaturePartition signature_partition(const Dfa &d, std::size_t depth,
                                       std::size_t sample_bound,
                                       std::size_t sample_cap =
                                           kDefaultSampleCap);

struct StepwiseViolation {
  std::size_t step = 0;
  Word u;
  Word v;
  /// "signature differs, same block" or "signature equal, different block"
  /// or "block not a union of signature groups".
  std::string reason;
};

struct StepwiseReport {
  std::size_t steps_checked = 0;
  std::size_t samples = 0;
  std::vector<StepwiseViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks, for n = 0..depth_max, that two sampled words have the same
/// depth-n signature iff they reach the same block of trace.at(n), and that
/// each block's sampled left-language words form a union of signature
/// groups. Requires sample_bound >= state count.
StepwiseReport verify_stepwise_isomorphism(const Dfa &d,
                                           const MooreTrace &trace,
                                           std::size_t depth_max,
                                           std::size_t sample_bound,
                                           std::size_t sample_cap =
                                               kDefaultSampleCap);

StepwiseReport verify_stepwise_isomorphism(const Dfa &d, std::size_t depth_max,
                                           std::size_t sample_bound);

} // namespace nerode
