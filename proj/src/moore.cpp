#include "nerode/moore.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "nerode/operations.hpp"

namespace nerode {

StatePartition::StatePartition(std::vector<BlockId> block_of,
                               std::size_t block_count)
    : block_of_(std::move(block_of)), block_count_(block_count) {}

StatePartition StatePartition::from_blocks(std::size_t state_count,
                                           const std::vector<StateSet> &blocks) {
  const BlockId unset = static_cast<BlockId>(-1);
  std::vector<BlockId> label(state_count, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw InputError("partition block " + std::to_string(b) + " is empty");
    for (State q : blocks[b]) {
      if (q >= state_count)
        throw InputError("partition mentions state " + std::to_string(q) +
                         " outside the ground set");
      if (label[q] != unset)
        throw InputError("state " + std::to_string(q) +
                         " occurs in two partition blocks");
      label[q] = static_cast<BlockId>(b);
    }
  }
  for (State q = 0; q < state_count; ++q)
    if (label[q] == unset)
      throw InputError("state " + std::to_string(q) + " is in no block");
  return from_labels(label);
}

StatePartition StatePartition::top(std::size_t state_count) {
  return StatePartition(std::vector<BlockId>(state_count, 0),
                        state_count == 0 ? 0 : 1);
}

std::vector<StateSet> StatePartition::blocks() const {
  std::vector<StateSet> out(block_count_);
  for (State q = 0; q < block_of_.size(); ++q)
    out[block_of_[q]].push_back(q);
  return out;
}

bool StatePartition::refines(const StatePartition &coarser) const {
  if (coarser.state_count() != state_count())
    return false;
  std::vector<BlockId> image(block_count_, static_cast<BlockId>(-1));
  for (State q = 0; q < block_of_.size(); ++q) {
    BlockId &slot = image[block_of_[q]];
    if (slot == static_cast<BlockId>(-1))
      slot = coarser.block_of(q);
    else if (slot != coarser.block_of(q))
      return false;
  }
  return true;
}

StatePartition partition_meet(const StatePartition &p1,
                              const StatePartition &p2) {
  if (p1.state_count() != p2.state_count())
    throw InputError("partition ground sets differ (" +
                     std::to_string(p1.state_count()) + " vs " +
                     std::to_string(p2.state_count()) + " states)");
  std::vector<std::pair<BlockId, BlockId>> labels(p1.state_count());
  for (State q = 0; q < p1.state_count(); ++q)
    labels[q] = {p1.block_of(q), p2.block_of(q)};
  return StatePartition::from_labels(labels);
}

namespace {

// {S, S^c} with an empty side dropped.
StatePartition split_by(std::size_t state_count, const std::vector<char> &in) {
  std::vector<char> labels(in.begin(), in.end());
  labels.resize(state_count, 0);
  return StatePartition::from_labels(labels);
}

void require_reachable(const Dfa &d) {
  if (!d.all_reachable())
    throw InputError("Moore's algorithm requires a DFA without unreachable "
                     "states");
}

} // namespace

StatePartition moore_round(const Dfa &d, const StatePartition &current) {
  const std::size_t n = d.state_count();
  StatePartition result = current;
  const auto blocks = current.blocks();
  for (Symbol a = 0; a < d.symbol_count(); ++a) {
    StatePartition per_symbol = StatePartition::top(n);
    for (const auto &block : blocks) {
      std::vector<char> in_block(n, 0);
      for (State q : block)
        in_block[q] = 1;
      std::vector<char> in_pre(n, 0);
      for (State q = 0; q < n; ++q)
        in_pre[q] = in_block[d.next(q, a)];
      per_symbol = partition_meet(per_symbol, split_by(n, in_pre));
    }
    result = partition_meet(result, per_symbol);
  }
  return result;
}

MooreTrace moore_trace(const Dfa &d) {
  require_reachable(d);
  const std::size_t n = d.state_count();
  std::vector<char> finals(n, 0);
  for (State q = 0; q < n; ++q)
    finals[q] = d.is_final(q) ? 1 : 0;
  MooreTrace trace;
  trace.steps.push_back(split_by(n, finals));
  for (;;) {
    StatePartition next = moore_round(d, trace.steps.back());
    if (next == trace.steps.back())
      break;
    trace.steps.push_back(std::move(next));
  }
  trace.converged_at = trace.steps.size() - 1;
  return trace;
}

Dfa quotient(const Dfa &d, const StatePartition &p) {
  if (p.state_count() != d.state_count())
    throw InputError("partition does not match the DFA's state set");
  Dfa m(d.alphabet(), p.block_count(), p.block_of(d.initial()));
  std::vector<char> assigned(p.block_count() * d.symbol_count(), 0);
  for (State q = 0; q < d.state_count(); ++q) {
    const BlockId b = p.block_of(q);
    if (d.is_final(q))
      m.set_final(b);
    for (Symbol a = 0; a < d.symbol_count(); ++a) {
      const BlockId t = p.block_of(d.next(q, a));
      auto &flag = assigned[b * d.symbol_count() + a];
      if (flag && m.next(b, a) != t)
        throw InputError("partition is not stable under the transitions");
      m.set_next(b, a, t);
      flag = 1;
    }
  }
  m.set_subsets(p.blocks());
  return m;
}

Dfa moore_dfa(const Dfa &d) {
  MooreTrace trace = moore_trace(d);
  return quotient(d, trace.steps.back());
}

std::string format_trace(const MooreTrace &trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    out << "step " << i << ':';
    for (const auto &block : trace.steps[i].blocks()) {
      out << " {";
      for (std::size_t j = 0; j < block.size(); ++j)
        out << (j ? "," : "") << block[j];
      out << '}';
    }
    out << '\n';
  }
  return out.str();
}

std::size_t SignaturePartition::sample_count() const {
  std::size_t total = 0;
  for (const auto &[sig, words] : groups)
    total += words.size();
  return total;
}

namespace {

constexpr std::size_t kMaxSuffixes = std::size_t{1} << 22;

std::vector<Word> sample_words(const Dfa &d, std::size_t bound,
                               std::size_t cap) {
  std::vector<Word> out;
  std::vector<Word> level{Word{}};
  std::vector<char> hit(d.state_count(), 0);
  for (std::size_t len = 0; len <= bound && !level.empty(); ++len) {
    std::vector<Word> next;
    for (auto &w : level) {
      if (out.size() >= cap)
        break;
      if (len < bound && out.size() + next.size() < cap + d.symbol_count())
        for (Symbol a = 0; a < d.symbol_count(); ++a) {
          Word x = w;
          x.push_back(a);
          next.push_back(std::move(x));
        }
      hit[d.run(d.initial(), w)] = 1;
      out.push_back(std::move(w));
    }
    if (out.size() >= cap)
      break;
    level = std::move(next);
  }
  // Least access word of each state missed by the capped sample.
  std::vector<char> seen(d.state_count(), 0);
  std::vector<Word> access(d.state_count());
  std::deque<State> queue{d.initial()};
  seen[d.initial()] = 1;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < d.symbol_count(); ++a) {
      State t = d.next(q, a);
      if (!seen[t]) {
        seen[t] = 1;
        access[t] = access[q];
        access[t].push_back(a);
        queue.push_back(t);
      }
    }
  }
  for (State q = 0; q < d.state_count(); ++q)
    if (!hit[q] && seen[q] && access[q].size() <= bound)
      out.push_back(access[q]);
  return out;
}

// sig(u) as bits over the suffixes of length <= depth, in length-lex order:
// bit i is set iff u·w_i is accepted. Words reaching the same state share
// the value, so it is evaluated once per reached state.
class SignatureTable {
public:
  SignatureTable(const Dfa &d, std::size_t depth) : d_(d), depth_(depth) {
    std::size_t total = 0, layer = 1;
    for (std::size_t l = 0; l <= depth; ++l) {
      total += layer;
      if (total > kMaxSuffixes)
        throw InputError("signature depth " + std::to_string(depth) +
                         " needs more than " + std::to_string(kMaxSuffixes) +
                         " suffixes");
      layer *= d.symbol_count();
    }
  }

  const std::vector<bool> &of(const Word &u) {
    State q = d_.run(d_.initial(), u);
    auto it = memo_.find(q);
    if (it != memo_.end())
      return it->second;
    std::vector<bool> bits;
    Word w;
    for (std::size_t len = 0; len <= depth_; ++len) {
      auto visit = [&](auto &self) -> void {
        if (w.size() == len) {
          Word uw = u;
          uw.insert(uw.end(), w.begin(), w.end());
          bits.push_back(accepts(d_, uw));
          return;
        }
        for (Symbol a = 0; a < d_.symbol_count(); ++a) {
          w.push_back(a);
          self(self);
          w.pop_back();
        }
      };
      visit(visit);
    }
    return memo_.emplace(q, std::move(bits)).first->second;
  }

  static std::size_t prefix_size(std::size_t symbols, std::size_t depth) {
    std::size_t total = 0, layer = 1;
    for (std::size_t l = 0; l <= depth; ++l) {
      total += layer;
      layer *= symbols;
    }
    return total;
  }

private:
  const Dfa &d_;
  std::size_t depth_;
  std::map<State, std::vector<bool>> memo_;
};

SignaturePartition group_words(const Dfa &d, const std::vector<Word> &words,
                               SignatureTable &table, std::size_t depth,
                               std::size_t bound) {
  SignaturePartition sp;
  sp.depth = depth;
  sp.sample_bound = bound;
  const std::size_t len = SignatureTable::prefix_size(d.symbol_count(), depth);
  for (const auto &u : words) {
    const auto &full = table.of(u);
    std::vector<bool> sig(full.begin(), full.begin() + len);
    sp.groups[std::move(sig)].push_back(u);
  }
  return sp;
}

} // namespace

SignaturePartition signature_partition(const Dfa &d, std::size_t depth,
                                       std::size_t sample_bound,
                                       std::size_t sample_cap) {
  SignatureTable table(d, depth);
  return group_words(d, sample_words(d, sample_bound, sample_cap), table,
                     depth, sample_bound);
}

StepwiseReport verify_stepwise_isomorphism(const Dfa &d,
                                           const MooreTrace &trace,
                                           std::size_t depth_max,
                                           std::size_t sample_bound,
                                           std::size_t sample_cap) {
  if (sample_bound < d.state_count())
    throw InputError("sample bound " + std::to_string(sample_bound) +
                     " is below the state count " +
                     std::to_string(d.state_count()));
  if (trace.steps.empty())
    throw InputError("empty Moore trace");
  for (const auto &p : trace.steps)
    if (p.state_count() != d.state_count())
      throw InputError("trace partition does not match the DFA");

  const auto words = sample_words(d, sample_bound, sample_cap);
  SignatureTable table(d, depth_max);
  StepwiseReport report;
  report.samples = words.size();

  for (std::size_t n = 0; n <= depth_max; ++n) {
    ++report.steps_checked;
    const StatePartition &blocks = trace.at(n);
    const auto sp = group_words(d, words, table, n, sample_bound);
    auto block_of = [&](const Word &u) {
      return blocks.block_of(d.run(d.initial(), u));
    };

    // Same signature => same block.
    std::map<BlockId, const Word *> owner;
    for (const auto &[sig, group] : sp.groups) {
      const Word &first = group.front();
      const BlockId b = block_of(first);
      for (const auto &u : group)
        if (block_of(u) != b) {
          report.violations.push_back(
              {n, first, u, "signature equal, different block"});
          break;
        }
      // Different signature => different block.
      auto [it, fresh] = owner.emplace(b, &first);
      if (!fresh)
        report.violations.push_back(
            {n, *it->second, first, "signature differs, same block"});
    }

    // Each block's sampled words form a union of signature groups.
    std::map<BlockId, std::set<const std::vector<bool> *>> groups_in_block;
    std::map<const std::vector<bool> *, std::set<BlockId>> blocks_of_group;
    for (const auto &[sig, group] : sp.groups)
      for (const auto &u : group)
        blocks_of_group[&sig].insert(block_of(u));
    for (const auto &[sig, group] : sp.groups)
      if (blocks_of_group[&sig].size() > 1) {
        const Word *other = &group.front();
        for (const auto &u : group)
          if (block_of(u) != block_of(group.front())) {
            other = &u;
            break;
          }
        report.violations.push_back({n, group.front(), *other,
                                     "block not a union of signature groups"});
      }
  }
  return report;
}

StepwiseReport verify_stepwise_isomorphism(const Dfa &d, std::size_t depth_max,
                                           std::size_t sample_bound) {
  return verify_stepwise_isomorphism(d, moore_trace(d), depth_max,
                                     sample_bound);
}

} // namespace nerode
