#pragma once

// Seeded random NFAs and whole-diagram verification of the constructions.
//
// random_nfa draws from SplitMix64 seeded with GenParams::seed:
//
//   next():   state += 0x9E3779B97F4A7C15
//             z = state
//             z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//             return z ^ (z >> 31)                       (all mod 2^64)
//   unit():   (next() >> 11) * 2^-53                     in [0, 1)
//
// Draw order:
//   1. for q in 0..n-1, a in 0..k-1, t in 0..n-1: edge q -a-> t iff
//      unit() < transition_density
//   2. for q in 0..n-1: q initial iff unit() < initial_density
//   3. if no state is initial and allow_empty_initial is false:
//      state next() % n becomes initial
//   4. for q in 0..n-1: q final iff unit() < final_density
//
// Symbols are the letters "a", "b", ... in order.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nerode/atoms.hpp"
#include "nerode/automata.hpp"

namespace nerode {

struct GenParams {
  std::size_t state_count = 3;
  std::size_t alphabet_size = 2;
  double transition_density = 0.3;
  double initial_density = 0.3;
  double final_density = 0.4;
  std::uint64_t seed = 0;
  bool allow_empty_initial = false;
};

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double unit();

private:
  std::uint64_t state_;
};

/// Throws InputError when parameters are out of range (states 1..10,
/// alphabet 1..4, transition density in [0,1], other densities in (0,1]).
Nfa random_nfa(const GenParams &p);

/// The seeded corpus used by the acceptance suite: case i has
/// 1 + i % 6 states, 1 + (i / 6) % 3 symbols, transition density
/// {0.15, 0.3, 0.5}[(i / 18) % 3] and seed base_seed + i.
std::vector<GenParams> standard_corpus(std::size_t count,
                                       std::uint64_t base_seed = 1);

/// The constructions under test; verify_diagram calls through these so a
/// test can substitute a faulty one.
struct ConstructionSet {
  std::function<Dfa(const Nfa &)> f_r;
  std::function<Dfa(const Nfa &)> g_r;
  std::function<Nfa(const Nfa &)> f_l;
  std::function<Nfa(const Nfa &)> g_l;

  static ConstructionSet standard();
};

struct EdgeVerdict {
  std::string name;
  bool passed = false;
  std::string witness;
  /// The edge's route goes through the g_l construction.
  bool uses_g_l = false;
};

struct DiagramReport {
  std::vector<std::pair<std::string, std::size_t>> node_sizes;
  std::vector<EdgeVerdict> edges;
  CorollaryReport corollary;

  std::size_t pass_count() const;
  std::size_t fail_count() const;
  bool passed() const { return fail_count() == 0; }
};

DiagramReport verify_diagram(const Nfa &n,
                             const ConstructionSet &constructions =
                                 ConstructionSet::standard());

/// "NODE <name>: <states>" lines, "EDGE <name>: PASS|FAIL [witness]"
/// lines, and a final "RESULT pass=<k> fail=<m>".
std::string format_report(const DiagramReport &report);

} // namespace nerode
