#include "nerode/diagram.hpp"

#include <sstream>

#include "nerode/constructions.hpp"
#include "nerode/moore.hpp"
#include "nerode/operations.hpp"

namespace nerode {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Nfa random_nfa(const GenParams &p) {
  if (p.state_count < 1 || p.state_count > 10)
    throw InputError("state count must be in 1..10");
  if (p.alphabet_size < 1 || p.alphabet_size > 4)
    throw InputError("alphabet size must be in 1..4");
  if (!(p.transition_density >= 0.0 && p.transition_density <= 1.0))
    throw InputError("transition density must be in [0,1]");
  if (!(p.initial_density > 0.0 && p.initial_density <= 1.0) ||
      !(p.final_density > 0.0 && p.final_density <= 1.0))
    throw InputError("initial and final densities must be in (0,1]");

  SplitMix64 rng(p.seed);
  Nfa n(Alphabet::letters(p.alphabet_size), p.state_count);
  const auto states = static_cast<State>(p.state_count);
  const auto symbols = static_cast<Symbol>(p.alphabet_size);
  for (State q = 0; q < states; ++q)
    for (Symbol a = 0; a < symbols; ++a)
      for (State t = 0; t < states; ++t)
        if (rng.unit() < p.transition_density)
          n.add_transition(q, a, t);
  for (State q = 0; q < states; ++q)
    if (rng.unit() < p.initial_density)
      n.add_initial(q);
  if (n.initial().empty() && !p.allow_empty_initial)
    n.add_initial(static_cast<State>(rng.next() % p.state_count));
  for (State q = 0; q < states; ++q)
    if (rng.unit() < p.final_density)
      n.add_final(q);
  return n;
}

std::vector<GenParams> standard_corpus(std::size_t count,
                                       std::uint64_t base_seed) {
  static constexpr double densities[] = {0.15, 0.3, 0.5};
  std::vector<GenParams> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenParams p;
    p.state_count = 1 + i % 6;
    p.alphabet_size = 1 + (i / 6) % 3;
    p.transition_density = densities[(i / 18) % 3];
    p.seed = base_seed + i;
    out.push_back(p);
  }
  return out;
}

ConstructionSet ConstructionSet::standard() {
  return ConstructionSet{
      [](const Nfa &n) { return nerode::f_r(n); },
      [](const Nfa &n) { return nerode::g_r(n); },
      [](const Nfa &n) { return nerode::f_l(n); },
      [](const Nfa &n) { return nerode::g_l(n); },
  };
}

std::size_t DiagramReport::pass_count() const {
  std::size_t k = 0;
  for (const auto &e : edges)
    k += e.passed ? 1 : 0;
  return k;
}

std::size_t DiagramReport::fail_count() const {
  return edges.size() - pass_count();
}

namespace {

constexpr std::size_t kEnumerationDepth = 6;

std::string sizes(std::size_t a, std::size_t b) {
  return "states " + std::to_string(a) + " vs " + std::to_string(b);
}

// Witness for a failed isomorphism: a word in the symmetric difference when
// the languages differ, otherwise the state counts.
std::string iso_witness(const Nfa &x, const Nfa &y) {
  if (auto w = distinguishing_word(x, y))
    return "languages differ on " + format_word(x.alphabet(), *w);
  return sizes(x.state_count(), y.state_count());
}

class EdgeChecker {
public:
  explicit EdgeChecker(DiagramReport &report) : report_(report) {}

  template <class Check>
  void edge(std::string name, bool uses_g_l, Check check) {
    EdgeVerdict v{std::move(name), false, {}, uses_g_l};
    try {
      v.witness = check();
      v.passed = v.witness.empty();
    } catch (const InputError &e) {
      v.witness = e.what();
    }
    report_.edges.push_back(std::move(v));
  }

  void dfa_iso(std::string name, bool uses_g_l, const Dfa &x, const Dfa &y) {
    edge(std::move(name), uses_g_l, [&]() -> std::string {
      return dfa_isomorphic(x, y) ? "" : iso_witness(x.to_nfa(), y.to_nfa());
    });
  }

  void codfa_iso(std::string name, bool uses_g_l, const Nfa &x, const Nfa &y) {
    edge(std::move(name), uses_g_l, [&]() -> std::string {
      return codfa_isomorphic(x, y) ? "" : iso_witness(x, y);
    });
  }

  // Exact equivalence plus the bounded enumeration oracle.
  void language(std::string name, bool uses_g_l, const Nfa &x,
                const Nfa &reference) {
    edge(std::move(name), uses_g_l, [&]() -> std::string {
      if (auto w = distinguishing_word(x, reference))
        return "languages differ on " + format_word(x.alphabet(), *w);
      if (enumerate_accepted(x, kEnumerationDepth) !=
          enumerate_accepted(reference, kEnumerationDepth))
        return "bounded enumeration disagrees with the product check";
      return "";
    });
  }

private:
  DiagramReport &report_;
};

} // namespace

DiagramReport verify_diagram(const Nfa &n, const ConstructionSet &c) {
  DiagramReport report;
  EdgeChecker check(report);

  const Nfa nr = reverse(n);
  const Dfa nd = determinize(n);
  const Dfa ndm = moore_dfa(nd);
  const Dfa nrd = c.g_r(nr);
  const Dfa nrdm = moore_dfa(determinize(nr));
  const Nfa partial = c.g_l(n);
  const Nfa atom = c.f_l(n);
  const Nfa atom_rev = c.f_l(nr);
  const Dfa fr = c.f_r(n);
  const Dfa fr_rev = c.f_r(nr);
  const Dfa gr = c.g_r(n);

  report.node_sizes = {
      {"N", n.state_count()},
      {"N^R", nr.state_count()},
      {"N^D", gr.state_count()},
      {"N^DM", ndm.state_count()},
      {"G^l(N)", partial.state_count()},
      {"atomaton(L)", atom.state_count()},
      {"N^RD", nrd.state_count()},
      {"atomaton(L^R)", atom_rev.state_count()},
      {"N^RDM", nrdm.state_count()},
  };

  // Constructions from congruences.
  check.dfa_iso("G^r(N) ~ N^D", false, gr, nd);
  check.dfa_iso("F^r(N) ~ N^DM", false, fr, ndm);
  check.codfa_iso("G^l(N) ~ R(G^r(N^R))", true, partial, reverse(nrd));
  check.codfa_iso("F^l(N) ~ R(F^r(N^R))", false, atom, reverse(fr_rev));
  check.dfa_iso("G^r(G^l(N)) ~ F^r(N)", true, c.g_r(partial), fr);
  check.codfa_iso("F^l(N^R) ~ G^l(G^r(N^R))", true, atom_rev,
                  c.g_l(nrd.to_nfa()));
  check.dfa_iso("G^r(R(G^r(N^R))) ~ F^r(N)", false, c.g_r(reverse(nrd)), fr);

  // Atomaton and partial atomaton.
  check.codfa_iso("partial atomaton G^l(N) ~ N^RDR", true, partial,
                  reverse(determinize(nr)));
  check.codfa_iso("G^l(N^DM) ~ atomaton(L)", true, c.g_l(ndm.to_nfa()), atom);
  check.dfa_iso("G^r(atomaton(L)) ~ N^DM", false, c.g_r(atom), ndm);
  check.codfa_iso("G^l(N^RDM) ~ atomaton(L^R)", true, c.g_l(nrdm.to_nfa()),
                  atom_rev);
  check.dfa_iso("G^r(atomaton(L^R)) ~ N^RDM", false, c.g_r(atom_rev), nrdm);

  // Properties of the atomaton A of L.
  check.codfa_iso("A ~ (N^DM)^RDR", false, atom,
                  reverse(determinize(reverse(ndm))));
  check.edge("A^R minimal for L^R", false, [&]() -> std::string {
    const Dfa ar = as_dfa(reverse(atom));
    if (!dfa_isomorphic(ar, moore_dfa(ar)))
      return "Moore's algorithm shrinks A^R to " +
             std::to_string(moore_dfa(ar).state_count()) + " states";
    return dfa_isomorphic(ar, nrdm) ? "" : iso_witness(ar.to_nfa(), nrdm.to_nfa());
  });
  check.dfa_iso("A^D ~ N^DM", false, determinize(atom), ndm);
  check.codfa_iso("A ~ N^RDMR", false, atom, reverse(nrdm));

  // Determinization minimality conditions.
  check.edge("corollary agreement on N", false, [&]() -> std::string {
    report.corollary = corollary_equivalences(n);
    return report.corollary.agree() ? "" : "conditions disagree";
  });
  check.edge("G^l(N) co-deterministic, corollary all true", true,
             [&]() -> std::string {
               if (!is_codeterministic(partial))
                 return "G^l(N) is not co-deterministic and co-complete";
               const auto r = corollary_equivalences(partial);
               for (bool b : r.values())
                 if (!b)
                   return "a condition is false";
               return "";
             });

  // Languages of every node.
  const Nfa gr_n = gr.to_nfa();
  check.language("L(N^D) = L", false, gr_n, n);
  check.language("L(N^DM) = L", false, ndm.to_nfa(), n);
  check.language("L(F^r(N)) = L", false, fr.to_nfa(), n);
  check.language("L(G^l(N)) = L", true, partial, n);
  check.language("L(atomaton(L)) = L", false, atom, n);
  check.language("L(N^RD) = L^R", false, nrd.to_nfa(), nr);
  check.language("L(atomaton(L^R)) = L^R", false, atom_rev, nr);
  check.language("L(N^RDM) = L^R", false, nrdm.to_nfa(), nr);
  return report;
}

std::string format_report(const DiagramReport &report) {
  std::ostringstream out;
  for (const auto &[name, size] : report.node_sizes)
    out << "NODE " << name << ": " << size << '\n';
  for (const auto &e : report.edges) {
    out << "EDGE " << e.name << ": " << (e.passed ? "PASS" : "FAIL");
    if (!e.witness.empty())
      out << " [" << e.witness << ']';
    out << '\n';
  }
  out << "RESULT pass=" << report.pass_count()
      << " fail=" << report.fail_count() << '\n';
  return out.str();
}

} // namespace nerode
