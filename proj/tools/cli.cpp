#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "nerode/atoms.hpp"
#include "nerode/constructions.hpp"
#include "nerode/diagram.hpp"
#include "nerode/moore.hpp"
#include "nerode/operations.hpp"
#include "nerode/text_format.hpp"

namespace nerode {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::string slurp(std::istream &in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Nfa load(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw InputError("cannot open '" + path + "'");
  try {
    return parse_automaton(slurp(file));
  } catch (const InputError &e) {
    throw InputError(path + ": " + e.what());
  }
}

// Reads the inputs named by --in or positionally, in order; an empty list
// means one automaton on standard input.
std::vector<Nfa> load_all(const std::vector<std::string> &paths,
                          std::istream &in, std::size_t expected) {
  std::vector<Nfa> out;
  if (paths.empty())
    out.push_back(parse_automaton(slurp(in)));
  for (const auto &p : paths)
    out.push_back(load(p));
  if (out.size() != expected)
    throw InputError("expected " + std::to_string(expected) +
                     " automata, got " + std::to_string(out.size()));
  return out;
}

// A complete DFA with every state reachable is used as given; anything
// else is determinized first.
Dfa as_reachable_dfa(const Nfa &n) {
  try {
    Dfa d = as_dfa(n);
    if (d.all_reachable())
      return d;
  } catch (const InputError &) {
  }
  return determinize(n);
}

Dfa require_dfa(const Nfa &n, const char *which) {
  try {
    return as_dfa(n);
  } catch (const InputError &e) {
    throw InputError(std::string(which) + " automaton: " + e.what());
  }
}

const char *verdict(bool b) { return b ? "PASS" : "FAIL"; }

struct Context {
  std::vector<std::string> paths;
  std::istream &in;
  std::ostream &out;

  Nfa one() { return load_all(paths, in, 1).front(); }
};

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite automata constructions and checks", "nerode"};
  app.require_subcommand(1);

  Context ctx{{}, in, out};
  std::map<CLI::App *, std::function<int()>> actions;

  auto command = [&](const std::string &name, const std::string &help,
                     std::function<int()> action, bool reads_input = true) {
    CLI::App *sub = app.add_subcommand(name, help);
    if (reads_input) {
      sub->add_option("--in", ctx.paths, "Input automaton file (repeatable)");
      sub->add_option("files", ctx.paths, "Input automaton files");
    }
    actions[sub] = std::move(action);
    return sub;
  };

  command("determinize", "Subset construction", [&] {
    out << serialize(determinize(ctx.one()));
    return kOk;
  });
  command("reverse", "Reverse every edge, swap initial and final", [&] {
    out << serialize(reverse(ctx.one()));
    return kOk;
  });
  command("complement", "Complement (determinizing first)", [&] {
    out << serialize(complement(determinize(ctx.one())));
    return kOk;
  });

  std::string algo = "moore";
  command("minimize", "Minimal DFA", [&] {
    const Nfa n = ctx.one();
    if (algo == "moore")
      out << serialize(moore_dfa(determinize(n)));
    else
      out << serialize(determinize(reverse(determinize(reverse(n)))));
    return kOk;
  })->add_option("--algo", algo, "moore or brzozowski")
      ->check(CLI::IsMember({"moore", "brzozowski"}));

  command("atomaton", "Atomaton of the language", [&] {
    out << serialize(atomaton(ctx.one()));
    return kOk;
  });
  command("partial-atomaton", "Partial atomaton of the NFA", [&] {
    out << serialize(partial_atomaton(ctx.one()));
    return kOk;
  });
  command("atoms", "List the atoms of the language", [&] {
    out << format_atoms(compute_atoms(ctx.one()));
    return kOk;
  });
  command("check-atomic", "Is every right language a union of atoms", [&] {
    const bool ok = is_atomic(ctx.one());
    out << "atomic: " << verdict(ok) << '\n';
    return ok ? kOk : kFail;
  });
  command("check-corollary",
          "Five equivalent conditions for a minimal determinization", [&] {
            const CorollaryReport r = corollary_equivalences(ctx.one());
            const char *names[] = {"determinization minimal",
                                   "congruences equal", "subsets separated",
                                   "left languages closed", "reverse atomic"};
            const auto v = r.values();
            for (std::size_t i = 0; i < v.size(); ++i)
              out << '(' << static_cast<char>('a' + i) << ") " << names[i]
                  << ": " << verdict(v[i]) << '\n';
            out << "agreement: " << verdict(r.agree()) << '\n';
            return r.agree() ? kOk : kFail;
          });
  command("verify-diagram", "Check every edge of the construction diagram",
          [&] {
            const DiagramReport r = verify_diagram(ctx.one());
            out << format_report(r);
            return r.passed() ? kOk : kFail;
          });
  command("trace-moore", "Moore refinement steps", [&] {
    out << format_trace(moore_trace(as_reachable_dfa(ctx.one())));
    return kOk;
  });

  GenParams gen;
  CLI::App *random = command("random", "Seeded random NFA", [&] {
    out << serialize(random_nfa(gen));
    return kOk;
  }, false);
  random->add_option("--states", gen.state_count, "1..10")
      ->capture_default_str();
  random->add_option("--alphabet", gen.alphabet_size, "Symbols a, b, ... (1..4)")
      ->capture_default_str();
  random->add_option("--density", gen.transition_density,
                     "Probability of each edge (q, a, t)")
      ->capture_default_str();
  random->add_option("--initial-density", gen.initial_density,
                     "Probability a state is initial")
      ->capture_default_str();
  random->add_option("--final-density", gen.final_density,
                     "Probability a state is final")
      ->capture_default_str();
  random->add_option("--seed", gen.seed)->capture_default_str();
  random->add_flag("--allow-empty-initial", gen.allow_empty_initial,
                   "Keep an empty initial set instead of drawing one state");

  command("equal", "Language equality of two automata", [&] {
    const auto ns = load_all(ctx.paths, in, 2);
    if (auto w = distinguishing_word(ns[0], ns[1])) {
      out << "different: " << format_word(ns[0].alphabet(), *w) << '\n';
      return kFail;
    }
    out << "equal\n";
    return kOk;
  });

  bool co = false;
  command("isomorphic", "Isomorphism of two DFAs (or co-DFAs with --co)", [&] {
    const auto ns = load_all(ctx.paths, in, 2);
    const bool iso = co ? codfa_isomorphic(ns[0], ns[1])
                        : dfa_isomorphic(require_dfa(ns[0], "first"),
                                         require_dfa(ns[1], "second"));
    out << (iso ? "isomorphic" : "not isomorphic") << '\n';
    return iso ? kOk : kFail;
  })->add_flag("--co", co, "Compare co-deterministic automata");

  std::size_t max_len = 0;
  command("enumerate", "Accepted words up to a length", [&] {
    const Nfa n = ctx.one();
    for (const Word &w : enumerate_accepted(n, max_len))
      out << format_word(n.alphabet(), w) << '\n';
    return kOk;
  })->add_option("--max-len", max_len)->required();

  command("dot", "Graphviz rendering", [&] {
    out << to_dot(ctx.one());
    return kOk;
  });

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (auto &[sub, action] : actions) {
    if (!sub->parsed())
      continue;
    try {
      return action();
    } catch (const InputError &e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }
  return kInputError;
}

} // namespace nerode
