// crnkit: command-line front end for the multistationarity toolkit.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

#include "crn/core/format.hpp"
#include "crn/core/mass_action.hpp"
#include "crn/core/structure.hpp"
#include "crn/decide/decide.hpp"
#include "crn/embedding/embedding.hpp"
#include "crn/families/families.hpp"
#include "crn/numeric/witness.hpp"

using namespace crn;
using nlohmann::json;

namespace {

enum Exit { kConclusive = 0, kInputError = 2, kInconclusive = 3, kLimit = 4 };

ReactionNetwork load(const std::string& path) {
  ReactionNetwork net;
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    net = parse_network(text);
  } else {
    net = read_network_file(path);
  }
  if (net.reaction_count() == 0) throw std::invalid_argument("'" + path + "' contains no reactions");
  return net;
}

json summary(const ReactionNetwork& net) {
  const auto d = deficiency(net);
  json out;
  out["species"] = net.species_count();
  out["species_names"] = net.species();
  out["reactions"] = net.reaction_count();
  out["complexes"] = d.complexes;
  out["linkage_classes"] = d.linkage_classes;
  out["rank"] = d.rank;
  out["deficiency_applicable"] = d.applicable;
  out["deficiency"] = d.value ? json(*d.value) : json(nullptr);
  out["per_class"] = d.per_class;
  out["weakly_reversible"] = is_weakly_reversible(net);
  out["cfstr"] = is_cfstr(net);
  out["fully_open"] = is_fully_open(net);
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_summary(const json& s) {
  std::cout << "species: " << s["species"].get<std::size_t>() << "\n";
  std::cout << "reactions: " << s["reactions"].get<std::size_t>() << "\n";
  std::cout << "complexes: " << s["complexes"].get<std::size_t>() << "\n";
  std::cout << "linkage classes: " << s["linkage_classes"].get<std::size_t>() << "\n";
  std::cout << "rank: " << s["rank"].get<std::size_t>() << "\n";
  if (s["deficiency_applicable"].get<bool>()) {
    std::cout << "deficiency: " << s["deficiency"].get<long>() << "; per-class: [";
    const auto& pc = s["per_class"];
    for (std::size_t i = 0; i < pc.size(); ++i) std::cout << (i ? ", " : "") << pc[i].get<long>();
    std::cout << "]\n";
  } else {
    std::cout << "deficiency: not applicable (several terminal strong linkage classes in one linkage class)\n";
  }
  std::cout << "weakly reversible: " << yes_no(s["weakly_reversible"]) << "\n";
  std::cout << "cfstr: " << yes_no(s["cfstr"]) << "\n";
  std::cout << "fully open: " << yes_no(s["fully_open"]) << "\n";
}

void print_witness(const SteadyStateWitness& w) {
  std::cout << "kappa:";
  for (const auto& k : w.kappa) std::cout << " " << to_string(k);
  std::cout << "\nstarts: " << w.starts << ", converged: " << w.converged << "\n";
  std::cout << "steady states: " << w.states.size() << " (" << w.nondegenerate_count() << " nondegenerate, "
            << w.stable_count() << " stable)\n";
  for (const auto& st : w.states) {
    std::cout << " ";
    for (double v : st.x) std::cout << " " << v;
    std::cout << "  [" << to_string(st.stability) << (st.nondegenerate ? ", nondegenerate" : ", degenerate")
              << ", residual " << st.exact_residual << "]\n";
  }
}

int default_threads() {
  if (const char* env = std::getenv("CRNKIT_THREADS")) return std::atoi(env);
  return 0;
}

struct Common {
  std::string path;
  bool json = false;
  bool fully_open = false;
  int threads = default_threads();
};

ReactionNetwork input(const Common& c) {
  auto net = load(c.path);
  return c.fully_open ? fully_open_extension(net) : net;
}

void add_common(CLI::App* cmd, Common& c, bool open_flag = true) {
  cmd->add_option("path", c.path, "network file, or - for stdin")->required();
  cmd->add_flag("--json", c.json, "machine-readable output");
  if (open_flag) cmd->add_flag("--fully-open", c.fully_open, "use the fully open extension of the network");
  cmd->add_option("--threads", c.threads, "worker threads (default: $CRNKIT_THREADS or all)");
}

int run_info(const Common& c) {
  const auto net = input(c);
  const json s = summary(net);
  if (c.json)
    std::cout << json{{"network", render_network(net)}, {"summary", s}}.dump(2) << "\n";
  else
    print_summary(s);
  return kConclusive;
}

struct CheckArgs {
  std::size_t budget = 50;
  bool no_numeric = false;
  unsigned long long seed = 0;
  bool one_reaction_precludes = false;
};

int run_check(const Common& c, const CheckArgs& a) {
  const auto net = input(c);
  AnalyzeOptions o;
  o.numeric = !a.no_numeric;
  o.budget = a.budget;
  o.seed = a.seed;
  o.threads = c.threads;
  o.one_reaction_precludes = a.one_reaction_precludes;
  const Verdict v = analyze(net, o);
  const json s = summary(net);
  if (c.json) {
    std::cout << json{{"network", render_network(net)}, {"summary", s}, {"verdict", to_json(v)}}.dump(2) << "\n";
  } else {
    std::cout << render_network(net);
    print_summary(s);
    std::cout << "verdict: " << to_string(v.status) << "\n";
    if (v.certificate) std::cout << "certificate: " << v.certificate->kind << " " << v.certificate->data.dump() << "\n";
    for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
  }
  return v.status == Status::inconclusive ? kInconclusive : kConclusive;
}

int run_atoms(const Common& c) {
  const auto net = input(c);
  const auto matches = all_atom_matches(net);
  json list = json::array();
  for (const auto& m : matches) {
    json map = json::object();
    for (std::size_t i = 0; i < m.witness.species_map.size(); ++i)
      map[m.pattern.species_name(i)] = net.species_name(m.witness.species_map[i]);
    list.push_back({{"atom", m.atom}, {"species_map", map}, {"reaction_map", m.witness.reaction_map}});
  }
  if (c.json) {
    std::cout << json{{"network", render_network(net)}, {"fully_open", is_fully_open(net)}, {"atoms", list}}.dump(2)
              << "\n";
  } else {
    if (matches.empty()) std::cout << "no known atom is embedded\n";
    for (const auto& m : list) {
      std::cout << m["atom"].get<std::string>() << ":";
      for (const auto& [k, v] : m["species_map"].items()) std::cout << " " << k << "->" << v.get<std::string>();
      std::cout << "\n";
    }
    if (!matches.empty() && !is_fully_open(net))
      std::cout << "note: the network is not fully open; the atoms certify its fully open extension\n";
  }
  return kConclusive;
}

struct GenerateArgs {
  std::string family;
  std::vector<int> params;
  bool fully_open = false;
};

int run_generate(const GenerateArgs& g) {
  const Family f = parse_family(g.family);
  FamilySpec spec;
  if (f == Family::atom) {
    if (g.params.size() != 1) throw std::invalid_argument("atom takes one index");
    spec = FamilySpec::atom_number(g.params[0]);
  } else {
    if (g.params.size() != 2) throw std::invalid_argument(g.family + " takes two parameters m n");
    spec = FamilySpec::of(f, g.params[0], g.params[1]);
  }
  auto net = generate(spec);
  if (g.fully_open) net = fully_open_extension(net);
  std::cout << render_network(net);
  return kConclusive;
}

struct WitnessArgs {
  std::vector<std::string> kappa;
  bool search = false;
  std::size_t budget = 10000;
  unsigned long long seed = 0;
};

int run_witness(const Common& c, const WitnessArgs& a) {
  const auto net = input(c);
  if (!is_fully_open(net)) throw PreconditionError("witness search needs a fully open network (try --fully-open)");
  std::optional<SteadyStateWitness> w;
  std::size_t samples = 0;
  if (a.search) {
    RateSearchOptions o;
    o.budget = a.budget;
    o.seed = a.seed;
    o.witness.threads = c.threads;
    if (auto found = rate_search(net, o)) {
      samples = found->samples;
      w = std::move(found->witness);
    }
  } else {
    if (a.kappa.size() != net.reaction_count())
      throw std::invalid_argument("expected " + std::to_string(net.reaction_count()) + " rate constants, got " +
                                  std::to_string(a.kappa.size()));
    std::vector<Rational> kappa;
    for (const auto& k : a.kappa) kappa.push_back(parse_rational(k));
    WitnessOptions o;
    o.threads = c.threads;
    w = witness_search(net, kappa, o);
  }
  if (c.json) {
    json out{{"network", render_network(net)}, {"witness", w ? to_json(*w) : json(nullptr)}};
    if (a.search) out["samples"] = samples;
    std::cout << out.dump(2) << "\n";
  } else if (w) {
    if (a.search) std::cout << "found after " << samples << " rate samples\n";
    print_witness(*w);
  } else {
    std::cout << "no rate constants with two nondegenerate steady states in " << a.budget << " samples\n";
  }
  return w ? kConclusive : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide multistationarity of mass-action reaction networks"};
  app.require_subcommand(1);

  Common info_c, check_c, atoms_c, witness_c;
  CheckArgs check_a;
  GenerateArgs gen_a;
  WitnessArgs wit_a;

  auto* info = app.add_subcommand("info", "structural summary");
  add_common(info, info_c);

  auto* check = app.add_subcommand("check", "run the decision pipeline");
  add_common(check, check_c);
  check->add_option("--budget", check_a.budget, "rate samples for the numeric stage")->capture_default_str();
  check->add_flag("--no-numeric", check_a.no_numeric, "skip the numeric witness search");
  check->add_option("--seed", check_a.seed, "seed for the rate sampler")->capture_default_str();
  check->add_flag("--one-reaction-precludes", check_a.one_reaction_precludes,
                  "let the one-reaction classification rule out multistationarity");

  auto* atoms_cmd = app.add_subcommand("atoms", "list embedded atoms of multistationarity");
  add_common(atoms_cmd, atoms_c);

  auto* gen = app.add_subcommand("generate", "print a family member, e.g. `generate K 2 3` or `generate atom 7`");
  gen->add_option("family", gen_a.family, "G, H, Gbar, K or atom")->required();
  gen->add_option("params", gen_a.params, "m n, or the atom index")->required();
  gen->add_flag("--fully-open", gen_a.fully_open, "print the fully open extension");

  auto* wit = app.add_subcommand("witness", "numeric steady-state witness");
  add_common(wit, witness_c);
  auto* kappa = wit->add_option("--kappa", wit_a.kappa, "rate constants in reaction order (rationals)");
  auto* search = wit->add_flag("--search", wit_a.search, "sample rate constants until two nondegenerate states appear");
  kappa->excludes(search);
  wit->add_option("--budget", wit_a.budget, "rate samples for --search")->capture_default_str();
  wit->add_option("--seed", wit_a.seed, "seed for --search")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*info) return run_info(info_c);
    if (*check) return run_check(check_c, check_a);
    if (*atoms_cmd) return run_atoms(atoms_c);
    if (*gen) return run_generate(gen_a);
    if (*wit) {
      if (!wit_a.search && wit_a.kappa.empty()) throw std::invalid_argument("witness needs --kappa or --search");
      return run_witness(witness_c, wit_a);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
