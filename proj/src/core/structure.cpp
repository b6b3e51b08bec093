#include "crn/core/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace crn {

StoichData stoich(const ReactionNetwork& net) {
  const std::size_t s = net.species_count();
  const std::size_t r = net.reaction_count();
  const std::size_t p = net.complex_count();
  StoichData out{IntMatrix(p, s), IntMatrix(s, r), IntMatrix(r, s), 0};
  for (std::size_t i = 0; i < p; ++i)
    for (const auto& [sp, c] : net.complexes()[i].terms()) out.complexes(i, sp) = static_cast<long>(c);
  for (std::size_t k = 0; k < r; ++k) {
    const Reaction& rx = net.reaction(k);
    for (const auto& [sp, c] : rx.reactant.terms()) {
      out.reactant(k, sp) = static_cast<long>(c);
      out.gamma(sp, k) -= static_cast<long>(c);
    }
    for (const auto& [sp, c] : rx.product.terms()) out.gamma(sp, k) += static_cast<long>(c);
  }
  out.rank = rank(out.gamma);
  return out;
}

std::vector<Integer> reaction_vector(const Reaction& r, std::size_t species_count) {
  std::vector<Integer> v(species_count, Integer(0));
  for (const auto& [sp, c] : r.reactant.terms()) v.at(sp) -= static_cast<long>(c);
  for (const auto& [sp, c] : r.product.terms()) v.at(sp) += static_cast<long>(c);
  return v;
}

std::size_t stoichiometric_rank(const ReactionNetwork& net) { return stoich(net).rank; }

std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net) {
  const std::size_t p = net.complex_count();
  std::vector<std::size_t> parent(p);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < net.reaction_count(); ++k) {
    std::size_t a = find(net.source_complex(k));
    std::size_t b = find(net.target_complex(k));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> slot(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t root = find(i);
    if (slot[root] == p) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(i);
  }
  return classes;
}

std::vector<std::vector<std::size_t>> strong_components(const ReactionNetwork& net) {
  // Tarjan, iterative.
  const std::size_t p = net.complex_count();
  std::vector<std::vector<std::size_t>> out_edges(p);
  for (std::size_t k = 0; k < net.reaction_count(); ++k)
    out_edges[net.source_complex(k)].push_back(net.target_complex(k));

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(p, kUnvisited);
  std::vector<std::size_t> low(p, 0);
  std::vector<bool> on_stack(p, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < p; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < out_edges[v].size()) {
        std::size_t w = out_edges[v][edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      const std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  std::sort(components.begin(), components.end());
  return components;
}

TerminalClasses terminal_strong_linkage_classes(const ReactionNetwork& net) {
  const std::size_t p = net.complex_count();
  const auto components = strong_components(net);
  std::vector<std::size_t> comp_of(p, 0);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t v : components[c]) comp_of[v] = c;
  std::vector<bool> terminal(components.size(), true);
  for (std::size_t k = 0; k < net.reaction_count(); ++k) {
    const std::size_t a = comp_of[net.source_complex(k)];
    const std::size_t b = comp_of[net.target_complex(k)];
    if (a != b) terminal[a] = false;
  }
  const auto classes = linkage_classes(net);
  std::vector<std::size_t> class_of(p, 0);
  for (std::size_t l = 0; l < classes.size(); ++l)
    for (std::size_t v : classes[l]) class_of[v] = l;

  TerminalClasses out;
  out.per_linkage_class.resize(classes.size());
  for (std::size_t c = 0; c < components.size(); ++c)
    if (terminal[c]) out.per_linkage_class[class_of[components[c].front()]].push_back(components[c]);
  for (const auto& t : out.per_linkage_class)
    if (t.size() != 1) out.unique_per_class = false;
  return out;
}

bool is_weakly_reversible(const ReactionNetwork& net) {
  const auto classes = linkage_classes(net);
  const auto components = strong_components(net);
  return classes.size() == components.size();
}

ReactionNetwork linkage_class_network(const ReactionNetwork& net, const std::vector<std::size_t>& complexes) {
  std::set<std::size_t> members(complexes.begin(), complexes.end());
  std::vector<Reaction> reactions;
  for (std::size_t k = 0; k < net.reaction_count(); ++k)
    if (members.contains(net.source_complex(k))) reactions.push_back(net.reaction(k));
  return ReactionNetwork::compacted(net.species(), reactions);
}

DeficiencyReport deficiency(const ReactionNetwork& net) {
  DeficiencyReport out;
  const auto classes = linkage_classes(net);
  out.complexes = net.complex_count();
  out.linkage_classes = classes.size();
  out.rank = stoichiometric_rank(net);
  out.applicable = terminal_strong_linkage_classes(net).unique_per_class;
  if (!out.applicable) return out;
  out.value = static_cast<long>(out.complexes) - static_cast<long>(out.linkage_classes) - static_cast<long>(out.rank);
  for (const auto& cls : classes) {
    const ReactionNetwork sub = linkage_class_network(net, cls);
    out.per_class.push_back(static_cast<long>(cls.size()) - 1 - static_cast<long>(stoichiometric_rank(sub)));
  }
  return out;
}

}  // namespace crn
