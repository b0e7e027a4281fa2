#include "crn/analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "crn/errors.hpp"
#include "detail/disjoint_sets.hpp"

namespace crn {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<std::size_t>> successors(const Network& net) {
  std::vector<std::vector<std::size_t>> out(net.complex_count());
  for (const Reaction& rx : net.reactions()) out[rx.reactant].push_back(rx.product);
  return out;
}

// Iterative Tarjan; returns the component id of every complex.
std::vector<std::size_t> scc_ids(const std::vector<std::vector<std::size_t>>& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // vertex, next edge
  std::size_t counter = 0, comp_count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < graph[v].size()) {
        const std::size_t w = graph[v][edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
        } while (w != done);
        ++comp_count;
      }
    }
  }
  return comp;
}

ComplexPartition group_by(const std::vector<std::size_t>& ids) {
  ComplexPartition out;
  std::vector<std::size_t> remap(ids.size() + 1, kUnvisited);
  for (std::size_t c = 0; c < ids.size(); ++c) {
    std::size_t& s = remap[ids[c]];
    if (s == kUnvisited) {
      s = out.size();
      out.emplace_back();
    }
    out[s].push_back(c);
  }
  return out;
}

std::size_t reaction_rank(const Network& net, const std::vector<std::size_t>& reactions) {
  if (reactions.empty()) return 0;
  std::vector<RationalVector> rows;
  rows.reserve(reactions.size());
  for (std::size_t j : reactions) rows.push_back(net.reaction_vector(j));
  return rank(RationalMatrix::from_rows(rows, net.species_count()));
}

}  // namespace

ComplexPartition linkage_classes(const Network& net) {
  detail::DisjointSets sets(net.complex_count());
  for (const Reaction& rx : net.reactions()) sets.unite(rx.reactant, rx.product);
  return sets.groups();
}

ComplexPartition strong_linkage_classes(const Network& net) {
  return group_by(scc_ids(successors(net)));
}

ComplexPartition terminal_strong_linkage_classes(const Network& net) {
  const std::vector<std::size_t> ids = scc_ids(successors(net));
  std::set<std::size_t> has_exit;
  for (const Reaction& rx : net.reactions())
    if (ids[rx.reactant] != ids[rx.product]) has_exit.insert(ids[rx.reactant]);
  ComplexPartition out;
  for (auto& group : group_by(ids))
    if (!has_exit.contains(ids[group.front()])) out.push_back(std::move(group));
  return out;
}

NetworkNumbers network_numbers(const Network& net) {
  NetworkNumbers nn;
  nn.species = net.species_count();
  nn.complexes = net.complex_count();
  nn.reactions = net.reaction_count();

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const Reaction& rx : net.reactions()) pairs.emplace(rx.reactant, rx.product);
  for (const Reaction& rx : net.reactions())
    if (!pairs.contains({rx.product, rx.reactant})) ++nn.irreversible_reactions;

  nn.linkage_classes = linkage_classes(net).size();
  nn.strong_linkage_classes = strong_linkage_classes(net).size();
  nn.terminal_strong_linkage_classes = terminal_strong_linkage_classes(net).size();
  nn.rank = rank(stoichiometric_matrix(net));
  if (nn.complexes < nn.linkage_classes + nn.rank)
    throw InternalError("negative deficiency");
  nn.deficiency = nn.complexes - nn.linkage_classes - nn.rank;
  nn.weakly_reversible = nn.strong_linkage_classes == nn.linkage_classes;
  return nn;
}

Network subnetwork(const Network& net, const std::vector<std::size_t>& reactions) {
  if (reactions.empty()) throw EmptySubsetError("subnetwork needs at least one reaction");
  std::vector<std::size_t> chosen(reactions);
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  if (chosen.back() >= net.reaction_count()) throw std::out_of_range("reaction index out of range");

  std::vector<bool> used_complex(net.complex_count(), false);
  for (std::size_t j : chosen) {
    used_complex[net.reactions()[j].reactant] = true;
    used_complex[net.reactions()[j].product] = true;
  }
  std::vector<bool> used_species(net.species_count(), false);
  for (std::size_t c = 0; c < net.complex_count(); ++c)
    if (used_complex[c])
      for (const auto& [s, coefficient] : net.complexes()[c].terms()) used_species[s] = true;

  Network sub;
  std::vector<std::size_t> species_map(net.species_count(), kUnvisited);
  for (std::size_t s = 0; s < net.species_count(); ++s) {
    if (!used_species[s]) continue;
    species_map[s] = sub.species_.size();
    sub.species_.push_back(Species{net.species()[s].name, sub.species_.size()});
  }
  std::vector<std::size_t> complex_map(net.complex_count(), kUnvisited);
  for (std::size_t c = 0; c < net.complex_count(); ++c) {
    if (!used_complex[c]) continue;
    Complex::Terms terms;
    for (const auto& [s, coefficient] : net.complexes()[c].terms()) terms[species_map[s]] = coefficient;
    complex_map[c] = sub.complexes_.size();
    sub.complexes_.emplace_back(std::move(terms));
  }
  for (std::size_t j : chosen) {
    const Reaction& rx = net.reactions()[j];
    sub.reactions_.push_back(
        Reaction{net.reaction_label(j), complex_map[rx.reactant], complex_map[rx.product]});
  }
  return sub;
}

std::vector<std::size_t> linkage_class_deficiencies(const Network& net) {
  const ComplexPartition classes = linkage_classes(net);
  std::vector<std::size_t> class_of(net.complex_count());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (std::size_t c : classes[k]) class_of[c] = k;

  std::vector<std::vector<std::size_t>> members(classes.size());
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    members[class_of[net.reactions()[j].reactant]].push_back(j);

  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const std::size_t s_k = reaction_rank(net, members[k]);
    if (classes[k].size() < 1 + s_k) throw InternalError("negative linkage-class deficiency");
    out.push_back(classes[k].size() - 1 - s_k);
  }
  return out;
}

std::string to_string(Theorem t) {
  return t == Theorem::deficiency_zero ? "deficiency_zero" : "deficiency_one";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::not_applicable: return "not_applicable";
    case Conclusion::no_positive_steady_state: return "no_positive_steady_state";
    case Conclusion::at_most_one_steady_state_per_class: return "at_most_one_steady_state_per_class";
    case Conclusion::exactly_one_steady_state_per_class: return "exactly_one_steady_state_per_class";
  }
  return "not_applicable";
}

Theorem theorem_from_string(const std::string& s) {
  if (s == "deficiency_zero") return Theorem::deficiency_zero;
  if (s == "deficiency_one") return Theorem::deficiency_one;
  throw std::invalid_argument("unknown theorem '" + s + "'");
}

Conclusion conclusion_from_string(const std::string& s) {
  for (Conclusion c : {Conclusion::not_applicable, Conclusion::no_positive_steady_state,
                       Conclusion::at_most_one_steady_state_per_class,
                       Conclusion::exactly_one_steady_state_per_class})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown conclusion '" + s + "'");
}

DeficiencyVerdict deficiency_zero_check(const Network& net) {
  const NetworkNumbers nn = network_numbers(net);
  DeficiencyVerdict v;
  v.theorem = Theorem::deficiency_zero;
  v.conditions = {{"deficiency is zero", nn.deficiency == 0},
                  {"weakly reversible", nn.weakly_reversible}};
  v.applicable = nn.deficiency == 0;
  if (!v.applicable) {
    v.statement = "Deficiency is " + std::to_string(nn.deficiency) + "; the theorem does not apply.";
  } else if (!nn.weakly_reversible) {
    v.conclusion = Conclusion::no_positive_steady_state;
    v.statement =
        "Not weakly reversible: for any kinetics there is no positive steady state and no "
        "cyclic composition trajectory through a positive composition.";
  } else {
    v.conclusion = Conclusion::exactly_one_steady_state_per_class;
    v.statement =
        "Weakly reversible: under mass-action kinetics every positive stoichiometric "
        "compatibility class holds exactly one steady state, it is asymptotically stable, and "
        "no nontrivial positive cyclic composition trajectory exists.";
  }
  return v;
}

DeficiencyVerdict deficiency_one_check(const Network& net) {
  const NetworkNumbers nn = network_numbers(net);
  const ComplexPartition classes = linkage_classes(net);
  const ComplexPartition terminal = terminal_strong_linkage_classes(net);
  const std::vector<std::size_t> class_deficiency = linkage_class_deficiencies(net);

  std::vector<std::size_t> class_of(net.complex_count());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (std::size_t c : classes[k]) class_of[c] = k;
  std::vector<std::size_t> terminal_per_class(classes.size(), 0);
  for (const auto& t : terminal) ++terminal_per_class[class_of[t.front()]];

  const bool one_terminal = std::all_of(terminal_per_class.begin(), terminal_per_class.end(),
                                        [](std::size_t t) { return t == 1; });
  const bool each_at_most_one = std::all_of(class_deficiency.begin(), class_deficiency.end(),
                                            [](std::size_t d) { return d <= 1; });
  const bool sums_match =
      std::accumulate(class_deficiency.begin(), class_deficiency.end(), std::size_t{0}) == nn.deficiency;

  DeficiencyVerdict v;
  v.theorem = Theorem::deficiency_one;
  v.conditions = {{"one terminal strong linkage class per linkage class", one_terminal},
                  {"each linkage-class deficiency at most one", each_at_most_one},
                  {"linkage-class deficiencies sum to the network deficiency", sums_match},
                  {"weakly reversible", nn.weakly_reversible}};
  v.applicable = one_terminal && each_at_most_one && sums_match;
  if (!v.applicable) {
    v.statement = "At least one hypothesis fails; the theorem does not apply.";
  } else if (nn.weakly_reversible) {
    v.conclusion = Conclusion::exactly_one_steady_state_per_class;
    v.statement =
        "Under mass-action kinetics every positive stoichiometric compatibility class holds "
        "exactly one steady state.";
  } else {
    v.conclusion = Conclusion::at_most_one_steady_state_per_class;
    v.statement =
        "Under mass-action kinetics no positive stoichiometric compatibility class holds more "
        "than one steady state.";
  }
  return v;
}

}  // namespace crn
