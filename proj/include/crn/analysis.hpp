#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crn/network.hpp"

namespace crn {

// Groups of complex indices. Each group is sorted and groups are ordered by
// their smallest member.
using ComplexPartition = std::vector<std::vector<std::size_t>>;

// Connected components of the undirected reaction graph on complexes.
ComplexPartition linkage_classes(const Network& net);
// Strongly connected components of the directed reaction graph.
ComplexPartition strong_linkage_classes(const Network& net);
// Strong linkage classes with no reaction leaving them.
ComplexPartition terminal_strong_linkage_classes(const Network& net);

struct NetworkNumbers {
  std::size_t species = 0;
  std::size_t complexes = 0;
  std::size_t reactions = 0;
  std::size_t irreversible_reactions = 0;
  std::size_t linkage_classes = 0;
  std::size_t strong_linkage_classes = 0;
  std::size_t terminal_strong_linkage_classes = 0;
  std::size_t rank = 0;
  std::size_t deficiency = 0;
  bool weakly_reversible = false;

  friend bool operator==(const NetworkNumbers&, const NetworkNumbers&) = default;
};

NetworkNumbers network_numbers(const Network& net);

// Network induced by a set of reaction indices: the chosen reactions in
// parent order, the complexes they touch and the species occurring in those
// complexes, both in parent order. Effective parent labels are carried over.
// Throws EmptySubsetError for an empty set, std::out_of_range for a bad index.
Network subnetwork(const Network& net, const std::vector<std::size_t>& reactions);

// Deficiency n_k - 1 - s_k of each linkage class, where s_k is the rank of
// the reaction vectors of the reactions inside class k.
std::vector<std::size_t> linkage_class_deficiencies(const Network& net);

enum class Theorem { deficiency_zero, deficiency_one };

enum class Conclusion {
  not_applicable,
  no_positive_steady_state,
  at_most_one_steady_state_per_class,
  exactly_one_steady_state_per_class,
};

struct DeficiencyVerdict {
  Theorem theorem = Theorem::deficiency_zero;
  bool applicable = false;
  std::vector<std::pair<std::string, bool>> conditions;
  Conclusion conclusion = Conclusion::not_applicable;
  std::string statement;

  friend bool operator==(const DeficiencyVerdict&, const DeficiencyVerdict&) = default;
};

std::string to_string(Theorem t);
std::string to_string(Conclusion c);
Theorem theorem_from_string(const std::string& s);
Conclusion conclusion_from_string(const std::string& s);

DeficiencyVerdict deficiency_zero_check(const Network& net);
DeficiencyVerdict deficiency_one_check(const Network& net);

}  // namespace crn
