#include "crn/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "crn/errors.hpp"
#include "detail/disjoint_sets.hpp"

namespace crn {

RationalMatrix reaction_vector_matrix(const Network& net) {
  return stoichiometric_matrix(net).transpose();
}

CoordinateGraph build_coordinate_graph(const Network& net, const BasisSelection& basis) {
  const RationalMatrix rows = reaction_vector_matrix(net);
  const RationalMatrix basis_rows = rows.select_rows(basis.basis_rows);

  CoordinateGraph g;
  g.vertex_count = basis.rank();
  g.vertex_reactions = basis.basis_rows;
  for (std::size_t j : basis.basis_rows) g.vertex_labels.push_back(net.reaction_label(j));

  std::set<std::pair<std::size_t, std::size_t>> edges;
  const std::set<std::size_t> in_basis(basis.basis_rows.begin(), basis.basis_rows.end());
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    if (in_basis.contains(k)) continue;
    Relation rel{k, coordinates(rows.row(k), basis_rows)};
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < rel.coefficients.size(); ++v)
      if (rel.coefficients[v] != 0) support.push_back(v);
    for (std::size_t a = 0; a < support.size(); ++a)
      for (std::size_t b = a + 1; b < support.size(); ++b) edges.emplace(support[a], support[b]);
    g.relations.push_back(std::move(rel));
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

CoordinateGraph build_coordinate_graph(const Network& net) {
  return build_coordinate_graph(net, select_basis_rows(reaction_vector_matrix(net)));
}

std::vector<std::vector<std::size_t>> connected_components(const CoordinateGraph& g) {
  detail::DisjointSets sets(g.vertex_count);
  for (const auto& [a, b] : g.edges) sets.unite(a, b);
  return sets.groups();
}

ReactionPartition canonical_partition(ReactionPartition parts) {
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return a.empty() && !b.empty();
    return a.front() < b.front();
  });
  return parts;
}

void validate_partition(const ReactionPartition& parts, std::size_t reaction_count) {
  std::vector<bool> seen(reaction_count, false);
  std::size_t covered = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw PartitionError("partition contains an empty part");
    for (std::size_t j : part) {
      if (j >= reaction_count) throw PartitionError("reaction index " + std::to_string(j) + " out of range");
      if (seen[j]) throw PartitionError("reaction index " + std::to_string(j) + " appears in two parts");
      seen[j] = true;
      ++covered;
    }
  }
  if (covered != reaction_count) throw PartitionError("partition does not cover every reaction");
}

IndependenceReport verify_decomposition(const Network& net, const ReactionPartition& parts) {
  validate_partition(parts, net.reaction_count());
  const RationalMatrix n = stoichiometric_matrix(net);
  const RationalMatrix ia = incidence_matrix(net);

  IndependenceReport rep;
  rep.network_rank = rank(n);
  rep.incidence_network_rank = rank(ia);
  for (const auto& part : parts) {
    rep.part_ranks.push_back(rank(n.select_columns(part)));
    // Rows of complexes outside the part are zero in these columns, so this
    // equals the rank of the subnetwork's own incidence matrix.
    rep.incidence_part_ranks.push_back(rank(ia.select_columns(part)));
  }
  const auto sum = [](const std::vector<std::size_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::size_t{0});
  };
  if (sum(rep.part_ranks) < rep.network_rank) throw InternalError("part ranks are not superadditive");
  rep.independent = sum(rep.part_ranks) == rep.network_rank;
  rep.incidence_independent = sum(rep.incidence_part_ranks) == rep.incidence_network_rank;
  return rep;
}

std::optional<Decomposition> find_independent_decomposition(const Network& net, const BasisSelection& basis) {
  const CoordinateGraph g = build_coordinate_graph(net, basis);
  const auto components = connected_components(g);
  if (components.size() <= 1) return std::nullopt;

  std::vector<std::size_t> component_of(g.vertex_count);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t v : components[c]) component_of[v] = c;

  ReactionPartition parts(components.size());
  for (std::size_t v = 0; v < g.vertex_count; ++v) parts[component_of[v]].push_back(g.vertex_reactions[v]);
  for (const Relation& rel : g.relations) {
    auto lead = std::find_if(rel.coefficients.begin(), rel.coefficients.end(),
                             [](const Rational& q) { return q != 0; });
    if (lead == rel.coefficients.end()) throw InternalError("zero reaction vector");
    parts[component_of[static_cast<std::size_t>(lead - rel.coefficients.begin())]].push_back(rel.reaction);
  }

  Decomposition d{canonical_partition(std::move(parts)), {}};
  const IndependenceReport rep = verify_decomposition(net, d.parts);
  if (!rep.independent) throw InternalError("coordinate-graph partition is not independent");
  d.part_ranks = rep.part_ranks;
  return d;
}

std::optional<Decomposition> find_independent_decomposition(const Network& net) {
  return find_independent_decomposition(net, select_basis_rows(reaction_vector_matrix(net)));
}

std::vector<Decomposition> brute_force_decompositions(const Network& net, std::size_t max_parts) {
  const std::size_t r = net.reaction_count();
  if (r > kBruteForceReactionLimit)
    throw TooLargeError("brute-force enumeration is limited to " + std::to_string(kBruteForceReactionLimit) +
                        " reactions, network has " + std::to_string(r));
  if (max_parts == 0) throw std::invalid_argument("max_parts must be positive");

  const RationalMatrix rows = reaction_vector_matrix(net);
  std::vector<int> rank_memo(std::size_t{1} << r, -1);
  const auto subset_rank = [&](std::size_t mask) {
    int& memo = rank_memo[mask];
    if (memo < 0) {
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < r; ++j)
        if (mask >> j & 1) members.push_back(j);
      memo = static_cast<int>(rank(rows.select_rows(members)));
    }
    return static_cast<std::size_t>(memo);
  };
  const std::size_t full_rank = subset_rank((std::size_t{1} << r) - 1);

  std::vector<Decomposition> found;
  std::vector<std::size_t> block(r, 0);
  // Restricted growth strings: block[0] = 0, block[i] <= max(block[0..i)) + 1.
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t i, std::size_t used) {
    if (i == r) {
      std::vector<std::size_t> masks(used, 0);
      for (std::size_t j = 0; j < r; ++j) masks[block[j]] |= std::size_t{1} << j;
      std::size_t total = 0;
      std::vector<std::size_t> ranks;
      for (std::size_t mask : masks) {
        ranks.push_back(subset_rank(mask));
        total += ranks.back();
        if (total > full_rank) return;
      }
      if (total != full_rank) return;
      Decomposition d;
      d.parts.resize(used);
      for (std::size_t j = 0; j < r; ++j) d.parts[block[j]].push_back(j);
      d.part_ranks = std::move(ranks);
      found.push_back(std::move(d));
      return;
    }
    const std::size_t limit = std::min(used + 1, max_parts);
    for (std::size_t b = 0; b < limit; ++b) {
      block[i] = b;
      visit(i + 1, std::max(used, b + 1));
    }
  };
  visit(0, 0);

  std::stable_sort(found.begin(), found.end(), [](const Decomposition& a, const Decomposition& b) {
    if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
    return a.parts < b.parts;
  });
  return found;
}

std::string to_string(PartitionRelation rel) {
  switch (rel) {
    case PartitionRelation::equal: return "equal";
    case PartitionRelation::refinement: return "refinement";
    case PartitionRelation::coarsening: return "coarsening";
    case PartitionRelation::incomparable: return "incomparable";
  }
  return "incomparable";
}

namespace {

std::map<std::size_t, std::size_t> owner_map(const ReactionPartition& parts) {
  std::map<std::size_t, std::size_t> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw PartitionError("partition contains an empty part");
    for (std::size_t j : parts[p])
      if (!owner.emplace(j, p).second)
        throw PartitionError("reaction index " + std::to_string(j) + " appears in two parts");
  }
  return owner;
}

bool refines(const ReactionPartition& fine, const std::map<std::size_t, std::size_t>& coarse_owner) {
  for (const auto& part : fine) {
    const std::size_t target = coarse_owner.at(part.front());
    for (std::size_t j : part)
      if (coarse_owner.at(j) != target) return false;
  }
  return true;
}

}  // namespace

PartitionRelation refine_or_coarsen_check(const ReactionPartition& a, const ReactionPartition& b) {
  const auto owner_a = owner_map(a);
  const auto owner_b = owner_map(b);
  const bool same_set = owner_a.size() == owner_b.size() &&
                        std::equal(owner_a.begin(), owner_a.end(), owner_b.begin(),
                                   [](const auto& x, const auto& y) { return x.first == y.first; });
  if (!same_set) throw MismatchedReactionSetError("partitions cover different reaction sets");

  const bool a_refines_b = refines(a, owner_b);
  const bool b_refines_a = refines(b, owner_a);
  if (a_refines_b && b_refines_a) return PartitionRelation::equal;
  if (a_refines_b) return PartitionRelation::refinement;
  if (b_refines_a) return PartitionRelation::coarsening;
  return PartitionRelation::incomparable;
}

}  // namespace crn
