#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crn/linalg.hpp"
#include "crn/network.hpp"

namespace crn {

// A non-basis reaction vector written in basis coordinates.
struct Relation {
  std::size_t reaction = 0;
  RationalVector coefficients;  // one per vertex, in basis order

  friend bool operator==(const Relation&, const Relation&) = default;
};

// Undirected graph with one vertex per basis reaction vector. Vertices i and j
// are adjacent when some non-basis reaction vector needs both of them with
// nonzero coefficients.
struct CoordinateGraph {
  std::size_t vertex_count = 0;
  std::vector<std::size_t> vertex_reactions;  // basis reaction index per vertex
  std::vector<std::string> vertex_labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted, unique
  std::vector<Relation> relations;                         // in reaction order

  friend bool operator==(const CoordinateGraph&, const CoordinateGraph&) = default;
};

// Reaction-vector rows of the network, i.e. the transpose of N.
RationalMatrix reaction_vector_matrix(const Network& net);

// `basis` must select rows of reaction_vector_matrix(net).
CoordinateGraph build_coordinate_graph(const Network& net, const BasisSelection& basis);
CoordinateGraph build_coordinate_graph(const Network& net);

// Vertex sets, each ascending, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const CoordinateGraph& g);

// Groups of reaction indices; see Decomposition for the ordering rule.
using ReactionPartition = std::vector<std::vector<std::size_t>>;

struct Decomposition {
  ReactionPartition parts;  // each ascending, ordered by smallest reaction
  std::vector<std::size_t> part_ranks;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// One part per connected component of the coordinate graph, or nullopt when
// the graph is connected (only the trivial decomposition is independent).
// Throws InternalError if the constructed partition is not independent.
std::optional<Decomposition> find_independent_decomposition(const Network& net);
std::optional<Decomposition> find_independent_decomposition(const Network& net, const BasisSelection& basis);

struct IndependenceReport {
  std::size_t network_rank = 0;
  std::vector<std::size_t> part_ranks;
  bool independent = false;
  std::size_t incidence_network_rank = 0;
  std::vector<std::size_t> incidence_part_ranks;
  bool incidence_independent = false;

  friend bool operator==(const IndependenceReport&, const IndependenceReport&) = default;
};

// Throws PartitionError unless parts partitions {0, ..., r-1} into nonempty
// groups. Parts may be given in any order.
void validate_partition(const ReactionPartition& parts, std::size_t reaction_count);

// Sorts members and orders parts by smallest member.
ReactionPartition canonical_partition(ReactionPartition parts);

IndependenceReport verify_decomposition(const Network& net, const ReactionPartition& parts);

// All partitions into at most max_parts parts that are independent, ordered
// by part count, then lexicographically. Throws TooLargeError above
// kBruteForceReactionLimit reactions.
constexpr std::size_t kBruteForceReactionLimit = 12;
std::vector<Decomposition> brute_force_decompositions(const Network& net, std::size_t max_parts);

enum class PartitionRelation { equal, refinement, coarsening, incomparable };

std::string to_string(PartitionRelation rel);

// How a relates to b. Throws PartitionError if either is not a partition of
// its own union, MismatchedReactionSetError if the unions differ.
PartitionRelation refine_or_coarsen_check(const ReactionPartition& a, const ReactionPartition& b);

}  // namespace crn
