#include <map>

#include "doctest.h"

#include "crn/decomposition.hpp"
#include "crn/errors.hpp"
#include "crn/parser.hpp"
#include "support.hpp"

using namespace crn;

namespace {

std::map<std::string, std::vector<Rational>> relations_by_label(const Network& net, const CoordinateGraph& g) {
  std::map<std::string, std::vector<Rational>> out;
  for (const Relation& rel : g.relations) out[net.reaction_label(rel.reaction)] = rel.coefficients;
  return out;
}

std::vector<Rational> q(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

std::vector<std::size_t> idx(const Network& net, std::initializer_list<const char*> labels) {
  std::vector<std::size_t> out;
  for (const char* label : labels) out.push_back(*net.find_reaction(label));
  return out;
}

BasisSelection basis_of(const Network& net, std::initializer_list<const char*> labels) {
  return basis_from_rows(reaction_vector_matrix(net), idx(net, labels));
}

// Each relation, recombined from raw integer reaction vectors, gives back the
// reaction it describes.
void check_relations_recompose(const Network& net, const CoordinateGraph& g) {
  const auto rows = crn::testing::integer_reaction_rows(net);
  for (const Relation& rel : g.relations) {
    std::vector<Rational> sum(net.species_count());
    for (std::size_t v = 0; v < g.vertex_count; ++v)
      for (std::size_t s = 0; s < sum.size(); ++s) sum[s] += rel.coefficients[v] * rows[g.vertex_reactions[v]][s];
    for (std::size_t s = 0; s < sum.size(); ++s) CHECK(sum[s] == rows[rel.reaction][s]);
  }
}

}  // namespace

TEST_CASE("yeast coordinate graph") {
  const Network net = crn::testing::load("yeast.crn");
  const CoordinateGraph g = build_coordinate_graph(net);
  CHECK(g.vertex_labels == std::vector<std::string>{"R1", "R2", "R3", "R4", "R8"});
  const auto rel = relations_by_label(net, g);
  CHECK(rel.size() == 8);
  // basis order R1 R2 R3 R4 R8
  CHECK(rel.at("R5") == q({0, 0, 1, 0, 0}));
  CHECK(rel.at("R6") == q({-1, -1, 0, 0, 0}));
  CHECK(rel.at("R7") == q({0, 0, 1, 0, 0}));
  CHECK(rel.at("R9") == q({0, 0, -1, 0, 0}));
  CHECK(rel.at("R10") == q({-1, -1, 0, -1, 0}));
  CHECK(rel.at("R11") == q({-1, -1, 0, -1, -1}));
  CHECK(rel.at("R12") == q({0, 0, -1, 0, 0}));
  CHECK(rel.at("R13") == q({0, 0, 1, 0, 0}));
  check_relations_recompose(net, g);

  CHECK(connected_components(g) == std::vector<std::vector<std::size_t>>{{0, 1, 3, 4}, {2}});
  const auto d = find_independent_decomposition(net);
  REQUIRE(d);
  CHECK(d->parts == ReactionPartition{idx(net, {"R1", "R2", "R4", "R6", "R8", "R10", "R11"}),
                                      idx(net, {"R3", "R5", "R7", "R9", "R12", "R13"})});
  CHECK(d->part_ranks == std::vector<std::size_t>{4, 1});
}

TEST_CASE("sorribas is connected under either basis") {
  const Network net = crn::testing::load("sorribas.crn");
  CHECK(build_coordinate_graph(net).vertex_labels == std::vector<std::string>{"R1", "R2", "R3", "R4"});
  CHECK_FALSE(find_independent_decomposition(net));

  const BasisSelection basis = basis_of(net, {"R1", "R4", "R5", "R6"});
  const CoordinateGraph g = build_coordinate_graph(net, basis);
  const auto rel = relations_by_label(net, g);
  CHECK(rel.at("R2") == q({-1, -1, 0, -1}));
  // Recomputed from the reaction vectors: R3 = R4 - R5 + R6.
  CHECK(rel.at("R3") == q({0, 1, -1, 1}));
  check_relations_recompose(net, g);
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(connected_components(g).size() == 1);
  CHECK_FALSE(find_independent_decomposition(net, basis));
}

TEST_CASE("handel coordinate graph") {
  const Network net = crn::testing::load("handel.crn");
  const CoordinateGraph g = build_coordinate_graph(net);
  CHECK(g.vertex_labels == std::vector<std::string>{"R1", "R2", "R3", "R5", "R9", "R11"});
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  const auto rel = relations_by_label(net, g);
  CHECK(rel.at("R4") == q({-1, -1, -1, 0, 0, 0}));
  CHECK(rel.at("R6") == q({0, 0, 0, -1, 0, 0}));
  CHECK(rel.at("R10") == q({0, 0, 0, 0, -1, 0}));
  // X -> 2X and V -> V + X share the reaction vector +X.
  CHECK(rel.at("R12") == q({0, 0, 0, 0, 0, 1}));
  check_relations_recompose(net, g);

  const auto d = find_independent_decomposition(net);
  REQUIRE(d);
  CHECK(d->parts == ReactionPartition{idx(net, {"R1", "R2", "R3", "R4"}), idx(net, {"R5", "R6", "R7", "R8"}),
                                      idx(net, {"R9", "R10"}), idx(net, {"R11", "R12"})});
}

TEST_CASE("baccam finder is finer than the two-part decomposition") {
  const Network net = crn::testing::load("baccam.crn");
  const auto d = find_independent_decomposition(net);
  REQUIRE(d);
  CHECK(d->parts == ReactionPartition{{0}, {1}, {2, 3}});
  const ReactionPartition coarse{{0, 1}, {2, 3}};
  CHECK(verify_decomposition(net, coarse).independent);
  CHECK(refine_or_coarsen_check(d->parts, coarse) == PartitionRelation::refinement);

  const auto all = brute_force_decompositions(net, 4);
  CHECK(all.size() == 5);
  for (const Decomposition& b : all) {
    const PartitionRelation rel = refine_or_coarsen_check(b.parts, d->parts);
    CHECK((rel == PartitionRelation::coarsening || rel == PartitionRelation::equal));
  }
  CHECK(all.front().parts == ReactionPartition{{0, 1, 2, 3}});
}

TEST_CASE("two-chain example is independent and incidence independent") {
  const Network net = crn::testing::load("split-chain.crn");
  const IndependenceReport rep = verify_decomposition(net, {{0, 1}, {2, 3}});
  CHECK(rep.network_rank == 4);
  CHECK(rep.part_ranks == std::vector<std::size_t>{2, 2});
  CHECK(rep.independent);
  CHECK(rep.incidence_network_rank == 4);
  CHECK(rep.incidence_part_ranks == std::vector<std::size_t>{2, 2});
  CHECK(rep.incidence_independent);
}

TEST_CASE("opposite reaction vectors in different parts") {
  const Network net = crn::testing::load("crossed-pair.crn");
  const IndependenceReport rep = verify_decomposition(net, {{0, 1}, {2, 3}});
  CHECK(rep.network_rank == 3);
  CHECK(rep.part_ranks == std::vector<std::size_t>{2, 2});
  CHECK_FALSE(rep.independent);
  CHECK(verify_decomposition(net, {{0, 1, 2, 3}}).independent);
}

TEST_CASE("partition validation") {
  const Network net = crn::testing::load("baccam.crn");
  CHECK_THROWS_AS(verify_decomposition(net, {{0, 1}, {2}}), PartitionError);
  CHECK_THROWS_AS(verify_decomposition(net, {{0, 1}, {1, 2, 3}}), PartitionError);
  CHECK_THROWS_AS(verify_decomposition(net, {{0, 1, 2, 3}, {}}), PartitionError);
  CHECK_THROWS_AS(verify_decomposition(net, {{0, 1, 2, 7}}), PartitionError);
  CHECK_NOTHROW(verify_decomposition(net, {{3, 2}, {1, 0}}));
  CHECK(canonical_partition({{3, 2}, {1, 0}}) == ReactionPartition{{0, 1}, {2, 3}});
}

TEST_CASE("refinement and coarsening") {
  // 0 <-> A | A + B -> C | C -> 0, against 0 <-> A | {A + B -> C, C -> 0}
  const Network net = parse_network("0 <-> A\nA + B -> C\nC -> 0\n");
  const ReactionPartition fine{{0, 1}, {2}, {3}};
  const ReactionPartition coarse{{0, 1}, {2, 3}};
  CHECK(refine_or_coarsen_check(fine, coarse) == PartitionRelation::refinement);
  CHECK(refine_or_coarsen_check(coarse, fine) == PartitionRelation::coarsening);
  CHECK(refine_or_coarsen_check(fine, {{3}, {2}, {1, 0}}) == PartitionRelation::equal);
  CHECK(refine_or_coarsen_check({{0, 2}, {1, 3}}, coarse) == PartitionRelation::incomparable);
  CHECK_THROWS_AS(refine_or_coarsen_check(fine, {{0, 1}, {2}}), MismatchedReactionSetError);
  CHECK_THROWS_AS(refine_or_coarsen_check({{0, 1}, {1}}, fine), PartitionError);
  CHECK(verify_decomposition(net, fine).independent);
}

TEST_CASE("brute force limits") {
  NetworkBuilder b;
  for (int i = 0; i < 13; ++i) b.add_reaction(std::nullopt, {}, {{i + 1, "X"}});
  const Network big = std::move(b).build();
  CHECK_THROWS_AS(brute_force_decompositions(big, 2), TooLargeError);
  CHECK_THROWS_AS(brute_force_decompositions(crn::testing::load("baccam.crn"), 0), std::invalid_argument);
}

TEST_CASE("purine: the single reaction R42 splits off") {
  const Network net = crn::testing::load("purine.crn");
  const std::size_t r42 = *net.find_reaction("R42");
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    if (j != r42) rest.push_back(j);
  const IndependenceReport rep = verify_decomposition(net, {{r42}, rest});
  CHECK(rep.independent);
  CHECK(rep.part_ranks.front() == 1);
  const auto d = find_independent_decomposition(net);
  REQUIRE(d);
  CHECK(std::find(d->parts.begin(), d->parts.end(), std::vector<std::size_t>{r42}) != d->parts.end());
}
