#include <random>

#include "doctest.h"

#include "crn/errors.hpp"
#include "crn/network.hpp"
#include "crn/parser.hpp"
#include "support.hpp"

using namespace crn;

TEST_CASE("labels, coefficients and the zero complex") {
  const Network net = parse_network("R1: 0 -> X1\nR2: 2X1 + X2 -> X3 ; comment\n# full-line comment\n\nX3 -> 0\n");
  REQUIRE(net.reaction_count() == 3);
  CHECK(net.species_count() == 3);
  CHECK(net.complex_count() == 4);
  CHECK(net.reaction_label(0) == "R1");
  CHECK(net.reaction_label(2) == "R3");
  CHECK(net.reactions()[2].label == std::nullopt);
  CHECK(net.complexes()[net.reactions()[0].reactant].is_zero());
  CHECK(net.complexes()[net.reactions()[1].reactant].coefficient(0) == 2);
  CHECK(net.reaction_string(1) == "2X1 + X2 -> X3");
}

TEST_CASE("coefficient written against the species name") {
  const Network a = parse_network("R3: 2X5 + X1 -> X5 + X1\n");
  const Network b = parse_network("R3: 2 X5 + X1 -> X5 + X1\n");
  CHECK(a.reaction_vector(0) == b.reaction_vector(0));
  const auto x5 = *a.find_species("X5");
  CHECK(a.reaction_vector(0)[x5] == -1);
}

TEST_CASE("repeated species in one complex are merged") {
  const Network net = parse_network("X + X -> Y\n");
  CHECK(net.complexes()[net.reactions()[0].reactant].coefficient(0) == 2);
}

TEST_CASE("reversible reactions expand into two") {
  const Network net = crn::testing::load("reversible-pair.crn");
  REQUIRE(net.reaction_count() == 2);
  CHECK(net.reaction_label(0) == "Rf");
  CHECK(net.reaction_label(1) == "Rb");
  CHECK(net.reactions()[0].reactant == net.reactions()[1].product);

  const Network plain = parse_network("A <-> B\nB -> C\n");
  CHECK(plain.reaction_count() == 3);
  CHECK(plain.reaction_label(1) == "R2");
}

TEST_CASE("parse errors carry the line number") {
  CHECK_THROWS_AS(parse_network("R1: X1 -> X1\n"), SelfLoopError);
  CHECK_THROWS_AS(parse_network("X -> Y\nX -> Y\n"), DuplicateReactionError);
  CHECK_THROWS_AS(parse_network("A: X -> Y\nA: Y -> Z\n"), DuplicateLabelError);
  CHECK_THROWS_AS(parse_network("R2: X -> Y\nY -> Z\n"), DuplicateLabelError);
  CHECK_THROWS_AS(parse_network(""), EmptyNetworkError);
  CHECK_THROWS_AS(parse_network("# nothing\n\n"), EmptyNetworkError);
  CHECK_THROWS_AS(parse_network("X -> \n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("X => Y\n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("0X -> Y\n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("X + -> Y\n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("X -> Y -> Z\n"), SyntaxError);
  CHECK_THROWS_AS(parse_network("99999999999999999999X -> Y\n"), SyntaxError);

  try {
    parse_network("A -> B\n\nC -> C\n");
    FAIL("expected a self-loop error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("non-ASCII text is only allowed in comments") {
  CHECK_NOTHROW(parse_network("A -> B  # \xc2\xb5M\n"));
  CHECK_THROWS_AS(parse_network("\xc2\xb5 -> B\n"), SyntaxError);
}

TEST_CASE("unreadable file") {
  CHECK_THROWS_AS(parse_network_file(crn::testing::data_path("does-not-exist.crn")), std::runtime_error);
}

TEST_CASE("dsl round trip on the corpus") {
  for (const std::string& file : crn::testing::corpus()) {
    CAPTURE(file);
    const Network net = crn::testing::load(file);
    const Network again = parse_network(to_dsl(net));
    CHECK(again == net);
    CHECK(to_dsl(again) == to_dsl(net));
  }
}

TEST_CASE("dsl round trip on random networks") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Network net = crn::testing::random_network(rng);
    const Network again = parse_network(to_dsl(net));
    // Species order (and unused species) are not part of the text form.
    REQUIRE(again.reaction_count() == net.reaction_count());
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
      const auto v = net.reaction_vector(j);
      const auto w = again.reaction_vector(j);
      for (std::size_t s = 0; s < net.species_count(); ++s) {
        const auto t = again.find_species(net.species()[s].name);
        CHECK((t ? w[*t] : Rational(0)) == v[s]);
      }
      CHECK(again.reaction_label(j) == net.reaction_label(j));
    }
  }
}

TEST_CASE("matrices of a small network") {
  const Network net = crn::testing::load("two-step.crn");
  // species X1, X2, X3; complexes 2X1, X2, X3
  CHECK(molecularity_matrix(net) == RationalMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(incidence_matrix(net) == RationalMatrix{{-1, 0}, {1, -1}, {0, 1}});
  CHECK(stoichiometric_matrix(net) == RationalMatrix{{-2, 0}, {1, -1}, {0, 1}});
}

TEST_CASE("stoichiometric matrix columns are reaction vectors") {
  for (const std::string& file : crn::testing::corpus()) {
    CAPTURE(file);
    const Network net = crn::testing::load(file);
    const RationalMatrix n = stoichiometric_matrix(net);
    const auto ints = crn::testing::integer_reaction_rows(net);
    const RationalMatrix ia = incidence_matrix(net);
    for (std::size_t j = 0; j < net.reaction_count(); ++j) {
      Rational column_sum = 0;
      for (std::size_t c = 0; c < net.complex_count(); ++c) column_sum += ia(c, j);
      CHECK(column_sum == 0);
      for (std::size_t s = 0; s < net.species_count(); ++s) CHECK(n(s, j) == ints[j][s]);
    }
  }
}

TEST_CASE("complex rejects nonpositive coefficients") {
  CHECK_THROWS_AS(Complex(Complex::Terms{{0, 0}}), std::invalid_argument);
}
