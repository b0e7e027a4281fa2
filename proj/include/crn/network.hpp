#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crn/linalg.hpp"

namespace crn {

struct Species {
  std::string name;
  std::size_t index = 0;

  friend bool operator==(const Species&, const Species&) = default;
};

// Nonnegative integer combination of species. Absent species have
// coefficient 0; the empty combination is the zero complex.
class Complex {
 public:
  using Terms = std::map<std::size_t, std::int64_t>;

  Complex() = default;
  explicit Complex(Terms terms);

  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(std::size_t species) const;
  bool is_zero() const { return terms_.empty(); }

  friend auto operator<=>(const Complex&, const Complex&) = default;

 private:
  Terms terms_;
};

struct Reaction {
  std::optional<std::string> label;
  std::size_t reactant = 0;
  std::size_t product = 0;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

// Immutable reaction network. Species and complexes are kept in
// first-appearance order and reactions in insertion order; every index used
// downstream refers to these orders.
class Network {
 public:
  const std::vector<Species>& species() const { return species_; }
  const std::vector<Complex>& complexes() const { return complexes_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }

  std::size_t species_count() const { return species_.size(); }
  std::size_t complex_count() const { return complexes_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  // The explicit label, or "R<j+1>" for an unlabeled reaction.
  std::string reaction_label(std::size_t reaction) const;
  std::optional<std::size_t> find_reaction(std::string_view label) const;
  std::optional<std::size_t> find_species(std::string_view name) const;

  // Product complex minus reactant complex, over the species order.
  RationalVector reaction_vector(std::size_t reaction) const;

  std::string complex_string(std::size_t complex) const;
  std::string reaction_string(std::size_t reaction) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  friend class NetworkBuilder;
  friend Network subnetwork(const Network& net, const std::vector<std::size_t>& reactions);

  std::vector<Species> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
};

// Assembles a Network while enforcing its invariants. `line` arguments are
// only used to annotate errors.
class NetworkBuilder {
 public:
  using Term = std::pair<std::int64_t, std::string>;

  std::size_t add_species(std::string_view name);

  // Throws SelfLoopError, DuplicateReactionError or DuplicateLabelError.
  void add_reaction(std::optional<std::string> label, const std::vector<Term>& reactant,
                    const std::vector<Term>& product, std::size_t line = 0);

  // Throws EmptyNetworkError if no reaction was added and
  // DuplicateLabelError if a generated label collides with an explicit one.
  Network build() &&;

 private:
  std::size_t intern_complex(const std::vector<Term>& terms, std::size_t line);

  Network net_;
  std::map<std::string, std::size_t, std::less<>> species_index_;
  std::map<Complex, std::size_t> complex_index_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
  std::map<std::string, std::size_t, std::less<>> label_index_;
};

// m x n; entry (i, j) is the coefficient of species i in complex j.
RationalMatrix molecularity_matrix(const Network& net);
// n x r; -1 at the reactant complex, +1 at the product complex.
RationalMatrix incidence_matrix(const Network& net);
// m x r; Y * I_a, whose columns are the reaction vectors.
RationalMatrix stoichiometric_matrix(const Network& net);

}  // namespace crn
