#include "crn/network.hpp"

#include <set>
#include <stdexcept>

#include "crn/errors.hpp"

namespace crn {

Complex::Complex(Terms terms) : terms_(std::move(terms)) {
  for (const auto& [species, coefficient] : terms_)
    if (coefficient < 1) throw std::invalid_argument("complex coefficients must be positive");
}

std::int64_t Complex::coefficient(std::size_t species) const {
  auto it = terms_.find(species);
  return it == terms_.end() ? 0 : it->second;
}

std::string Network::reaction_label(std::size_t reaction) const {
  const Reaction& rx = reactions_.at(reaction);
  return rx.label ? *rx.label : "R" + std::to_string(reaction + 1);
}

std::optional<std::size_t> Network::find_reaction(std::string_view label) const {
  for (std::size_t j = 0; j < reactions_.size(); ++j)
    if (reaction_label(j) == label) return j;
  return std::nullopt;
}

std::optional<std::size_t> Network::find_species(std::string_view name) const {
  for (const Species& s : species_)
    if (s.name == name) return s.index;
  return std::nullopt;
}

RationalVector Network::reaction_vector(std::size_t reaction) const {
  const Reaction& rx = reactions_.at(reaction);
  RationalVector v(species_.size());
  for (const auto& [s, c] : complexes_[rx.product].terms()) v[s] += c;
  for (const auto& [s, c] : complexes_[rx.reactant].terms()) v[s] -= c;
  return v;
}

std::string Network::complex_string(std::size_t complex) const {
  const Complex& cx = complexes_.at(complex);
  if (cx.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : cx.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c);
    out += species_[s].name;
  }
  return out;
}

std::string Network::reaction_string(std::size_t reaction) const {
  const Reaction& rx = reactions_.at(reaction);
  return complex_string(rx.reactant) + " -> " + complex_string(rx.product);
}

std::size_t NetworkBuilder::add_species(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("species name must be nonempty");
  auto it = species_index_.find(name);
  if (it != species_index_.end()) return it->second;
  const std::size_t index = net_.species_.size();
  net_.species_.push_back(Species{std::string(name), index});
  species_index_.emplace(std::string(name), index);
  return index;
}

std::size_t NetworkBuilder::intern_complex(const std::vector<Term>& terms, std::size_t line) {
  Complex::Terms merged;
  for (const auto& [coefficient, name] : terms) {
    if (coefficient < 1) throw SyntaxError("stoichiometric coefficient must be positive", line);
    merged[add_species(name)] += coefficient;
  }
  Complex cx(std::move(merged));
  auto [it, inserted] = complex_index_.emplace(cx, net_.complexes_.size());
  if (inserted) net_.complexes_.push_back(std::move(cx));
  return it->second;
}

void NetworkBuilder::add_reaction(std::optional<std::string> label, const std::vector<Term>& reactant,
                                  const std::vector<Term>& product, std::size_t line) {
  if (label && label_index_.contains(*label))
    throw DuplicateLabelError("duplicate reaction label '" + *label + "'", line);

  const std::size_t from = intern_complex(reactant, line);
  const std::size_t to = intern_complex(product, line);
  if (from == to) throw SelfLoopError("reactant and product complexes are identical", line);
  if (pair_index_.contains({from, to}))
    throw DuplicateReactionError("reaction " + net_.complex_string(from) + " -> " +
                                     net_.complex_string(to) + " appears twice",
                                 line);

  const std::size_t index = net_.reactions_.size();
  pair_index_.emplace(std::pair{from, to}, index);
  if (label) label_index_.emplace(*label, index);
  net_.reactions_.push_back(Reaction{std::move(label), from, to});
}

Network NetworkBuilder::build() && {
  if (net_.reactions_.empty()) throw EmptyNetworkError("empty network: no reactions found");
  std::set<std::string, std::less<>> seen;
  for (std::size_t j = 0; j < net_.reactions_.size(); ++j) {
    std::string label = net_.reaction_label(j);
    if (!seen.insert(label).second)
      throw DuplicateLabelError("reaction label '" + label + "' is used twice", 0);
  }
  return std::move(net_);
}

RationalMatrix molecularity_matrix(const Network& net) {
  RationalMatrix y(net.species_count(), net.complex_count());
  for (std::size_t j = 0; j < net.complex_count(); ++j)
    for (const auto& [s, c] : net.complexes()[j].terms()) y(s, j) = c;
  return y;
}

RationalMatrix incidence_matrix(const Network& net) {
  RationalMatrix ia(net.complex_count(), net.reaction_count());
  for (std::size_t j = 0; j < net.reaction_count(); ++j) {
    const Reaction& rx = net.reactions()[j];
    ia(rx.reactant, j) = -1;
    ia(rx.product, j) = 1;
  }
  return ia;
}

RationalMatrix stoichiometric_matrix(const Network& net) {
  return molecularity_matrix(net) * incidence_matrix(net);
}

}  // namespace crn
