#include "crn/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "crn/errors.hpp"

namespace crn {

Kinetics::Kinetics(KineticsKind kind, std::vector<double> rates, std::vector<std::vector<double>> orders)
    : kind_(kind), rates_(std::move(rates)), orders_(std::move(orders)) {
  if (rates_.size() != orders_.size())
    throw DimensionError("rate vector and kinetic order matrix disagree on the reaction count");
  for (double k : rates_)
    if (!(k > 0) || !std::isfinite(k)) throw std::invalid_argument("rate constants must be positive and finite");
  for (const auto& row : orders_)
    if (row.size() != (orders_.empty() ? 0 : orders_.front().size()))
      throw DimensionError("kinetic order matrix is ragged");
}

Kinetics Kinetics::mass_action(const Network& net, std::vector<double> rates) {
  if (rates.size() != net.reaction_count())
    throw DimensionError("expected " + std::to_string(net.reaction_count()) + " rate constants, got " +
                         std::to_string(rates.size()));
  std::vector<std::vector<double>> orders(net.reaction_count(), std::vector<double>(net.species_count(), 0.0));
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    for (const auto& [s, c] : net.complexes()[net.reactions()[j].reactant].terms())
      orders[j][s] = static_cast<double>(c);
  return Kinetics(KineticsKind::mass_action, std::move(rates), std::move(orders));
}

Kinetics Kinetics::power_law(std::vector<double> rates, std::vector<std::vector<double>> kinetic_orders) {
  return Kinetics(KineticsKind::power_law, std::move(rates), std::move(kinetic_orders));
}

std::vector<double> reaction_rates(const Network& net, const Kinetics& kin, std::span<const double> x) {
  if (kin.rates().size() != net.reaction_count())
    throw DimensionError("kinetics has " + std::to_string(kin.rates().size()) + " reactions, network has " +
                         std::to_string(net.reaction_count()));
  if (x.size() != net.species_count())
    throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, network has " +
                         std::to_string(net.species_count()) + " species");
  for (const auto& row : kin.kinetic_orders())
    if (row.size() != net.species_count()) throw DimensionError("kinetic order row length mismatch");
  for (double xi : x)
    if (!(xi > 0) || !std::isfinite(xi)) throw NonPositivePointError("point must be strictly positive");

  std::vector<double> k(net.reaction_count());
  for (std::size_t j = 0; j < k.size(); ++j) {
    double value = kin.rates()[j];
    const auto& order = kin.kinetic_orders()[j];
    for (std::size_t s = 0; s < x.size(); ++s)
      if (order[s] != 0.0) value *= std::pow(x[s], order[s]);
    k[j] = value;
  }
  return k;
}

namespace {

std::vector<double> accumulate_rate(const Network& net, const std::vector<double>& k,
                                    std::span<const std::size_t> reactions) {
  std::vector<double> f(net.species_count(), 0.0);
  for (std::size_t j : reactions) {
    if (j >= net.reaction_count()) throw std::out_of_range("reaction index out of range");
    const Reaction& rx = net.reactions()[j];
    for (const auto& [s, c] : net.complexes()[rx.product].terms()) f[s] += k[j] * static_cast<double>(c);
    for (const auto& [s, c] : net.complexes()[rx.reactant].terms()) f[s] -= k[j] * static_cast<double>(c);
  }
  return f;
}

std::vector<std::size_t> every_reaction(const Network& net) {
  std::vector<std::size_t> all(net.reaction_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace

std::vector<double> species_formation_rate(const Network& net, const Kinetics& kin, std::span<const double> x) {
  return accumulate_rate(net, reaction_rates(net, kin, x), every_reaction(net));
}

std::vector<double> species_formation_rate(const Network& net, const Kinetics& kin, std::span<const double> x,
                                           std::span<const std::size_t> reactions) {
  return accumulate_rate(net, reaction_rates(net, kin, x), reactions);
}

bool is_steady_state(const Network& net, const Kinetics& kin, std::span<const double> x, double tol) {
  const std::vector<std::size_t> all = every_reaction(net);
  return is_steady_state(net, kin, x, all, tol);
}

bool is_steady_state(const Network& net, const Kinetics& kin, std::span<const double> x,
                     std::span<const std::size_t> reactions, double tol) {
  if (std::isnan(tol) || tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
  const std::vector<double> k = reaction_rates(net, kin, x);
  const std::vector<double> f = accumulate_rate(net, k, reactions);
  std::vector<double> flux;
  for (std::size_t j : reactions) flux.push_back(k[j]);
  if (std::isinf(tol)) return true;
  return max_abs(f) <= tol * std::max(1.0, max_abs(flux));
}

}  // namespace crn
