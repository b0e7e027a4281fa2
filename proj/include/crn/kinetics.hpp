#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "crn/network.hpp"

namespace crn {

enum class KineticsKind { mass_action, power_law };

// Power-law kinetics K_i(x) = k_i * prod_j x_j^F(i,j). Mass action is the
// special case where row i of F is the reactant complex of reaction i.
class Kinetics {
 public:
  // Throws DimensionError on a rate count mismatch, std::invalid_argument on
  // a nonpositive or non-finite rate.
  static Kinetics mass_action(const Network& net, std::vector<double> rates);
  static Kinetics power_law(std::vector<double> rates, std::vector<std::vector<double>> kinetic_orders);

  KineticsKind kind() const { return kind_; }
  const std::vector<double>& rates() const { return rates_; }
  // r x m, row-major by reaction.
  const std::vector<std::vector<double>>& kinetic_orders() const { return orders_; }

 private:
  Kinetics(KineticsKind kind, std::vector<double> rates, std::vector<std::vector<double>> orders);

  KineticsKind kind_;
  std::vector<double> rates_;
  std::vector<std::vector<double>> orders_;
};

// K(x), one rate per reaction. Throws DimensionError, NonPositivePointError.
std::vector<double> reaction_rates(const Network& net, const Kinetics& kin, std::span<const double> x);

// Species formation rate f(x) = N K(x).
std::vector<double> species_formation_rate(const Network& net, const Kinetics& kin,
                                           std::span<const double> x);

// f restricted to a subset of reactions, still over all species of net:
// sum over j in reactions of K_j(x) times reaction vector j.
std::vector<double> species_formation_rate(const Network& net, const Kinetics& kin,
                                           std::span<const double> x,
                                           std::span<const std::size_t> reactions);

constexpr double kDefaultSteadyStateTolerance = 1e-9;

// ||f(x)||_inf <= tol * max(1, ||K(x)||_inf).
bool is_steady_state(const Network& net, const Kinetics& kin, std::span<const double> x,
                     double tol = kDefaultSteadyStateTolerance);
bool is_steady_state(const Network& net, const Kinetics& kin, std::span<const double> x,
                     std::span<const std::size_t> reactions, double tol = kDefaultSteadyStateTolerance);

}  // namespace crn
