#pragma once

// Built-in witnesses: curves, strips and pairs with known invariants, used by
// the default verification suite.

#include <memory>
#include <string>
#include <vector>

#include "bdcurves/pair.hpp"

namespace bdcurves {

struct FrenetWitness {
  std::string name;
  std::shared_ptr<const UnitSpeedCurve> curve;
};

/// Circle, spacelike hyperbola, spacelike helix and timelike helix.
std::vector<FrenetWitness> frenet_witnesses();

/// The helix u = a t, v = b t on the Lorentz cylinder (u, cos v, sin v):
/// spacelike when b^2 > a^2, timelike when a^2 > b^2.
std::shared_ptr<const StripCurve> cylinder_helix(double a, double b, bool flip = false,
                                                 StripOptions options = {});

/// The circle u = 0 on the Lorentz cylinder.
std::shared_ptr<const StripCurve> cylinder_circle(bool flip = false, StripOptions options = {});

struct PairWitness {
  std::string name;
  std::string description;
  std::shared_ptr<const StripCurve> base;
  double lambda = 0.0;
  int expected_type = 0;
};

/// The pair witnesses of the default suite, in a fixed order.
std::vector<PairWitness> pair_witnesses(StripOptions options = {});

/// The same witnesses with the base normal reversed and lambda negated.
std::vector<PairWitness> flipped_witnesses(const std::vector<PairWitness>& ws,
                                           StripOptions options = {});

}  // namespace bdcurves
