#pragma once

#include <string>
#include <vector>

#include "cgt/rational.hpp"
#include "cgt/snapshot.hpp"

namespace cgt::maps {

// Point assignment between two finite metric snapshots, total on its domain.
class PartialMap {
 public:
  PartialMap(coarse::MetricSnapshot domain, coarse::MetricSnapshot codomain,
             std::vector<int> assignment);

  const coarse::MetricSnapshot& domain() const { return domain_; }
  const coarse::MetricSnapshot& codomain() const { return codomain_; }
  int apply(int i) const;
  const std::vector<int>& assignment() const { return assignment_; }

 private:
  coarse::MetricSnapshot domain_;
  coarse::MetricSnapshot codomain_;
  std::vector<int> assignment_;
};

// Measured expansion data for a map at every integer threshold that the
// domain window can certify.
//   sigma[t]     = max d(f x, f y) over pairs with d(x, y) <= t
//   rho_minus[t] = min d(f x, f y) over pairs with d(x, y) >= t
//   tau[t]       = max d(x, y) over pairs with d(f x, f y) <= t
// sigma and rho_minus run for t = 0..floor(domain diameter); tau runs for
// t = 0..floor(image diameter).
struct ExpansionProfile {
  std::vector<Rational> sigma;
  std::vector<Rational> rho_minus;
  std::vector<Rational> tau;
  Rational net_radius;
  Rational domain_diameter;
  Rational image_diameter;
  long domain_scale = 0;
  long codomain_scale = 0;
};

ExpansionProfile profile(const PartialMap& map);

// Finite-scale verdicts for a profile. Expansiveness always holds on finite
// data (sigma is a finite witness); properness asks that tau be defined up to
// the tested scale, i.e. the image diameter reaches it.
struct MapFlags {
  long scale = 0;
  bool uniformly_expansive = false;
  bool uniformly_proper = false;
  bool rough = false;
  bool net_image = false;
  bool coarse_equivalence = false;
  Rational sigma_at_scale;
  long tau_defined_up_to = 0;
  Rational net_radius;
};

MapFlags classify(const ExpansionProfile& profile, long scale);

// Max displacement between two maps sharing domain and codomain.
Rational closeness(const PartialMap& f, const PartialMap& g);

}  // namespace cgt::maps
