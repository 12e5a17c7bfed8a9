#include "cgt/maps.hpp"

#include <algorithm>
#include <cstdint>

#include "cgt/errors.hpp"

namespace cgt::maps {

namespace {
const Rational kUnset(std::int64_t(1) << 62);

bool same_space(const coarse::MetricSnapshot& a, const coarse::MetricSnapshot& b) {
  if (a.size() != b.size() || a.base() != b.base()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.label(i) != b.label(i)) return false;
  return true;
}
}  // namespace

PartialMap::PartialMap(coarse::MetricSnapshot domain, coarse::MetricSnapshot codomain,
                       std::vector<int> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != domain_.size())
    throw PreconditionError("map: assignment covers " + std::to_string(assignment_.size()) +
                            " points, domain has " + std::to_string(domain_.size()));
  for (std::size_t i = 0; i < assignment_.size(); ++i)
    if (assignment_[i] < 0 || assignment_[i] >= codomain_.size())
      throw PreconditionError("map: image index " + std::to_string(assignment_[i]) +
                              " at point " + std::to_string(i) + " is outside the codomain");
}

int PartialMap::apply(int i) const {
  if (i < 0 || i >= static_cast<int>(assignment_.size()))
    throw PreconditionError("map: point index " + std::to_string(i) + " out of range");
  return assignment_[i];
}

ExpansionProfile profile(const PartialMap& map) {
  const auto& dom = map.domain();
  const auto& cod = map.codomain();
  const int n = dom.size();

  std::vector<Rational> sigma_b, rho_b, tau_b;
  Rational max_dx(0), max_dy(0);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> drow = dom.distance_row(i);
    std::vector<Rational> crow = cod.distance_row(map.apply(i));
    for (int j = i; j < n; ++j) {
      const Rational dx = drow[j];
      const Rational dy = crow[static_cast<std::size_t>(map.apply(j))];
      max_dx = max(max_dx, dx);
      max_dy = max(max_dy, dy);
      const std::size_t up = static_cast<std::size_t>(dx.ceil());
      const std::size_t down = static_cast<std::size_t>(dx.floor());
      const std::size_t img_up = static_cast<std::size_t>(dy.ceil());
      if (sigma_b.size() <= up) sigma_b.resize(up + 1, Rational(0));
      sigma_b[up] = max(sigma_b[up], dy);
      if (rho_b.size() <= down) rho_b.resize(down + 1, kUnset);
      rho_b[down] = min(rho_b[down], dy);
      if (tau_b.size() <= img_up) tau_b.resize(img_up + 1, Rational(0));
      tau_b[img_up] = max(tau_b[img_up], dx);
    }
  }

  ExpansionProfile out;
  out.domain_diameter = max_dx;
  out.image_diameter = max_dy;
  out.domain_scale = dom.scale();
  out.codomain_scale = cod.scale();

  const std::size_t t_dom = static_cast<std::size_t>(max_dx.floor());
  const std::size_t t_img = static_cast<std::size_t>(max_dy.floor());
  sigma_b.resize(t_dom + 1, Rational(0));
  rho_b.resize(t_dom + 1, kUnset);
  tau_b.resize(t_img + 1, Rational(0));

  out.sigma.resize(t_dom + 1);
  Rational run(0);
  for (std::size_t t = 0; t <= t_dom; ++t) {
    run = max(run, sigma_b[t]);
    out.sigma[t] = run;
  }
  out.rho_minus.resize(t_dom + 1);
  run = kUnset;
  for (std::size_t t = t_dom + 1; t-- > 0;) {
    run = min(run, rho_b[t]);
    out.rho_minus[t] = run;
  }
  out.tau.resize(t_img + 1);
  run = Rational(0);
  for (std::size_t t = 0; t <= t_img; ++t) {
    run = max(run, tau_b[t]);
    out.tau[t] = run;
  }

  std::vector<int> image = map.assignment();
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  out.net_radius = coarse::is_net(cod, image);
  return out;
}

MapFlags classify(const ExpansionProfile& profile, long scale) {
  if (scale < 0) throw PreconditionError("classify: scale must be >= 0");
  if (scale > profile.domain_scale)
    throw PreconditionError("classify: scale " + std::to_string(scale) +
                            " exceeds the domain window scale " +
                            std::to_string(profile.domain_scale));
  MapFlags flags;
  flags.scale = scale;
  flags.uniformly_expansive = true;  // sigma is a finite witness on the window
  const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(scale),
                                                profile.sigma.size() - 1);
  flags.sigma_at_scale = profile.sigma[cap];
  flags.tau_defined_up_to = static_cast<long>(profile.tau.size()) - 1;
  flags.uniformly_proper = flags.tau_defined_up_to >= scale;
  flags.rough = flags.uniformly_expansive && flags.uniformly_proper;
  flags.net_radius = profile.net_radius;
  flags.net_image = Rational(2) * profile.net_radius <= Rational(scale);
  flags.coarse_equivalence = flags.rough && flags.net_image;
  return flags;
}

Rational closeness(const PartialMap& f, const PartialMap& g) {
  if (!same_space(f.domain(), g.domain()))
    throw PreconditionError("closeness: maps have different domains");
  if (!same_space(f.codomain(), g.codomain()))
    throw PreconditionError("closeness: maps have different codomains");
  Rational worst(0);
  for (int i = 0; i < f.domain().size(); ++i)
    worst = max(worst, f.codomain().distance(f.apply(i), g.apply(i)));
  return worst;
}

}  // namespace cgt::maps
