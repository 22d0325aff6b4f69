#include "meandim/nevanlinna/energy.hpp"

#include <algorithm>
#include <cmath>

namespace meandim::nevanlinna {

double energy_integral(const Curve& curve, const Region& region,
                       const numerics::QuadratureConfig& cfg) {
  const numerics::FieldFunction g = curve.density_field();
  if (const auto* disk = std::get_if<Disk>(&region)) {
    return numerics::integrate_disk(g, disk->radius, cfg);
  }
  return numerics::integrate_parallelogram(g, std::get<Parallelogram>(region).lattice, cfg);
}

double mean_energy_periodic(const Curve& curve, const numerics::QuadratureConfig& cfg) {
  const std::optional<Lattice> lattice = curve.period_lattice();
  if (!lattice) throw InvalidArgument(curve.name() + " curve has no period lattice");
  return energy_integral(curve, Parallelogram{*lattice}, cfg) / lattice->area();
}

BrodyCheck brody_check(const Curve& curve, const Rect& domain,
                       const numerics::SupSearchConfig& cfg) {
  const numerics::FieldFunction df = [&curve](std::span<const Complex> z, std::span<double> out) {
    curve.energy_density(z, out);
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = std::sqrt(std::max(0.0, out[i]));
  };
  const numerics::SupResult found = numerics::sup_search(df, domain, cfg);
  return {found.value <= 1.0 + kBrodyTolerance, found.value, found.argmax};
}

Rect fundamental_box(const Lattice& lattice) {
  const Complex corners[] = {0.0, lattice.a(), lattice.b(), lattice.a() + lattice.b()};
  Rect box{corners[0].real(), corners[0].real(), corners[0].imag(), corners[0].imag()};
  for (const Complex& c : corners) {
    box.x_min = std::min(box.x_min, c.real());
    box.x_max = std::max(box.x_max, c.real());
    box.y_min = std::min(box.y_min, c.imag());
    box.y_max = std::max(box.y_max, c.imag());
  }
  return box;
}

}  // namespace meandim::nevanlinna
