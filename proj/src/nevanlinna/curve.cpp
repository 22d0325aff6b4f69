#include "meandim/nevanlinna/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace meandim::nevanlinna {

double Curve::energy_density(Complex z) const {
  double out = 0.0;
  energy_density(std::span<const Complex>(&z, 1), std::span<double>(&out, 1));
  return out;
}

double Curve::spherical_derivative(Complex z) const {
  return std::sqrt(std::max(0.0, energy_density(z)));
}

numerics::FieldFunction Curve::density_field() const {
  return [this](std::span<const Complex> z, std::span<double> out) { energy_density(z, out); };
}

void ConstantCurve::energy_density(std::span<const Complex> z, std::span<double> out) const {
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(z.size()), 0.0);
}

ExtremalCurve::ExtremalCurve(std::shared_ptr<const ExtremalBrodyCurve> curve)
    : curve_(std::move(curve)) {
  if (!curve_) throw InvalidArgument("extremal curve handle is empty");
}

void ExtremalCurve::energy_density(std::span<const Complex> z, std::span<double> out) const {
  curve_->energy_density(z, out);
}

RescaledCurve::RescaledCurve(CurveHandle base, double scale)
    : base_(std::move(base)), scale_(scale) {
  if (!base_) throw InvalidArgument("rescaled curve needs a base curve");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("scale must be > 0");
}

void RescaledCurve::energy_density(std::span<const Complex> z, std::span<double> out) const {
  thread_local std::vector<Complex> scaled;
  scaled.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) scaled[i] = scale_ * z[i];
  base_->energy_density(scaled, out);
  const double s2 = scale_ * scale_;
  for (std::size_t i = 0; i < z.size(); ++i) out[i] *= s2;
}

std::optional<Lattice> RescaledCurve::period_lattice() const {
  const std::optional<Lattice> base = base_->period_lattice();
  if (!base) return std::nullopt;
  return base->scaled(1.0 / scale_);
}

std::string RescaledCurve::name() const {
  std::ostringstream os;
  os << base_->name() << "(" << scale_ << " z)";
  return os.str();
}

CurveHandle make_constant_curve() { return std::make_shared<ConstantCurve>(); }

CurveHandle make_extremal_curve(std::shared_ptr<const ExtremalBrodyCurve> curve) {
  return std::make_shared<ExtremalCurve>(std::move(curve));
}

CurveHandle make_rescaled_curve(CurveHandle base, double scale) {
  return std::make_shared<RescaledCurve>(std::move(base), scale);
}

}  // namespace meandim::nevanlinna
