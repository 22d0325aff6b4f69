#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "meandim/core.hpp"
#include "meandim/elliptic/brody_curve.hpp"
#include "meandim/elliptic/lattice.hpp"
#include "meandim/numerics/quadrature.hpp"

namespace meandim::nevanlinna {

/// A holomorphic curve seen only through its energy density |df|^2.
class Curve {
 public:
  virtual ~Curve() = default;

  /// |df|^2 at each point; never negative.
  virtual void energy_density(std::span<const Complex> z, std::span<double> out) const = 0;

  /// Period lattice, for doubly periodic curves.
  virtual std::optional<Lattice> period_lattice() const { return std::nullopt; }

  virtual std::string name() const = 0;

  double energy_density(Complex z) const;
  double spherical_derivative(Complex z) const;

  /// The density as a quadrature integrand.
  numerics::FieldFunction density_field() const;
};

using CurveHandle = std::shared_ptr<const Curve>;

class ConstantCurve final : public Curve {
 public:
  void energy_density(std::span<const Complex> z, std::span<double> out) const override;
  std::string name() const override { return "constant"; }
};

class ExtremalCurve final : public Curve {
 public:
  explicit ExtremalCurve(std::shared_ptr<const ExtremalBrodyCurve> curve);

  void energy_density(std::span<const Complex> z, std::span<double> out) const override;
  std::optional<Lattice> period_lattice() const override { return curve_->lattice(); }
  std::string name() const override { return "extremal"; }

  const ExtremalBrodyCurve& curve() const noexcept { return *curve_; }

 private:
  std::shared_ptr<const ExtremalBrodyCurve> curve_;
};

/// g(z) = f(c z): |dg|^2(z) = c^2 |df|^2(c z); periods scale by 1/c.
class RescaledCurve final : public Curve {
 public:
  RescaledCurve(CurveHandle base, double scale);

  void energy_density(std::span<const Complex> z, std::span<double> out) const override;
  std::optional<Lattice> period_lattice() const override;
  std::string name() const override;

  double scale() const noexcept { return scale_; }

 private:
  CurveHandle base_;
  double scale_;
};

CurveHandle make_constant_curve();
CurveHandle make_extremal_curve(std::shared_ptr<const ExtremalBrodyCurve> curve);
CurveHandle make_rescaled_curve(CurveHandle base, double scale);

}  // namespace meandim::nevanlinna
