#pragma once

#include <utility>

#include "meandim/core.hpp"

namespace meandim {

/// Rank-2 lattice Z a + Z b in the plane, with an oriented basis
/// (Im(conj(a) b) > 0).
class Lattice {
 public:
  /// Throws InvalidArgument for degenerate or negatively oriented generators.
  Lattice(Complex a, Complex b);

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }

  /// Fundamental-domain area |Im(conj(a) b)|.
  double area() const noexcept { return area_; }

  /// Coordinates (s, t) with z = s a + t b.
  std::pair<double, double> coordinates(Complex z) const noexcept;

  /// Representative z' of z + Lattice with z' = s a + t b, s, t in [0, 1).
  Complex reduce(Complex z) const noexcept;

  /// A lattice point closest to z (Euclidean).
  Complex nearest_point(Complex z) const noexcept;

  /// Length of a shortest non-zero lattice vector.
  double shortest_vector() const noexcept { return shortest_; }

  /// Lattice scaled by c > 0: generators c a, c b.
  Lattice scaled(double c) const;

 private:
  Complex a_;
  Complex b_;
  double area_;
  // Lagrange-Gauss reduced basis, used for nearest-point queries.
  Complex ra_;
  Complex rb_;
  double shortest_;
};

double lattice_area(const Lattice& lattice) noexcept;
Complex reduce_to_fundamental(const Lattice& lattice, Complex z) noexcept;

}  // namespace meandim
