#include "meandim/widim/formulas.hpp"

#include <cmath>

namespace meandim::widim {

long long riemann_roch_dim(long long N, long long deg, long long n) {
  if (N < 1 || deg < 1 || n < 0) throw InvalidArgument("riemann_roch_dim needs N, deg >= 1, n >= 0");
  return 2 * n * n * (N + 1) * deg;
}

Theorem1Bounds theorem1_bounds(int N, double e_ell, double e_sup) {
  if (N < 1) throw InvalidArgument("N must be >= 1");
  if (!(0.0 <= e_ell && e_ell <= e_sup && e_sup <= 1.0)) {
    throw InvalidArgument("need 0 <= e_ell <= e_sup <= 1");
  }
  Theorem1Bounds b;
  b.lower = 2.0 * e_ell * (N + 1);
  b.upper = 4.0 * e_sup * N;
  b.ordered = b.lower <= b.upper;
  return b;
}

double meandim_lattice_to_plane(double value, const Lattice& lattice) {
  const double area = lattice.area();
  if (!(area > 0.0) || !std::isfinite(area)) throw InvalidArgument("lattice area must be > 0");
  return value / area;
}

}  // namespace meandim::widim
