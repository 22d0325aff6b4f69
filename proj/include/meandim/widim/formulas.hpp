#pragma once

#include "meandim/elliptic/lattice.hpp"

namespace meandim::widim {

/// dim V_n = 2 n^2 (N + 1) deg. Needs N >= 1, deg >= 1, n >= 0.
long long riemann_roch_dim(long long N, long long deg, long long n);

struct Theorem1Bounds {
  double lower = 0.0;  // 2 e_ell (N + 1)
  double upper = 0.0;  // 4 e_sup N
  bool ordered = false;
};

/// Mean-dimension bounds for Brody curves in CP^N. Needs N >= 1 and
/// 0 <= e_ell <= e_sup <= 1.
Theorem1Bounds theorem1_bounds(int N, double e_ell, double e_sup);

/// dim(X : C) from dim(X : Lambda): value / |C / Lambda|.
double meandim_lattice_to_plane(double value, const Lattice& lattice);

}  // namespace meandim::widim
