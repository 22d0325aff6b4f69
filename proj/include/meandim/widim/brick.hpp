#pragma once

#include "meandim/widim/cover.hpp"

namespace meandim::widim {

/// Cover of [0, N]^d by side-s cubes with multiplicity d + 1, for d <= 3.
/// Cubes [a, a + s]^d are anchored on the residue class
/// sum_k s^k a_k = 0 (mod s^d - 1) (a = 0 (mod s) when d = 1) and clipped to
/// the universe; coverage and multiplicity are then checked exactly. Throws
/// InvalidArgument for s < 2, N < s, or d > 3: with s = 2 and d >= 4 no
/// cover of multiplicity d + 1 by such boxes exists.
CoverSolution brick_cover(int d, int N, int s);

/// Product of the 1-d interval cover [ks, (k+1)s]; multiplicity 2^d when
/// N > s. Any d, any s >= 1.
CoverSolution product_cover(int d, int N, int s);

}  // namespace meandim::widim
