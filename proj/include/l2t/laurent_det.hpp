#pragma once

#include "l2t/laurent.hpp"

namespace l2t {

/// Determinant of a square matrix of Laurent polynomials. Small matrices
/// (n <= 4) are expanded exactly by cofactors; larger ones go through
/// evaluation on roots-of-unity grids sized by per-variable degree bounds,
/// complex LU at each node, and an inverse DFT. The result is verified at a
/// random point on the torus; on mismatch the grid is enlarged once before
/// giving up.
MultiLaurent laurent_det(const LaurentMatrix& m);

/// Same computation with the grid evaluations forced onto a single thread.
MultiLaurent laurent_det_serial(const LaurentMatrix& m);

/// Evaluates det(m) at one point of (C*)^nvars by plain LU.
Cx laurent_det_at(const LaurentMatrix& m, const std::vector<Cx>& point);

}  // namespace l2t
