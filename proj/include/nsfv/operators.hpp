#pragma once

#include "nsfv/fields.hpp"

namespace nsfv {

// Matrix-free discrete differential operators on the periodic grid.
// All of them are linear, annihilate constants and commute with grid shifts.

/// Cell gradient (1/h) Sum_{sigma in dK} avg(r) n, i.e. the central difference
/// (r_{K+e_i} - r_{K-e_i}) / 2h.
[[nodiscard]] CellVectorField grad_h(const CellField& r);

/// Cell divergence (1/h) Sum_{sigma in dK} avg(v).n.
[[nodiscard]] CellField div_h(const CellVectorField& v);

/// Full velocity gradient: component (i,j) is the j-th derivative of v_i.
[[nodiscard]] CellTensorField grad_h(const CellVectorField& v);

/// Row-wise divergence of a tensor field: (div M)_i = Sum_j d_j M_ij.
[[nodiscard]] CellVectorField div_h(const CellTensorField& m);

/// Symmetric gradient D_h(v) = (grad v + grad^T v) / 2.
[[nodiscard]] CellTensorField sym_grad(const CellVectorField& v);

/// Per-cell trace of a tensor field.
[[nodiscard]] CellField trace(const CellTensorField& m);

/// Per-cell Frobenius product A:B.
[[nodiscard]] CellField double_dot(const CellTensorField& a, const CellTensorField& b);

/// Edge differences d_E^{(i)} r = (r_L - r_K)/h on every face, all directions.
[[nodiscard]] FaceField grad_edge(const CellField& r);

/// Dual difference d_T q_i = (q_{sigma'} - q_sigma)/h over the direction-`dir` face pair of each cell.
[[nodiscard]] CellField dual_diff(const FaceField& q, int dir);

/// div_T q = Sum_i d_T q_i.
[[nodiscard]] CellField div_dual(const FaceField& q);

/// Five/seven point Laplacian (1/h) Sum_{sigma in dK} jump(r)/h.
[[nodiscard]] CellField laplace_h(const CellField& r);

/// Sum over faces of q_i * p_i (both dual fields), weighted by |D_sigma|: the W_h inner product.
[[nodiscard]] double dual_inner(const FaceField& a, const FaceField& b);

}  // namespace nsfv
