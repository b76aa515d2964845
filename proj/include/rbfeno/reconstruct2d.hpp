#ifndef RBFENO_RECONSTRUCT2D_HPP_
#define RBFENO_RECONSTRUCT2D_HPP_

#include "rbfeno/mesh.hpp"
#include "rbfeno/reconstruct1d.hpp"

namespace rbfeno {

/// The five averages around (i, j): west = (i-1, j), south = (i, j-1).
struct CrossStencil {
  double west = 0.0;
  double center = 0.0;
  double east = 0.0;
  double south = 0.0;
  double north = 0.0;
};

CrossStencil cross_at(const CellField2D& field, int i, int j);

enum class Face { east, west, north, south };

/// Three-cell subset: the center plus one x- and one y-neighbor.
struct StencilSubset2D {
  bool use_west = true;
  bool use_south = true;
};

StencilSubset2D select_stencil_2d(const CrossStencil& cross);

/// Linear fit through the three subset averages, evaluated at the face
/// midpoint.
double poly_face_value_2d(const CrossStencil& cross, StencilSubset2D subset,
                          Face face);

// A nonzero c3 leaves an O(h) term multiplying eta, which is singular where
// v vanishes at the face; the default avoids it.
struct Perturbation2D {
  double c1 = 0.25;
  double c2 = 0.25;
  double c3 = 0.0;

  double sum() const { return c1 + c2 + c3; }
  void validate() const;
};

/// Shape parameter for the east face with the subset {(i,j), (i+1,j), ·}.
/// Returns eta = eps^2 h^2; eps_m regularizes the h-free denominator so the
/// result does not depend on h.
ShapeParameterEta compute_eta_2d(const CrossStencil& cross,
                                 const Perturbation2D& pert, double eps_m);

struct FaceOptions {
  Perturbation2D perturbation;
  double eps_m_scale = 1e-6;
  bool monotone_switch = true;
};

/// 1D k = 2 switch along either axis of the cross.
bool monotone_switch_2d(const CrossStencil& cross);

/// Perturbed face value; `eta_out`, when given, receives the eta used.
double rbf_face_value_2d(const CrossStencil& cross, StencilSubset2D subset,
                         Face face, const FaceOptions& opts,
                         ShapeParameterEta* eta_out = nullptr);

/// c0 + c1 x + c2 y + c3 x^2 + c4 y^2 through the five averages taken as
/// cell-center values, evaluated at the face midpoint. Needs dx == dy.
double five_cell_fv_value(const CrossStencil& cross, Face face, double dx,
                          double dy);

struct CellFaces2D {
  double east = 0.0;
  double west = 0.0;
  double north = 0.0;
  double south = 0.0;
  bool switched = false;
};

CellFaces2D reconstruct_cell_2d(const CrossStencil& cross, Method method,
                                const FaceOptions& opts, double dx, double dy);

}  // namespace rbfeno

#endif  // RBFENO_RECONSTRUCT2D_HPP_
