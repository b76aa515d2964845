#include "rbfeno/reconstruct2d.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace rbfeno {

CrossStencil cross_at(const CellField2D& field, int i, int j) {
  return {field(i - 1, j), field(i, j), field(i + 1, j), field(i, j - 1),
          field(i, j + 1)};
}

StencilSubset2D select_stencil_2d(const CrossStencil& c) {
  return {std::abs(c.center - c.west) <= std::abs(c.east - c.center),
          std::abs(c.center - c.south) <= std::abs(c.north - c.center)};
}

void Perturbation2D::validate() const {
  if (!std::isfinite(sum()) || sum() == 0.0) {
    throw std::invalid_argument("perturbation2d: c1 + c2 + c3 must be nonzero");
  }
}

namespace {

// The cross seen from a face: `front` lies across the face, `back` opposite,
// `side_lo`/`side_hi` along the face. `adjacent` is true when the subset's
// neighbor along the normal is `front`; `side` is the chosen tangential one.
struct FaceFrame {
  double back;
  double center;
  double front;
  double side_lo;
  double side_hi;
  bool adjacent;
  double side;
};

FaceFrame frame_for(const CrossStencil& c, StencilSubset2D s, Face face) {
  switch (face) {
    case Face::east:
      return {c.west, c.center, c.east, c.south, c.north, !s.use_west,
              s.use_south ? c.south : c.north};
    case Face::west:
      return {c.east, c.center, c.west, c.south, c.north, s.use_west,
              s.use_south ? c.south : c.north};
    case Face::north:
      return {c.south, c.center, c.north, c.west, c.east, !s.use_south,
              s.use_west ? c.west : c.east};
    case Face::south:
      return {c.north, c.center, c.south, c.west, c.east, s.use_south,
              s.use_west ? c.west : c.east};
  }
  throw std::logic_error("bad face");
}

double poly_value(const FaceFrame& f) {
  return f.adjacent ? 0.5 * f.center + 0.5 * f.front
                    : 1.5 * f.center - 0.5 * f.back;
}

// eps^2 h^2 cancelling (E_n d_nn + d_tt / 24) against sum(c) * v at the face,
// with E_n = 1/6 for the adjacent neighbor and -1/3 for the far one.
double frame_eta(const FaceFrame& f, const Perturbation2D& p, double eps_m) {
  const double d_normal = f.back - 2.0 * f.center + f.front;
  const double d_tangent = f.side_lo - 2.0 * f.center + f.side_hi;
  const double num = f.adjacent ? 4.0 * d_normal + d_tangent
                                : -8.0 * d_normal + d_tangent;
  if (num == 0.0) return 0.0;
  const double point = -2.0 * f.back + f.center - 5.0 * f.front;
  return num / regularized_denominator(4.0 * p.sum() * point, eps_m);
}

double regularizer(const CrossStencil& c, double scale) {
  const std::array<double, 5> v{c.west, c.center, c.east, c.south, c.north};
  return eta_regularizer(v, scale);
}

}  // namespace

double poly_face_value_2d(const CrossStencil& cross, StencilSubset2D subset,
                          Face face) {
  return poly_value(frame_for(cross, subset, face));
}

ShapeParameterEta compute_eta_2d(const CrossStencil& cross,
                                 const Perturbation2D& pert, double eps_m) {
  const FaceFrame f{cross.west,  cross.center, cross.east, cross.south,
                    cross.north, true,         cross.south};
  return {frame_eta(f, pert, eps_m), false, eps_m};
}

bool monotone_switch_2d(const CrossStencil& c) {
  return monotone_switch_k2(c.west, c.center, c.east) ||
         monotone_switch_k2(c.south, c.center, c.north);
}

double rbf_face_value_2d(const CrossStencil& cross, StencilSubset2D subset,
                         Face face, const FaceOptions& opts,
                         ShapeParameterEta* eta_out) {
  const FaceFrame f = frame_for(cross, subset, face);
  const double eps_m = regularizer(cross, opts.eps_m_scale);
  ShapeParameterEta eta{0.0, false, eps_m};
  if (opts.monotone_switch && monotone_switch_2d(cross)) {
    eta.switched = true;
  } else {
    eta.eta = frame_eta(f, opts.perturbation, eps_m);
  }
  if (eta_out) *eta_out = eta;
  const Perturbation2D& p = opts.perturbation;
  const double e = eta.eta;
  if (f.adjacent) {
    return (0.5 + p.c1 * e) * f.center + (0.5 + p.c2 * e) * f.front +
           p.c3 * e * f.side;
  }
  return (1.5 + p.c1 * e) * f.center + (-0.5 + p.c2 * e) * f.back +
         p.c3 * e * f.side;
}

double five_cell_fv_value(const CrossStencil& cross, Face face, double dx,
                          double dy) {
  if (std::abs(dx - dy) > 1e-12 * std::max(dx, dy)) {
    throw std::invalid_argument("five-cell interpolant needs dx == dy");
  }
  // Along the face normal the fit is the quadratic through the three
  // center values; the tangential terms vanish at the face midpoint.
  const FaceFrame f = frame_for(cross, {}, face);
  return -0.125 * f.back + 0.75 * f.center + 0.375 * f.front;
}

CellFaces2D reconstruct_cell_2d(const CrossStencil& cross, Method method,
                                const FaceOptions& opts, double dx, double dy) {
  CellFaces2D out;
  switch (method) {
    case Method::eno: {
      const StencilSubset2D s = select_stencil_2d(cross);
      out.east = poly_face_value_2d(cross, s, Face::east);
      out.west = poly_face_value_2d(cross, s, Face::west);
      out.north = poly_face_value_2d(cross, s, Face::north);
      out.south = poly_face_value_2d(cross, s, Face::south);
      break;
    }
    case Method::rbf_eno: {
      const StencilSubset2D s = select_stencil_2d(cross);
      ShapeParameterEta eta;
      out.east = rbf_face_value_2d(cross, s, Face::east, opts, &eta);
      out.west = rbf_face_value_2d(cross, s, Face::west, opts);
      out.north = rbf_face_value_2d(cross, s, Face::north, opts);
      out.south = rbf_face_value_2d(cross, s, Face::south, opts);
      out.switched = eta.switched;
      break;
    }
    case Method::five_cell:
      out.east = five_cell_fv_value(cross, Face::east, dx, dy);
      out.west = five_cell_fv_value(cross, Face::west, dx, dy);
      out.north = five_cell_fv_value(cross, Face::north, dx, dy);
      out.south = five_cell_fv_value(cross, Face::south, dx, dy);
      break;
    default:
      throw std::invalid_argument("2D supports eno, rbf-eno and fv5 only");
  }
  return out;
}

}  // namespace rbfeno
