#pragma once

#include "monocomb/types.hpp"

namespace monocomb {

/// Parameters of the edge-aware diffusion interpolator.
struct InterpolatorConfig {
  /// Colour-distance sensitivity; neighbour weight = exp(-edge_weight * dist^2).
  double edge_weight = 50.0;
  /// Jacobi relaxation sweep cap for interpolate(). Must be >= 1.
  int smoothing_iterations = 60;
  /// 4- or 8-connected neighbourhood.
  int neighborhood = 4;
  /// Sweep cap for refine_dense(); 0 keeps refine_dense an identity pass.
  int refine_iterations = 0;
  int jobs = 1;

  void validate() const;
};

/// Sweeps stop early once the largest per-pixel update drops below this.
inline constexpr double kInterpolationConvergenceTol = 1e-4;

/// Fill the gaps of a sparse disparity map, guided by image edges, and
/// return a fully dense map. Valid input pixels are anchors and are
/// reproduced exactly; gaps are filled by confidence-weighted frontier
/// propagation followed by Jacobi relaxation, both using weights
/// exp(-edge_weight * colour_dist^2). Every output value lies within the
/// [min, max] range of the valid input values.
/// Throws EmptyInputError when no pixel is valid.
DisparityMap interpolate(const DisparityMap& sparse, const GuidanceImage& guide,
                         const InterpolatorConfig& cfg = {});

/// Edge-aware smoothing of an already dense map. With the default
/// configuration (refine_iterations == 0) this is an exact identity.
/// Throws PreconditionError when the input is not dense.
DisparityMap refine_dense(const DisparityMap& dense, const GuidanceImage& guide,
                          const InterpolatorConfig& cfg = {});

}  // namespace monocomb
