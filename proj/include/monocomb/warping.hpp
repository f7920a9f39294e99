#pragma once

#include <cstddef>

#include "monocomb/types.hpp"

namespace monocomb {

struct WarpOptions {
  /// Rounds of morphological closing and of opening applied to the mask.
  int morphology_iterations = 2;
  /// Refine the combined occlusion+out-of-view mask (default) or only the
  /// geometric occlusion part.
  bool morphology_on_combined = true;
  int jobs = 1;
};

/// Output of the warp stage: t2 geometry registered to the t1 frame.
/// The three invalid-pixel categories are disjoint, so
///   1 - density == (occluded + out_of_view + unsupported) / pixel_count.
struct WarpResult {
  DisparityMap warped;       ///< d2 expressed in the t1 frame, non-dense
  OcclusionMask occlusion;   ///< geometrically occluded sources (after morphology)
  OcclusionMask out_of_view; ///< sources whose flow target leaves the image
  std::size_t occluded_count = 0;
  std::size_t out_of_view_count = 0;
  std::size_t unsupported_count = 0;  ///< invalid flow or no valid bilinear support

  double density() const { return warped.density(); }
};

/// Backward-gather warp: per pixel p, sample d2 at p + u(p) with bilinear
/// interpolation over the <= 4 integer neighbours. Only valid neighbours
/// contribute; weights are renormalised over them. The result is invalid
/// where flow is invalid, where the target leaves the image domain, or
/// where no valid neighbour supports the sample.
DisparityMap warp_disparity(const DisparityMap& d2, const FlowField& flow,
                            int jobs = 1);

/// Collision-based occlusion mask: flow targets are rounded (half up, per
/// coordinate) to integer pixels; among all sources sharing a rounded
/// target, only the closest one (maximal d1 disparity) survives, ties
/// broken towards the smallest raster index. Sources with invalid flow or
/// invalid d1 do not participate and are never masked. Rounded targets
/// outside the image still form collision buckets; out-of-view handling is
/// a separate concern.
OcclusionMask build_occlusion_mask(const DisparityMap& d1, const FlowField& flow);

/// Morphological cleanup: `iterations` rounds of closing (dilate, erode)
/// followed by `iterations` rounds of opening (erode, dilate) with a full
/// 3x3 structuring element. Neighbours outside the image are ignored
/// (clipped structuring element).
OcclusionMask refine_mask(const OcclusionMask& mask, int iterations = 2,
                          int jobs = 1);

/// Per-pixel mask of flow targets that leave the image domain.
OcclusionMask out_of_view_mask(const FlowField& flow);

/// Full warp stage: warp_disparity + build_occlusion_mask + refine_mask,
/// composed per WarpResult's validity contract. d1 must be dense over
/// flow-valid pixels.
WarpResult warp_with_occlusion(const DisparityMap& d1, const DisparityMap& d2,
                               const FlowField& flow,
                               const WarpOptions& options = {});

}  // namespace monocomb
