#pragma once

#include "monocomb/types.hpp"

namespace monocomb {

/// Pinhole camera parameters of the (virtual) stereo rig. Disparity and
/// depth are interchangeable through d = f * B / D.
struct CameraIntrinsics {
  double focal_length_px = 0.0;
  double baseline_m = 0.0;

  CameraIntrinsics(double focal_length_px, double baseline_m)
      : focal_length_px(focal_length_px), baseline_m(baseline_m) {
    if (!(focal_length_px > 0.0))
      throw DomainError("focal length must be positive");
    if (!(baseline_m > 0.0))
      throw DomainError("baseline must be positive");
  }
};

/// Default depth cap in meters, applied when ingesting depth maps.
inline constexpr double kDefaultDepthCapM = 100.0;

/// Clamp valid depth values above the cap to the cap. Clamping keeps the
/// pixels valid so that density is unaffected.
void apply_depth_cap(DepthMap& depth, double cap_m = kDefaultDepthCapM);

/// Convert metric depth to (virtual) disparity, d = f * B / D.
/// Validity mask is preserved exactly; invalid pixels keep their stored value.
/// Throws DomainError naming the pixel if a valid depth is <= 0.
DisparityMap depth_to_disparity(const DepthMap& depth, const CameraIntrinsics& cam);

/// Inverse conversion, D = f * B / d. Same mask and error contract.
DepthMap disparity_to_depth(const DisparityMap& disp, const CameraIntrinsics& cam);

}  // namespace monocomb
