#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "monocomb/geometry.hpp"
#include "monocomb/types.hpp"

namespace monocomb {

/// Rigid motion of a layer between t1 and t2, applied to scene points with
/// the camera held fixed: X2 = R * X1 + t. Rotation is given as XYZ Euler
/// angles in degrees (R = Rz * Ry * Rx).
struct RigidMotion {
  std::array<double, 3> rotation_deg{0.0, 0.0, 0.0};
  std::array<double, 3> translation_m{0.0, 0.0, 0.0};
};

/// Textured plane n . X = distance (camera frame at t1, meters). A layer is
/// either a full plane (rect_half_a < 0) or a rectangle in plane-local
/// coordinates centred at (rect_center_a, rect_center_b).
struct PlaneLayer {
  std::array<double, 3> normal{0.0, 0.0, 1.0};
  double distance_m = 10.0;
  RigidMotion motion;
  double rect_center_a = 0.0;
  double rect_center_b = 0.0;
  double rect_half_a = -1.0;
  double rect_half_b = -1.0;
  std::array<double, 3> albedo{0.5, 0.5, 0.5};

  bool full_extent() const { return rect_half_a < 0.0 || rect_half_b < 0.0; }
};

/// Closed-form scene: ordered front-to-back layers over a mandatory
/// full-extent background. The pinhole camera sits at the origin with the
/// principal point at the image-grid centre.
struct SynthScene {
  CameraIntrinsics camera{721.0, 0.54};
  int width = 512;
  int height = 160;
  std::uint64_t seed = 1;
  std::vector<PlaneLayer> layers;
};

/// Everything the pipeline and its oracles need: images, geometry at both
/// times, ground-truth flow, gt-registered t2 disparity, occlusion and
/// out-of-view masks, and the object label map (fg layers numbered from 1).
struct RenderedScene {
  GuidanceImage image_t1;
  GuidanceImage image_t2;
  DepthMap depth_t1;
  DepthMap depth_t2;
  DisparityMap disp_t1;
  DisparityMap disp_t2;
  DisparityMap disp_t2_registered;
  FlowField flow;
  OcclusionMask occluded;
  OcclusionMask out_of_view;
  ObjectMap objects;
};

/// Render the scene analytically. Throws SceneError when a required surface
/// lies behind the camera, ConfigError when no background layer exists.
RenderedScene render(const SynthScene& scene, int jobs = 1);

/// Add bounded uniform noise in [-noise_px, +noise_px] per flow component,
/// deterministically from the seed. Throws DomainError for negative noise.
FlowField perturb(const FlowField& flow, double noise_px, std::uint64_t seed);

/// The default two-layer scene (static background, foreground rectangle
/// translating by an integer pixel flow).
SynthScene default_two_layer_scene(int width = 512, int height = 160,
                                   std::uint64_t seed = 1);

}  // namespace monocomb
