#pragma once

#include <string>

#include "monocomb/geometry.hpp"
#include "monocomb/types.hpp"

namespace monocomb {

/// Camera intrinsics plus (optional) image size parsed from a calibration
/// file. image_width/height are 0 when the file does not state them.
struct CalibrationRecord {
  CameraIntrinsics intrinsics;
  int image_width = 0;
  int image_height = 0;
};

// Disparity PNG: 16-bit grayscale, stored = round(disparity * 256), 0 = invalid.
DisparityMap read_disparity_png(const std::string& path);
void write_disparity_png(const DisparityMap& disp, const std::string& path);

// Flow PNG: 16-bit RGB, R = round(u*64) + 2^15, G = round(v*64) + 2^15,
// B = validity (1 valid / 0 invalid).
FlowField read_flow_png(const std::string& path);
void write_flow_png(const FlowField& flow, const std::string& path);

// Object map PNG: 8- or 16-bit single channel, labels verbatim, 0 = background.
ObjectMap read_object_map(const std::string& path);
void write_object_map(const ObjectMap& objects, const std::string& path);

// Depth PNG: same 16-bit encoding as disparity (stored = round(depth_m * 256),
// 0 = invalid); values above the cap are clamped at ingestion.
DepthMap read_depth_png(const std::string& path, double depth_cap_m = kDefaultDepthCapM);
void write_depth_png(const DepthMap& depth, const std::string& path);

// Guidance image: 8-bit grayscale or RGB PNG, intensities mapped to [0, 1].
GuidanceImage read_image_png(const std::string& path);
void write_image_png(const GuidanceImage& image, const std::string& path);

/// Export warp masks as an 8-bit label PNG: 0 = visible, 1 = occluded,
/// 2 = out of view.
void write_mask_png(const OcclusionMask& occluded, const OcclusionMask& out_of_view,
                    const std::string& path);

/// Parse a plain-text key:value calibration file. Accepts either explicit
/// focal_length_px / baseline_m entries or KITTI-style projection matrices
/// (P_rect_02 / P_rect_03 or P2 / P3): f is taken from entry (0,0), the
/// baseline from the right camera's translation magnitude divided by f.
CalibrationRecord read_calibration(const std::string& path);

/// Largest encodable flow magnitude, (2^15 - 1) / 64 pixels.
inline constexpr double kMaxEncodableFlowPx = 32767.0 / 64.0;

}  // namespace monocomb
