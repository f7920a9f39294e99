#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "monocomb/assembly.hpp"
#include "monocomb/types.hpp"

namespace monocomb {

/// Outlier classification rule. KittiStandard is the devkit conjunction
/// (err > 3 px AND err > 5 % of the ground-truth magnitude); PaperLiteral
/// is the disjunction (err > 3 px OR err > 5 %).
enum class OutlierRule { KittiStandard, PaperLiteral };

struct EvalOptions {
  OutlierRule rule = OutlierRule::KittiStandard;
  /// Masked mode excludes estimate-invalid pixels from the domain; dense
  /// mode counts them as outliers with EPE = min(gt magnitude, penalty).
  bool masked = false;
  double missing_penalty_px = 100.0;
};

struct MetricCell {
  double epe = 0.0;                  ///< pixels
  double koe = 0.0;                  ///< percent
  std::size_t evaluated_pixels = 0;
};

/// Split indices into the per-quantity cell arrays.
enum Split : int { kBackground = 0, kForeground = 1, kAll = 2 };

/// Metric grid over D1/D2/OF/SF x bg/fg/all. All cells are computed over
/// the jointly gt-valid domain so that the SF union dominates every
/// component KOE and ΣEPE decomposes into the three component EPEs.
/// The SF cells carry ΣEPE in their epe slot.
struct EvalReport {
  std::array<MetricCell, 3> d1;
  std::array<MetricCell, 3> d2;
  std::array<MetricCell, 3> flow;
  std::array<MetricCell, 3> sf;
  double sum_epe = 0.0;        ///< == sf[kAll].epe
  double density_percent = 100.0;
  bool masked_mode = false;
};

bool is_outlier(double err, double gt_magnitude, OutlierRule rule);

/// Mean absolute disparity error over the evaluation domain
/// (gt-valid pixels, optionally minus `exclude`).
double epe(const DisparityMap& estimate, const DisparityMap& ground_truth,
           const OcclusionMask* exclude = nullptr, const EvalOptions& opts = {});

/// Mean Euclidean flow error.
double epe(const FlowField& estimate, const FlowField& ground_truth,
           const OcclusionMask* exclude = nullptr, const EvalOptions& opts = {});

/// Percentage of outlier pixels over the evaluation domain.
double koe(const DisparityMap& estimate, const DisparityMap& ground_truth,
           const OcclusionMask* exclude = nullptr, const EvalOptions& opts = {});
double koe(const FlowField& estimate, const FlowField& ground_truth,
           const OcclusionMask* exclude = nullptr, const EvalOptions& opts = {});

/// Full KITTI-style report; dense mode (estimate-invalid pixels inside the
/// gt domain count as outliers). Pass nullptr for `objects` to treat every
/// pixel as background.
EvalReport scene_flow_outliers(const SceneFlowFrame& estimate,
                               const SceneFlowFrame& ground_truth,
                               const ObjectMap* objects,
                               const EvalOptions& opts = {});

/// Same report restricted to unmasked, estimate-valid pixels; reports the
/// sparse density alongside.
EvalReport evaluate_masked(const SceneFlowFrame& estimate,
                           const SceneFlowFrame& ground_truth,
                           const ObjectMap* objects, const OcclusionMask& mask,
                           EvalOptions opts = {});

/// Fixed-width, two-decimal table mirroring the usual benchmark layout.
std::string render_report_table(const EvalReport& report);

/// Machine-readable metric=value lines.
std::string render_report_kv(const EvalReport& report);

}  // namespace monocomb
