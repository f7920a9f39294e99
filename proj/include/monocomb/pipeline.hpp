#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monocomb/evaluation.hpp"
#include "monocomb/interpolation.hpp"
#include "monocomb/synthetic.hpp"
#include "monocomb/warping.hpp"

namespace monocomb {

/// Everything cmd_run needs. Inputs are file paths; geometry at t1/t2 can
/// be given either as disparity PNGs or as depth PNGs plus calibration.
struct PipelineConfig {
  // [input]
  std::string disp_t1;
  std::string disp_t2;
  std::string depth_t1;
  std::string depth_t2;
  std::string flow;
  std::string guide;
  std::string calibration;
  double depth_cap_m = kDefaultDepthCapM;

  // [gt] (optional; enables evaluation)
  std::string gt_disp_0;
  std::string gt_disp_1;
  std::string gt_flow;
  std::string gt_object_map;

  // [warp]
  int morphology_iterations = 2;
  bool morphology_on_combined = true;

  // [interpolator]
  InterpolatorConfig interpolator;

  // [eval]
  OutlierRule rule = OutlierRule::KittiStandard;
  bool masked = false;
  double missing_penalty_px = 100.0;
  // Regression gates: exit code 3 when exceeded. Negative = disabled.
  double max_sf_koe = -1.0;
  double max_d1_koe = -1.0;
  double max_d2_koe = -1.0;
  double max_of_koe = -1.0;
  double max_sum_epe = -1.0;

  // [output]
  std::string output_dir = "out";
  std::string frame_name = "000000_10";

  int jobs = 1;
};

/// Load a pipeline config file ([input]/[gt]/[warp]/[interpolator]/[eval]/[output]).
PipelineConfig load_pipeline_config(const std::string& path);

/// Parse a synthetic scene description ([scene] plus repeated [layer] sections).
SynthScene load_scene_config(const std::string& path);

struct StageTiming {
  std::string name;
  double seconds = 0.0;
};

struct RunResult {
  double warp_density = 0.0;
  std::vector<StageTiming> timings;
  std::optional<EvalReport> dense_report;
  std::optional<EvalReport> masked_report;
  int exit_code = 0;
};

/// Execute convert -> warp -> interpolate -> refine -> assemble
/// (-> evaluate). Stage outputs are materialised under
/// config.output_dir/{disp_0,disp_1,flow,sparse,mask,report}/frame_name.*;
/// the timing breakdown goes to `log` only, keeping the output tree
/// byte-reproducible. Throws on stage errors; exceptions carry a
/// stage-tagged message.
RunResult run_pipeline(const PipelineConfig& config, std::ostream& log);

/// Render a scene and write the 7-file fixture set (I1, I2, disp_0, disp_1,
/// flow, occ, obj_map) into output_dir. With emit_inputs also writes
/// input_disp_t2.png (t2 geometry in its own frame) and calib.txt.
void write_synth_fixture(const SynthScene& scene, const std::string& output_dir,
                         bool emit_inputs = false, int jobs = 1);

/// Load an estimate/gt frame triple laid out as <dir>/disp_0.png,
/// disp_1.png, flow.png (flat) or <dir>/{disp_0,disp_1,flow}/<frame>.png.
SceneFlowFrame load_frame_triple(const std::string& dir, const std::string& frame_name = "");

}  // namespace monocomb
