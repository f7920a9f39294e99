#pragma once

#include "monocomb/types.hpp"
#include "monocomb/warping.hpp"

namespace monocomb {

/// Scene flow in image space: disparity at t1, disparity at t2 registered
/// to the t1 frame, and 2D optical flow, all sharing dimensions. This is
/// the KITTI label parameterisation.
struct SceneFlowFrame {
  DisparityMap d1;
  DisparityMap d2;
  FlowField flow;

  int width() const { return d1.width(); }
  int height() const { return d1.height(); }

  bool dense() const {
    return d1.dense() && d2.dense() && flow.valid_count() == flow.pixel_count();
  }

  bool joint_valid(int x, int y) const {
    return d1.valid(x, y) && d2.valid(x, y) && flow.valid(x, y);
  }

  std::size_t joint_valid_count() const;
  double joint_density() const;
};

/// Package the intermediate non-dense scene flow (d1, d2^w, u). d1 and the
/// flow are additionally masked with the warped map's validity so the
/// frame carries one joint validity; this is the masked-evaluation input.
SceneFlowFrame assemble_sparse(const DisparityMap& d1, const WarpResult& warp,
                               const FlowField& flow);

/// Package the final dense scene flow. All inputs must be fully dense;
/// assembly adds no transformation.
SceneFlowFrame assemble_dense(const DisparityMap& d1_refined,
                              const DisparityMap& d2_interpolated,
                              const FlowField& flow);

}  // namespace monocomb
