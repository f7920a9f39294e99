#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "monocomb/errors.hpp"
#include "monocomb/grid.hpp"

namespace monocomb {

/// Image coordinate, possibly fractional. x = column, y = row.
struct PixelCoord {
  double x = 0.0;
  double y = 0.0;
};

/// Per-pixel scalar field with a validity mask. Invalid pixels keep their
/// stored value so that pass-through operations can preserve it untouched.
/// Tagged so that depth maps (meters) and disparity maps (pixels) are
/// distinct types.
template <typename Tag>
class PixelMap {
 public:
  PixelMap() = default;

  PixelMap(int width, int height)
      : values_(width, height, 0.0), valid_(width, height, 0) {}

  int width() const { return values_.width(); }
  int height() const { return values_.height(); }
  std::size_t pixel_count() const { return values_.size(); }
  bool in_bounds(int x, int y) const { return values_.in_bounds(x, y); }
  std::size_t index(int x, int y) const { return values_.index(x, y); }

  double value(int x, int y) const { return values_(x, y); }
  bool valid(int x, int y) const { return valid_(x, y) != 0; }
  bool valid_at(std::size_t i) const { return valid_[i] != 0; }
  double value_at(std::size_t i) const { return values_[i]; }

  void set(int x, int y, double value) {
    values_(x, y) = value;
    valid_(x, y) = 1;
  }

  void set_invalid(int x, int y) { valid_(x, y) = 0; }

  void set_raw(int x, int y, double value, bool is_valid) {
    values_(x, y) = value;
    valid_(x, y) = is_valid ? 1 : 0;
  }

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < valid_.size(); ++i) n += valid_[i];
    return n;
  }

  /// Fraction of valid pixels in [0, 1].
  double density() const {
    if (pixel_count() == 0) return 0.0;
    return static_cast<double>(valid_count()) / static_cast<double>(pixel_count());
  }

  bool dense() const { return valid_count() == pixel_count(); }

  Grid<double>& values() { return values_; }
  const Grid<double>& values() const { return values_; }
  Grid<std::uint8_t>& validity() { return valid_; }
  const Grid<std::uint8_t>& validity() const { return valid_; }

  friend bool operator==(const PixelMap& a, const PixelMap& b) {
    return a.values_ == b.values_ && a.valid_ == b.valid_;
  }

 private:
  Grid<double> values_;
  Grid<std::uint8_t> valid_;
};

using DepthMap = PixelMap<struct DepthTag>;
using DisparityMap = PixelMap<struct DisparityTag>;

/// Dense 2-channel displacement field (u, v) in pixels with validity mask.
class FlowField {
 public:
  FlowField() = default;

  FlowField(int width, int height)
      : u_(width, height, 0.0), v_(width, height, 0.0), valid_(width, height, 0) {}

  int width() const { return u_.width(); }
  int height() const { return u_.height(); }
  std::size_t pixel_count() const { return u_.size(); }
  bool in_bounds(int x, int y) const { return u_.in_bounds(x, y); }
  std::size_t index(int x, int y) const { return u_.index(x, y); }

  double u(int x, int y) const { return u_(x, y); }
  double v(int x, int y) const { return v_(x, y); }
  bool valid(int x, int y) const { return valid_(x, y) != 0; }

  void set(int x, int y, double u, double v) {
    u_(x, y) = u;
    v_(x, y) = v;
    valid_(x, y) = 1;
  }

  void set_invalid(int x, int y) { valid_(x, y) = 0; }

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < valid_.size(); ++i) n += valid_[i];
    return n;
  }

  double density() const {
    if (pixel_count() == 0) return 0.0;
    return static_cast<double>(valid_count()) / static_cast<double>(pixel_count());
  }

  Grid<double>& u_values() { return u_; }
  const Grid<double>& u_values() const { return u_; }
  Grid<double>& v_values() { return v_; }
  const Grid<double>& v_values() const { return v_; }
  Grid<std::uint8_t>& validity() { return valid_; }
  const Grid<std::uint8_t>& validity() const { return valid_; }

  friend bool operator==(const FlowField& a, const FlowField& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.valid_ == b.valid_;
  }

 private:
  Grid<double> u_;
  Grid<double> v_;
  Grid<std::uint8_t> valid_;
};

/// Binary per-pixel mask; true = pixel is masked out (occluded, out of view, ...).
class OcclusionMask {
 public:
  OcclusionMask() = default;

  OcclusionMask(int width, int height, bool fill = false)
      : bits_(width, height, fill ? 1 : 0) {}

  int width() const { return bits_.width(); }
  int height() const { return bits_.height(); }
  std::size_t pixel_count() const { return bits_.size(); }
  bool in_bounds(int x, int y) const { return bits_.in_bounds(x, y); }

  bool masked(int x, int y) const { return bits_(x, y) != 0; }
  bool masked_at(std::size_t i) const { return bits_[i] != 0; }
  void set(int x, int y, bool m) { bits_(x, y) = m ? 1 : 0; }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) n += bits_[i] != 0;
    return n;
  }

  bool none() const { return count() == 0; }

  Grid<std::uint8_t>& bits() { return bits_; }
  const Grid<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const OcclusionMask& a, const OcclusionMask& b) {
    return a.bits_ == b.bits_;
  }

 private:
  Grid<std::uint8_t> bits_;
};

/// Reference image used to steer interpolation. 1 (gray) or 3 (RGB)
/// channels, interleaved, intensities in [0, 1].
class GuidanceImage {
 public:
  GuidanceImage() = default;

  GuidanceImage(int width, int height, int channels)
      : width_(width), height_(height), channels_(channels) {
    if (width <= 0 || height <= 0)
      throw ShapeError("guidance image dimensions must be positive");
    if (channels != 1 && channels != 3)
      throw DomainError("guidance image must have 1 or 3 channels");
    data_.assign(static_cast<std::size_t>(width) * height * channels, 0.0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }

  double at(int x, int y, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  void set(int x, int y, int c, double v) {
    data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c] = v;
  }

  /// Squared Euclidean colour distance between two pixels.
  double color_dist2(int ax, int ay, int bx, int by) const {
    const std::size_t ia = (static_cast<std::size_t>(ay) * width_ + ax) * channels_;
    const std::size_t ib = (static_cast<std::size_t>(by) * width_ + bx) * channels_;
    double d2 = 0.0;
    for (int c = 0; c < channels_; ++c) {
      const double d = data_[ia + c] - data_[ib + c];
      d2 += d * d;
    }
    return d2;
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  friend bool operator==(const GuidanceImage& a, const GuidanceImage& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ &&
           a.channels_ == b.channels_ && a.data_ == b.data_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

/// Per-pixel instance labels; 0 = background, >0 = foreground object.
class ObjectMap {
 public:
  ObjectMap() = default;
  ObjectMap(int width, int height) : labels_(width, height, 0) {}

  int width() const { return labels_.width(); }
  int height() const { return labels_.height(); }
  std::size_t pixel_count() const { return labels_.size(); }

  std::uint16_t label(int x, int y) const { return labels_(x, y); }
  bool foreground(int x, int y) const { return labels_(x, y) > 0; }
  void set(int x, int y, std::uint16_t label) { labels_(x, y) = label; }

  std::size_t foreground_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) n += labels_[i] > 0;
    return n;
  }

  Grid<std::uint16_t>& labels() { return labels_; }
  const Grid<std::uint16_t>& labels() const { return labels_; }

  friend bool operator==(const ObjectMap& a, const ObjectMap& b) {
    return a.labels_ == b.labels_;
  }

 private:
  Grid<std::uint16_t> labels_;
};

namespace detail {

inline void require_same_size(int wa, int ha, int wb, int hb, const char* what) {
  if (wa != wb || ha != hb)
    throw ShapeError(std::string(what) + ": dimension mismatch (" +
                     std::to_string(wa) + "x" + std::to_string(ha) + " vs " +
                     std::to_string(wb) + "x" + std::to_string(hb) + ")");
}

}  // namespace detail

template <typename A, typename B>
void require_same_size(const A& a, const B& b, const char* what) {
  detail::require_same_size(a.width(), a.height(), b.width(), b.height(), what);
}

}  // namespace monocomb
