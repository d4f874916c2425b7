// Copyright (c) the DynCodec Project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DYNC_FRAME_HPP_
#define DYNC_FRAME_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dync/errors.hpp"

namespace dync {

// RGB raster, values in [0,1], row-major, channel-interleaved.
struct Frame {
  static constexpr int kChannels = 3;

  int width = 0;
  int height = 0;
  std::vector<float> data;

  Frame() = default;
  Frame(int w, int h, float fill = 0.0f)
      : width(w), height(h),
        data(static_cast<size_t>(w) * h * kChannels, fill) {
    if (w <= 0 || h <= 0) throw DimensionError("Frame: non-positive size");
  }

  float& at(int x, int y, int c) {
    return data[(static_cast<size_t>(y) * width + x) * kChannels + c];
  }
  float at(int x, int y, int c) const {
    return data[(static_cast<size_t>(y) * width + x) * kChannels + c];
  }
  size_t pixel_count() const {
    return static_cast<size_t>(width) * height;
  }
  bool same_size(const Frame& o) const {
    return width == o.width && height == o.height;
  }
};

// Per-pixel displacement field, backward convention: the vector at (x, y)
// points from an inter-frame pixel to its source position in the key frame.
// Positive u is rightward, positive v is downward.
struct DenseFlow {
  int width = 0;
  int height = 0;
  std::vector<float> u;
  std::vector<float> v;

  DenseFlow() = default;
  DenseFlow(int w, int h)
      : width(w), height(h),
        u(static_cast<size_t>(w) * h, 0.0f),
        v(static_cast<size_t>(w) * h, 0.0f) {
    if (w <= 0 || h <= 0) throw DimensionError("DenseFlow: non-positive size");
  }

  size_t size() const { return static_cast<size_t>(width) * height; }
  size_t idx(int x, int y) const { return static_cast<size_t>(y) * width + x; }
  bool same_size(const DenseFlow& o) const {
    return width == o.width && height == o.height;
  }
};

// Flow retained only at sampled positions; mask marks the sampled sites
// (zero-motion samples included). flow is exactly zero wherever mask is 0.
struct SparseMotion {
  DenseFlow flow;
  std::vector<uint8_t> mask;
};

inline bool all_finite(const std::vector<float>& v) {
  for (float x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace dync

#endif  // DYNC_FRAME_HPP_
