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

#include "dync/warp.hpp"

#include <algorithm>
#include <cmath>

namespace dync {

namespace {

inline void warp_row(const Frame& key, const DenseFlow& flow, Frame& out,
                     int y) {
  const int w = key.width, h = key.height;
  for (int x = 0; x < w; ++x) {
    float sx = std::clamp(static_cast<float>(x) + flow.u[flow.idx(x, y)], 0.0f,
                          static_cast<float>(w - 1));
    float sy = std::clamp(static_cast<float>(y) + flow.v[flow.idx(x, y)], 0.0f,
                          static_cast<float>(h - 1));
    int x0 = static_cast<int>(sx);
    int y0 = static_cast<int>(sy);
    int x1 = std::min(x0 + 1, w - 1);
    int y1 = std::min(y0 + 1, h - 1);
    float fx = sx - static_cast<float>(x0);
    float fy = sy - static_cast<float>(y0);
    for (int c = 0; c < Frame::kChannels; ++c) {
      float top = key.at(x0, y0, c) + fx * (key.at(x1, y0, c) - key.at(x0, y0, c));
      float bot = key.at(x0, y1, c) + fx * (key.at(x1, y1, c) - key.at(x0, y1, c));
      out.at(x, y, c) = top + fy * (bot - top);
    }
  }
}

}  // namespace

Frame warp_backward(const Frame& key, const DenseFlow& flow) {
  if (key.width != flow.width || key.height != flow.height)
    throw DimensionError("warp_backward: frame/flow size mismatch");
  Frame out(key.width, key.height);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < key.height; ++y) warp_row(key, flow, out, y);
  return out;
}

namespace ref {

Frame warp_backward(const Frame& key, const DenseFlow& flow) {
  if (key.width != flow.width || key.height != flow.height)
    throw DimensionError("warp_backward: frame/flow size mismatch");
  Frame out(key.width, key.height);
  for (int y = 0; y < key.height; ++y) warp_row(key, flow, out, y);
  return out;
}

}  // namespace ref

}  // namespace dync
