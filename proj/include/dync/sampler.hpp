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

#ifndef DYNC_SAMPLER_HPP_
#define DYNC_SAMPLER_HPP_

#include <cstdint>
#include <vector>

#include "dync/frame.hpp"

namespace dync {

// Non-negative edge strength of a flow field.
struct EdgeMap {
  int width = 0;
  int height = 0;
  std::vector<float> magnitude;

  EdgeMap() = default;
  EdgeMap(int w, int h)
      : width(w), height(h), magnitude(static_cast<size_t>(w) * h, 0.0f) {
    if (w <= 0 || h <= 0) throw DimensionError("EdgeMap: non-positive size");
  }
  size_t idx(int x, int y) const { return static_cast<size_t>(y) * width + x; }
};

struct Region {
  double centroid_x = 0.0;
  double centroid_y = 0.0;
  double mean_flow_u = 0.0;  // filled by annotate_flow
  double mean_flow_v = 0.0;
  double mean_depth = 0.0;   // mean topological distance over region pixels
  int64_t pixel_count = 0;
};

// Immersion watershed of an edge map. Every pixel carries exactly one label;
// ridge pixels (where two basins meet) keep the lowest adjacent label and are
// flagged. depth is the BFS hop count to the nearest ridge or positive-edge
// pixel; 0 everywhere when no such pixel exists.
struct WatershedMap {
  int width = 0;
  int height = 0;
  int region_count = 0;
  std::vector<int32_t> labels;
  std::vector<uint8_t> ridge;
  std::vector<int32_t> depth;
  std::vector<Region> regions;

  size_t idx(int x, int y) const { return static_cast<size_t>(y) * width + x; }
};

struct SamplerConfig {
  int nms_radius = 2;
  float edge_floor = 1e-3f;  // magnitudes below this count as no edge
};

// Central-difference gradient magnitude over u and v, one-sided at borders.
EdgeMap motion_edges(const DenseFlow& flow);

// Keeps a pixel iff it is the maximum of its (2r+1)^2 window; equal values
// are broken by lowest row-major index. Everything else is zeroed.
EdgeMap nms(const EdgeMap& edges, int radius);

WatershedMap watershed_map(const EdgeMap& edges);

// Fills per-region mean flow from a dense flow of matching size.
void annotate_flow(WatershedMap& map, const DenseFlow& flow);

// Dense-to-sparse sampling: watershed regions of the floored edge map, one
// sample per region at its deepest interior pixel, pruned to the regions of
// highest mean flow magnitude or padded from a uniform grid to exactly
// target_count samples.
SparseMotion sample_sparse(const DenseFlow& flow, int target_count,
                           const SamplerConfig& cfg = {});

}  // namespace dync

#endif  // DYNC_SAMPLER_HPP_
