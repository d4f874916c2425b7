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

#include "dync/slice.hpp"

namespace dync {

Frame spacetime_slice(const std::vector<Frame>& frames, int column,
                      int strip_width) {
  if (frames.empty()) throw DimensionError("spacetime_slice: no frames");
  if (strip_width < 1) throw DimensionError("spacetime_slice: bad strip width");
  const Frame& first = frames.front();
  if (column < 0 || column + strip_width > first.width)
    throw DimensionError("spacetime_slice: column out of range");
  for (const Frame& f : frames)
    if (!f.same_size(first))
      throw DimensionError("spacetime_slice: frame size mismatch");

  Frame out(strip_width * static_cast<int>(frames.size()), first.height);
  for (size_t t = 0; t < frames.size(); ++t)
    for (int y = 0; y < first.height; ++y)
      for (int dx = 0; dx < strip_width; ++dx)
        for (int c = 0; c < Frame::kChannels; ++c)
          out.at(static_cast<int>(t) * strip_width + dx, y, c) =
              frames[t].at(column + dx, y, c);
  return out;
}

}  // namespace dync
