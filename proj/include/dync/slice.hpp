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

#ifndef DYNC_SLICE_HPP_
#define DYNC_SLICE_HPP_

#include <vector>

#include "dync/frame.hpp"

namespace dync {

// y-t space-time slice: a fixed vertical strip from every frame, concatenated
// left to right in frame order. Output width = strip_width * frame count.
Frame spacetime_slice(const std::vector<Frame>& frames, int column,
                      int strip_width = 5);

}  // namespace dync

#endif  // DYNC_SLICE_HPP_
