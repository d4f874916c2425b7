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

#ifndef DYNC_WARP_HPP_
#define DYNC_WARP_HPP_

#include "dync/frame.hpp"

namespace dync {

// output(x,y) = bilinear sample of key at (x + u, y + v), sample coordinates
// clamped to the image border.
Frame warp_backward(const Frame& key, const DenseFlow& flow);

namespace ref {
// Serial twin of the OpenMP kernel; identical arithmetic, kept for testing.
Frame warp_backward(const Frame& key, const DenseFlow& flow);
}  // namespace ref

}  // namespace dync

#endif  // DYNC_WARP_HPP_
