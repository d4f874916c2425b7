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

#ifndef DYNC_FLOW_IO_HPP_
#define DYNC_FLOW_IO_HPP_

#include <string>

#include "dync/frame.hpp"

namespace dync {

// Middlebury ".flo": "PIEH", little-endian int32 width and height, then
// width*height interleaved (u,v) little-endian float32. Components with
// magnitude above 1e9 are unknown-flow markers and read back as 0.
DenseFlow read_flow_file(const std::string& path);
void write_flow_file(const DenseFlow& flow, const std::string& path);

}  // namespace dync

#endif  // DYNC_FLOW_IO_HPP_
