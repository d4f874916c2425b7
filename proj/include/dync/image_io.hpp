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

#ifndef DYNC_IMAGE_IO_HPP_
#define DYNC_IMAGE_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dync/frame.hpp"

namespace dync {

// Binary PPM (P6, 8-bit). Export rounds half away from zero; import maps
// byte b to b/255.
Frame read_ppm(const std::string& path);
void write_ppm(const Frame& frame, const std::string& path);

// In-memory PPM bytes, used to embed the key frame in a stream container.
std::vector<uint8_t> encode_ppm(const Frame& frame);
Frame decode_ppm(const std::vector<uint8_t>& bytes);

// Binary PGM (P5, 8-bit), single plane; used for mask and slice debug dumps.
void write_pgm(const std::vector<uint8_t>& gray, int width, int height,
               const std::string& path);

uint8_t quantize_u8(float value);

}  // namespace dync

#endif  // DYNC_IMAGE_IO_HPP_
