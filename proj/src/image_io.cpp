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

#include "dync/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace dync {

uint8_t quantize_u8(float value) {
  float clamped = std::clamp(value, 0.0f, 1.0f);
  // round half away from zero; values are non-negative here
  long q = std::lround(clamped * 255.0f);
  return static_cast<uint8_t>(std::clamp<long>(q, 0, 255));
}

namespace {

// Reads one whitespace-delimited PNM header token, skipping '#' comments.
std::string next_token(const std::vector<uint8_t>& bytes, size_t& pos) {
  while (pos < bytes.size()) {
    char c = static_cast<char>(bytes[pos]);
    if (c == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      break;
    }
  }
  size_t start = pos;
  while (pos < bytes.size() &&
         !std::isspace(static_cast<unsigned char>(bytes[pos])))
    ++pos;
  return std::string(bytes.begin() + start, bytes.begin() + pos);
}

std::vector<uint8_t> read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return bytes;
}

void write_all(const std::string& path, const void* data, size_t size) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace

std::vector<uint8_t> encode_ppm(const Frame& frame) {
  std::ostringstream header;
  header << "P6\n" << frame.width << " " << frame.height << "\n255\n";
  std::string h = header.str();
  std::vector<uint8_t> bytes(h.begin(), h.end());
  bytes.reserve(bytes.size() + frame.data.size());
  for (float v : frame.data) bytes.push_back(quantize_u8(v));
  return bytes;
}

Frame decode_ppm(const std::vector<uint8_t>& bytes) {
  size_t pos = 0;
  if (next_token(bytes, pos) != "P6")
    throw FormatError("decode_ppm: not a binary PPM");
  int w = 0, h = 0, maxval = 0;
  try {
    w = std::stoi(next_token(bytes, pos));
    h = std::stoi(next_token(bytes, pos));
    maxval = std::stoi(next_token(bytes, pos));
  } catch (const std::exception&) {
    throw FormatError("decode_ppm: malformed header");
  }
  if (w < 1 || h < 1) throw FormatError("decode_ppm: illegal dimensions");
  if (maxval != 255) throw FormatError("decode_ppm: only 8-bit supported");
  ++pos;  // single whitespace byte after maxval
  size_t need = static_cast<size_t>(w) * h * 3;
  if (bytes.size() - pos < need) throw FormatError("decode_ppm: payload too short");

  Frame frame(w, h);
  for (size_t i = 0; i < need; ++i)
    frame.data[i] = static_cast<float>(bytes[pos + i]) / 255.0f;
  return frame;
}

Frame read_ppm(const std::string& path) { return decode_ppm(read_all(path)); }

void write_ppm(const Frame& frame, const std::string& path) {
  std::vector<uint8_t> bytes = encode_ppm(frame);
  write_all(path, bytes.data(), bytes.size());
}

void write_pgm(const std::vector<uint8_t>& gray, int width, int height,
               const std::string& path) {
  if (width < 1 || height < 1 ||
      gray.size() != static_cast<size_t>(width) * height)
    throw DimensionError("write_pgm: size mismatch");
  std::ostringstream header;
  header << "P5\n" << width << " " << height << "\n255\n";
  std::string h = header.str();
  std::vector<uint8_t> bytes(h.begin(), h.end());
  bytes.insert(bytes.end(), gray.begin(), gray.end());
  write_all(path, bytes.data(), bytes.size());
}

}  // namespace dync
