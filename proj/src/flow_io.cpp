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

#include "dync/flow_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <memory>

namespace dync {

namespace {

constexpr char kTag[4] = {'P', 'I', 'E', 'H'};
constexpr float kUnknownFlow = 1e9f;
constexpr int kMaxDim = 99999;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// All on-disk integers and floats are little-endian; this codebase assumes a
// little-endian host (static_assert below keeps the assumption visible).
static_assert(std::endian::native == std::endian::little,
              "flo I/O assumes a little-endian host");

}  // namespace

DenseFlow read_flow_file(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError("read_flow_file: cannot open " + path);

  char tag[4];
  if (std::fread(tag, 1, 4, f.get()) != 4)
    throw FormatError("read_flow_file: truncated header in " + path);
  if (std::memcmp(tag, kTag, 4) != 0)
    throw FormatError("read_flow_file: bad magic in " + path);

  int32_t w = 0, h = 0;
  if (std::fread(&w, 4, 1, f.get()) != 1 || std::fread(&h, 4, 1, f.get()) != 1)
    throw FormatError("read_flow_file: truncated header in " + path);
  if (w < 1 || h < 1 || w > kMaxDim || h > kMaxDim)
    throw FormatError("read_flow_file: illegal dimensions in " + path);

  DenseFlow flow(w, h);
  std::vector<float> row(static_cast<size_t>(w) * 2);
  for (int y = 0; y < h; ++y) {
    if (std::fread(row.data(), 4, row.size(), f.get()) != row.size())
      throw FormatError("read_flow_file: payload too short in " + path);
    for (int x = 0; x < w; ++x) {
      float fu = row[2 * x], fv = row[2 * x + 1];
      if (!std::isfinite(fu) || !std::isfinite(fv))
        throw DataError("read_flow_file: non-finite value in " + path);
      if (std::fabs(fu) > kUnknownFlow || std::fabs(fv) > kUnknownFlow) {
        fu = 0.0f;
        fv = 0.0f;
      }
      flow.u[flow.idx(x, y)] = fu;
      flow.v[flow.idx(x, y)] = fv;
    }
  }
  return flow;
}

void write_flow_file(const DenseFlow& flow, const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("write_flow_file: cannot open " + path);

  int32_t w = flow.width, h = flow.height;
  bool ok = std::fwrite(kTag, 1, 4, f.get()) == 4 &&
            std::fwrite(&w, 4, 1, f.get()) == 1 &&
            std::fwrite(&h, 4, 1, f.get()) == 1;
  std::vector<float> row(static_cast<size_t>(w) * 2);
  for (int y = 0; ok && y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      row[2 * x] = flow.u[flow.idx(x, y)];
      row[2 * x + 1] = flow.v[flow.idx(x, y)];
    }
    ok = std::fwrite(row.data(), 4, row.size(), f.get()) == row.size();
  }
  if (!ok) throw IoError("write_flow_file: write failed for " + path);
}

}  // namespace dync
