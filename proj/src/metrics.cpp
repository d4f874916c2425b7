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

#include "dync/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace dync {

// Reductions accumulate one partial per row, then sum partials in row order,
// so results do not depend on the thread count.

double epe(const DenseFlow& a, const DenseFlow& b) {
  if (!a.same_size(b)) throw DimensionError("epe: size mismatch");
  std::vector<double> row_sum(a.height, 0.0);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < a.height; ++y) {
    double s = 0.0;
    for (int x = 0; x < a.width; ++x) {
      size_t i = a.idx(x, y);
      double du = static_cast<double>(a.u[i]) - b.u[i];
      double dv = static_cast<double>(a.v[i]) - b.v[i];
      s += std::sqrt(du * du + dv * dv);
    }
    row_sum[y] = s;
  }
  double total = 0.0;
  for (double s : row_sum) total += s;
  return total / static_cast<double>(a.size());
}

double psnr(const Frame& a, const Frame& b) {
  if (!a.same_size(b)) throw DimensionError("psnr: size mismatch");
  std::vector<double> row_sum(a.height, 0.0);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < a.height; ++y) {
    double s = 0.0;
    for (int x = 0; x < a.width; ++x)
      for (int c = 0; c < Frame::kChannels; ++c) {
        double d = static_cast<double>(a.at(x, y, c)) - b.at(x, y, c);
        s += d * d;
      }
    row_sum[y] = s;
  }
  double total = 0.0;
  for (double s : row_sum) total += s;
  double mse = total / (static_cast<double>(a.pixel_count()) * Frame::kChannels);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / mse);
}

double ssim(const Frame& a, const Frame& b) {
  if (!a.same_size(b)) throw DimensionError("ssim: size mismatch");
  constexpr int kWin = 8;
  if (a.width < kWin || a.height < kWin)
    throw DimensionError("ssim: frame smaller than 8x8 window");
  constexpr double kC1 = 0.01 * 0.01;  // (k1*L)^2 with L = 1
  constexpr double kC2 = 0.03 * 0.03;
  const int rows = a.height - kWin + 1;
  const int cols = a.width - kWin + 1;
  constexpr double kInvN = 1.0 / (kWin * kWin);

  std::vector<double> row_sum(rows, 0.0);
#pragma omp parallel for schedule(static)
  for (int wy = 0; wy < rows; ++wy) {
    double s = 0.0;
    for (int wx = 0; wx < cols; ++wx) {
      for (int c = 0; c < Frame::kChannels; ++c) {
        double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
        for (int dy = 0; dy < kWin; ++dy)
          for (int dx = 0; dx < kWin; ++dx) {
            double va = a.at(wx + dx, wy + dy, c);
            double vb = b.at(wx + dx, wy + dy, c);
            sa += va;
            sb += vb;
            saa += va * va;
            sbb += vb * vb;
            sab += va * vb;
          }
        double mu_a = sa * kInvN, mu_b = sb * kInvN;
        double var_a = saa * kInvN - mu_a * mu_a;
        double var_b = sbb * kInvN - mu_b * mu_b;
        double cov = sab * kInvN - mu_a * mu_b;
        double num = (2 * mu_a * mu_b + kC1) * (2 * cov + kC2);
        double den = (mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2);
        s += num / den;
      }
    }
    row_sum[wy] = s;
  }
  double total = 0.0;
  for (double s : row_sum) total += s;
  return total / (static_cast<double>(rows) * cols * Frame::kChannels);
}

}  // namespace dync
