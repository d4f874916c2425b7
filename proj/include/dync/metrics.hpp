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

#ifndef DYNC_METRICS_HPP_
#define DYNC_METRICS_HPP_

#include "dync/frame.hpp"

namespace dync {

// Mean endpoint error between two flow fields.
double epe(const DenseFlow& a, const DenseFlow& b);

// Peak 1.0; identical frames report +infinity.
double psnr(const Frame& a, const Frame& b);

// 8x8 uniform windows at every valid offset, standard constants, averaged
// over windows and channels.
double ssim(const Frame& a, const Frame& b);

}  // namespace dync

#endif  // DYNC_METRICS_HPP_
