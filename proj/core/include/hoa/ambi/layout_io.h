// Copyright 2026 The hoa-adapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOA_AMBI_LAYOUT_IO_H_
#define HOA_AMBI_LAYOUT_IO_H_

#include <filesystem>
#include <string_view>

#include "hoa/ambi/capsule_array.h"
#include "hoa/ambi/loudspeaker_layout.h"

namespace hoa::ambi {

// Layout files are JSON:
//
//   {
//     "order": 3,
//     "directions": [
//       {"azimuth_deg": 0.0, "colatitude_deg": 90.0, "weight": 0.349},
//       ...
//     ]
//   }
//
// "weight" is required for capsule arrays and ignored for loudspeakers.
// Errors throw ConfigError with the offending field path.
CapsuleArray parse_capsule_array(std::string_view json_text);
LoudspeakerLayout parse_loudspeaker_layout(std::string_view json_text);

CapsuleArray load_capsule_array(const std::filesystem::path& path);
LoudspeakerLayout load_loudspeaker_layout(const std::filesystem::path& path);

}  // namespace hoa::ambi

#endif  // HOA_AMBI_LAYOUT_IO_H_
