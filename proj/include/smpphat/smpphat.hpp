// Copyright 2026 the smpphat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header. array_config.hpp is kept separate because it pulls in the
// JSON parser.

#pragma once

#include "smpphat/bench.hpp"
#include "smpphat/campaign.hpp"
#include "smpphat/fft.hpp"
#include "smpphat/gcc.hpp"
#include "smpphat/geometry.hpp"
#include "smpphat/grid.hpp"
#include "smpphat/localizer.hpp"
#include "smpphat/merge.hpp"
#include "smpphat/opcount.hpp"
#include "smpphat/rng.hpp"
#include "smpphat/room.hpp"
#include "smpphat/stft.hpp"
#include "smpphat/tdoa.hpp"
#include "smpphat/vec3.hpp"
#include "smpphat/wav.hpp"
