// SPDX-License-Identifier: Apache-2.0
//
// mixfield - interference analysis for mixed near-/far-field XL-array links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "mixfield/array_geometry.hpp"
#include "mixfield/config.hpp"
#include "mixfield/csv.hpp"
#include "mixfield/fresnel.hpp"
#include "mixfield/interference.hpp"
#include "mixfield/link_rate.hpp"
#include "mixfield/presets.hpp"
#include "mixfield/steering.hpp"
#include "mixfield/sweep.hpp"
