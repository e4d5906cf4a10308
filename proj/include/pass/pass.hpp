// SPDX-License-Identifier: Apache-2.0
//
// pass-ofdm: frequency-selective link simulator for pinching-antenna systems
// Copyright (C) 2026 The pass-ofdm authors
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


#ifndef PASS_PASS_HPP
#define PASS_PASS_HPP

#include "pass/types.hpp"
#include "pass/waveguide.hpp"
#include "pass/coupling.hpp"
#include "pass/radiation.hpp"
#include "pass/placement.hpp"
#include "pass/link.hpp"
#include "pass/phase_analysis.hpp"

#endif
