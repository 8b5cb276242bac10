// Copyright 2026 The pst Authors
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

#pragma once

#include "pst/binomial.hpp"
#include "pst/bounds.hpp"
#include "pst/concat.hpp"
#include "pst/errors.hpp"
#include "pst/noise_model.hpp"
#include "pst/postsel/circuit.hpp"
#include "pst/postsel/frame.hpp"
#include "pst/postsel/netlist.hpp"
#include "pst/postsel/noise.hpp"
#include "pst/postsel/simulate.hpp"
#include "pst/postsel/tableau.hpp"
#include "pst/root_finding.hpp"
#include "pst/saw.hpp"
#include "pst/surface_threshold.hpp"
#include "pst/version.hpp"
