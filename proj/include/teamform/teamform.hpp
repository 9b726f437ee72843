// Copyright 2026 The Teamform Authors
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

// Umbrella header: capacitated team formation on social networks.

#ifndef TEAMFORM_TEAMFORM_HPP
#define TEAMFORM_TEAMFORM_HPP

#include "teamform/baseline.hpp"
#include "teamform/bench.hpp"
#include "teamform/costs.hpp"
#include "teamform/diameter_solver.hpp"
#include "teamform/feasibility.hpp"
#include "teamform/generator.hpp"
#include "teamform/graph.hpp"
#include "teamform/io.hpp"
#include "teamform/oracle.hpp"
#include "teamform/rng.hpp"
#include "teamform/steiner_solver.hpp"
#include "teamform/task.hpp"
#include "teamform/transforms.hpp"

#endif  // TEAMFORM_TEAMFORM_HPP
