// Copyright 2026 The Authors.
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


#pragma once

#include "apxsub/subset.hpp"
#include "apxsub/random.hpp"
#include "apxsub/set_function.hpp"
#include "apxsub/graph.hpp"
#include "apxsub/noise.hpp"
#include "apxsub/parallel.hpp"
#include "apxsub/constraints.hpp"
#include "apxsub/filter.hpp"
#include "apxsub/lowerbounds.hpp"
#include "apxsub/simplex.hpp"
#include "apxsub/distance.hpp"
#include "apxsub/optimize.hpp"
#include "apxsub/graphs.hpp"
#include "apxsub/harness.hpp"
