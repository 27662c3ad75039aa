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

#include "mchroma/applications.hpp"
#include "mchroma/brute_force.hpp"
#include "mchroma/coloring.hpp"
#include "mchroma/edmonds.hpp"
#include "mchroma/element_set.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/generators.hpp"
#include "mchroma/instance_io.hpp"
#include "mchroma/intersection.hpp"
#include "mchroma/matroid.hpp"
#include "mchroma/matroid_ops.hpp"
