// Copyright 2026 The esising Authors.
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

#include "esising/bench.hpp"
#include "esising/error.hpp"
#include "esising/io.hpp"
#include "esising/model.hpp"
#include "esising/pipeline.hpp"
#include "esising/quantizer.hpp"
#include "esising/rng.hpp"
#include "esising/solvers.hpp"
#include "esising/suite.hpp"
#include "esising/synthetic.hpp"
