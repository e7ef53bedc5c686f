// Copyright 2026 The tricount Authors
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

#include "tricount/bench.hpp"
#include "tricount/csr.hpp"
#include "tricount/error.hpp"
#include "tricount/graph_gen.hpp"
#include "tricount/graph_io.hpp"
#include "tricount/model_fit.hpp"
#include "tricount/report.hpp"
#include "tricount/tri_algos.hpp"
