// Copyright 2026 The mwr Authors
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

#include "mwr/chordal.hpp"
#include "mwr/errors.hpp"
#include "mwr/flow.hpp"
#include "mwr/generators.hpp"
#include "mwr/graph.hpp"
#include "mwr/io.hpp"
#include "mwr/max_spanning.hpp"
#include "mwr/ratio_opt.hpp"
#include "mwr/rational.hpp"
#include "mwr/verify.hpp"
