// Copyright 2026 The lifeframe Authors
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

#include "lifeframe/catalog.hpp"
#include "lifeframe/chess_oracle.hpp"
#include "lifeframe/error.hpp"
#include "lifeframe/frame_kinematics.hpp"
#include "lifeframe/life_engine.hpp"
#include "lifeframe/pattern_io.hpp"
#include "lifeframe/rational.hpp"
#include "lifeframe/ship_detector.hpp"
