// Copyright 2026 The gamble Authors
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

#include "gamble/bookmaker.hpp"
#include "gamble/duel.hpp"
#include "gamble/error_model.hpp"
#include "gamble/extreme_value.hpp"
#include "gamble/gentlemans_bet.hpp"
#include "gamble/kelly.hpp"
#include "gamble/mc.hpp"
#include "gamble/nature.hpp"
#include "gamble/poisson_process.hpp"
#include "gamble/quadrature.hpp"
#include "gamble/rng.hpp"
#include "gamble/skill_game.hpp"
#include "gamble/special.hpp"
#include "gamble/tournament.hpp"
#include "gamble/version.hpp"
