// Copyright 2026 The svq Authors
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

#include "svq/config.hpp"
#include "svq/dynamics.hpp"
#include "svq/error.hpp"
#include "svq/formula.hpp"
#include "svq/hilbert.hpp"
#include "svq/lattice.hpp"
#include "svq/ledger.hpp"
#include "svq/random.hpp"
#include "svq/scenario/ast.hpp"
#include "svq/scenario/parser.hpp"
#include "svq/scenario/printer.hpp"
#include "svq/scenario/report.hpp"
#include "svq/scenario/runner.hpp"
#include "svq/truth.hpp"
