// Copyright 2026 The steenrod Authors.
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

#include "steenrod/arithmetic_linking.hpp"
#include "steenrod/cochain.hpp"
#include "steenrod/cohomology.hpp"
#include "steenrod/duality.hpp"
#include "steenrod/error.hpp"
#include "steenrod/lens.hpp"
#include "steenrod/matrix.hpp"
#include "steenrod/operations.hpp"
#include "steenrod/reduction.hpp"
#include "steenrod/ring.hpp"
#include "steenrod/simplicial_complex.hpp"
#include "steenrod/wu.hpp"
