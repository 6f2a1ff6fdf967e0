// Copyright 2026 The qdiff Authors
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

#include "qdiff/types.hpp"

namespace qdiff {

/// exp(M) by scaling and squaring with a diagonal Pade approximant
/// (orders 3, 5, 7, 9, 13 selected by the 1-norm).
///
/// Throws Error(kOverflow) when the input is non-finite or the required
/// number of squarings exceeds what double precision can represent.
Matrix matrix_exponential(const Matrix& m);

}  // namespace qdiff
