// Copyright 2026 The Symprot Authors
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

#include <vector>

#include "symprot/models.hpp"

namespace symprot::detail {

/// One tensor factor of a piece: its global bits (lowest first) and matrix.
struct KronFactor {
    std::vector<unsigned> bits;
    Matrix op;
};

/// Piece for kron(factors[0], factors[1], ...), first factor most significant.
LocalPiece make_piece(const std::vector<KronFactor> &factors, double coefficient);

void classify_piece(LocalPiece &piece);

}  // namespace symprot::detail
