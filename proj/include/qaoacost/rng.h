// Copyright 2026 The qaoacost Authors
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

#ifndef QAOACOST_RNG_H
#define QAOACOST_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qaoacost {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent stream seeds so that a
// stream is a pure function of its coordinates, not of execution order.
std::uint64_t mix64(std::uint64_t x);

// Seed for the stream addressed by (master, coordinates...).
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> coords);

inline Rng make_rng(std::uint64_t master, std::initializer_list<std::uint64_t> coords) {
    return Rng(derive_seed(master, coords));
}

}  // namespace qaoacost

#endif  // QAOACOST_RNG_H
