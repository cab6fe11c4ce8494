// Copyright 2026 The Privest Authors
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

#ifndef PRIVEST_RNG_HPP_
#define PRIVEST_RNG_HPP_

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace privest {

// Scrambles a 64-bit value (splitmix64 finalizer).  Used to derive
// independent per-trial streams from a master seed.
std::uint64_t SplitMix64(std::uint64_t x);

// Seeded random source.  All randomized operations in this library take an
// explicit Rng so that identical seeds give bit-identical results; there is
// no hidden global state.
//
// Gaussian variates are produced by a cache-free Box-Muller transform rather
// than std::normal_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(SplitMix64(seed)) {}

  // Derives the stream for one trial of a multi-trial run.  The mapping
  // depends only on (master_seed, stream_index), never on execution order,
  // so trial-level parallelism cannot change results.
  static Rng ForStream(std::uint64_t master_seed, std::uint64_t stream_index);

  // Uniform in the open interval (0, 1).
  double Uniform();

  // Standard normal.
  double Gaussian();

  Eigen::VectorXd GaussianVector(int d);

  std::uint64_t NextRaw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace privest

#endif  // PRIVEST_RNG_HPP_
