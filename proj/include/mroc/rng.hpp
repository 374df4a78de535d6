// Copyright 2026 The mroc Authors.
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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace mroc {

// Philox-4x32 with 10 rounds (Salmon et al., "Parallel random numbers: as
// easy as 1, 2, 3"). Pure function of (counter, key).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

// A counter-based random stream. The key is the seed; the upper half of the
// counter is the stream id and the lower half counts 128-bit blocks, so a
// (seed, stream id) pair names one reproducible sequence and distinct stream
// ids never overlap.
//
// A stream is a value: copying it replays the same draws from the copy point.
// Do not draw from one instance on several threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  // Independent child stream keyed by index; the parent is not advanced.
  RngStream substream(std::uint64_t index) const noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;
  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() noexcept;
  // Standard normal via Box-Muller.
  double normal() noexcept;

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int available_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// SplitMix64 finalizer, used to derive stream ids.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Element i is 1 with probability risks[i] (compared against a 32-bit
// uniform); throws kOutOfRangeRisk on bad input.
std::vector<std::uint8_t> bernoulli_draw(std::span<const double> risks, RngStream& rng);

// Same as above into a caller-owned buffer of equal length. No validation.
void bernoulli_draw_into(std::span<const double> risks, RngStream& rng,
                         std::span<std::uint8_t> out) noexcept;

}  // namespace mroc
