// SPDX-License-Identifier: Apache-2.0
//
// umisim - sub-THz urban microcell coverage simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <random>

namespace umisim
{

/// What a random substream is used for. Values are part of the seed
/// derivation and must stay stable across releases.
enum class StreamPurpose : std::uint32_t
{
    UePosition = 1,
    LosState = 2,
    ShadowFading = 3,
    UlScheduling = 4,
};

/// Derives independent generators from a master seed. The generator for a
/// given (drop, ue, bs, purpose) tuple depends on nothing else, so the order
/// in which links are evaluated (or the number of threads) never changes a
/// draw.
class RngPolicy
{
  public:
    explicit RngPolicy(std::uint64_t master_seed) : master_seed_(master_seed) {}

    std::uint64_t master_seed() const { return master_seed_; }

    std::mt19937_64 stream(std::uint64_t drop, std::uint64_t ue, std::uint64_t bs, StreamPurpose purpose) const;

  private:
    std::uint64_t master_seed_;
};

} // namespace umisim
