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

#include "umisim/rng.hpp"

#include <array>

namespace umisim
{

namespace
{
std::uint32_t lo(std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); }
std::uint32_t hi(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }
} // namespace

std::mt19937_64 RngPolicy::stream(std::uint64_t drop, std::uint64_t ue, std::uint64_t bs, StreamPurpose purpose) const
{
    const std::array<std::uint32_t, 9> words{
        lo(master_seed_), hi(master_seed_), lo(drop), hi(drop), lo(ue), hi(ue), lo(bs), hi(bs),
        static_cast<std::uint32_t>(purpose)};
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

} // namespace umisim
