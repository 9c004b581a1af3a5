/*
 * Copyright 2026 The arck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Fixed-width bitsets used as memo keys by the search kernels.

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "arck/error.hpp"

namespace arck::detail {

template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    bool any() const
    {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool intersects(const Bits& o) const
    {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    Bits without(const Bits& o) const
    {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    Bits operator&(const Bits& o) const
    {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    Bits operator|(const Bits& o) const
    {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    int count() const
    {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    /// Calls f(i) for every set bit in ascending order.
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < W; ++k) {
            std::uint64_t x = w[k];
            while (x) {
                int b = std::countr_zero(x);
                f(k * 64 + static_cast<std::size_t>(b));
                x &= x - 1;
            }
        }
    }

    bool operator==(const Bits&) const = default;
};

/// Memo key: a bitset plus one byte of side information (usually the mover).
template <std::size_t W>
struct Key {
    Bits<W> bits;
    std::uint8_t side = 0;
    bool operator==(const Key&) const = default;
};

template <std::size_t W>
struct KeyHash {
    std::size_t operator()(const Key<W>& k) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.side;
        for (auto x : k.bits.w) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

/// Memo table split into independently locked shards for the parallel kernels.
template <std::size_t W, class V>
class ShardedMemo {
public:
    static constexpr std::size_t kShards = 64;

    bool find(const Key<W>& k, V& out)
    {
        auto& s = shard(k);
        std::lock_guard lock(s.mu);
        auto it = s.map.find(k);
        if (it == s.map.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const Key<W>& k, V v)
    {
        auto& s = shard(k);
        std::lock_guard lock(s.mu);
        s.map.emplace(k, v);
    }

private:
    struct Shard {
        std::mutex mu;
        std::unordered_map<Key<W>, V, KeyHash<W>> map;
    };
    Shard& shard(const Key<W>& k) { return shards_[KeyHash<W>{}(k) % kShards]; }
    std::array<Shard, kShards> shards_;
};

/// Picks the narrowest supported width for n bits and calls f.template operator()<W>().
template <class F>
decltype(auto) dispatch_width(std::size_t n, F&& f)
{
    if (n <= 64) return f.template operator()<1>();
    if (n <= 128) return f.template operator()<2>();
    if (n <= 256) return f.template operator()<4>();
    if (n <= 512) return f.template operator()<8>();
    throw Error(ErrorCode::BudgetExceeded, "instance has " + std::to_string(n) + " edges; limit 512");
}

} // namespace arck::detail
