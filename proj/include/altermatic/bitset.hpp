#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace altermatic {

// Fixed-size bit set with runtime width. Used for adjacency rows and edge-index sets.
class DynamicBitset {
public:
    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool intersects(const DynamicBitset& other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    // Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            auto w = words_[wi];
            while (w != 0) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DynamicBitsetHash {
    std::size_t operator()(const DynamicBitset& b) const noexcept
    {
        std::size_t h = b.size();
        for (auto w : b.words())
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace altermatic
