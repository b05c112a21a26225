#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace arclab {

// Dense bitset over the point ids of a plane, with a cached cardinality.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t universe);

    static PointSet from_ids(std::size_t universe, std::span<const std::uint32_t> ids);
    static PointSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool contains(std::uint32_t id) const noexcept
    {
        return id < universe_ && ((words_[id >> 6] >> (id & 63u)) & 1u) != 0;
    }
    // Both return whether the set changed.
    bool insert(std::uint32_t id);
    bool erase(std::uint32_t id);
    void clear();

    std::vector<std::uint32_t> ids() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const PointSet& other) const;
    std::size_t intersection_size(const PointSet& other) const;

    PointSet& operator|=(const PointSet& other);
    PointSet& operator&=(const PointSet& other);
    PointSet& operator-=(const PointSet& other);

    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

    friend bool operator==(const PointSet& a, const PointSet& b)
    {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    void check_compatible(const PointSet& other) const;
    void recount();

    std::size_t universe_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace arclab
