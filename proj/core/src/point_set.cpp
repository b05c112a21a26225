#include "arclab/point_set.hpp"

#include <string>

#include "arclab/error.hpp"

namespace arclab {

PointSet::PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

PointSet PointSet::from_ids(std::size_t universe, std::span<const std::uint32_t> ids)
{
    PointSet out(universe);
    for (const std::uint32_t id : ids) {
        if (id >= universe) {
            throw PreconditionError("point id " + std::to_string(id) + " outside universe of " +
                                    std::to_string(universe));
        }
        out.insert(id);
    }
    return out;
}

PointSet PointSet::full(std::size_t universe)
{
    PointSet out(universe);
    for (auto& w : out.words_) {
        w = ~std::uint64_t{0};
    }
    if (universe % 64 != 0) {
        out.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    out.size_ = universe;
    return out;
}

bool PointSet::insert(std::uint32_t id)
{
    if (id >= universe_) {
        throw PreconditionError("point id " + std::to_string(id) + " outside universe of " +
                                std::to_string(universe_));
    }
    std::uint64_t& w = words_[id >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (id & 63u);
    if (w & bit) {
        return false;
    }
    w |= bit;
    ++size_;
    return true;
}

bool PointSet::erase(std::uint32_t id)
{
    if (id >= universe_) {
        return false;
    }
    std::uint64_t& w = words_[id >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (id & 63u);
    if (!(w & bit)) {
        return false;
    }
    w &= ~bit;
    --size_;
    return true;
}

void PointSet::clear()
{
    for (auto& w : words_) {
        w = 0;
    }
    size_ = 0;
}

std::vector<std::uint32_t> PointSet::ids() const
{
    std::vector<std::uint32_t> out;
    out.reserve(size_);
    for_each([&](std::uint32_t id) { out.push_back(id); });
    return out;
}

void PointSet::check_compatible(const PointSet& other) const
{
    if (universe_ != other.universe_) {
        throw PreconditionError("point sets over different universes (" + std::to_string(universe_) + " vs " +
                                std::to_string(other.universe_) + ")");
    }
}

void PointSet::recount()
{
    std::size_t n = 0;
    for (const auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    size_ = n;
}

bool PointSet::is_subset_of(const PointSet& other) const
{
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) {
            return false;
        }
    }
    return true;
}

std::size_t PointSet::intersection_size(const PointSet& other) const
{
    check_compatible(other);
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return n;
}

PointSet& PointSet::operator|=(const PointSet& other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    recount();
    return *this;
}

PointSet& PointSet::operator&=(const PointSet& other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    recount();
    return *this;
}

PointSet& PointSet::operator-=(const PointSet& other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    recount();
    return *this;
}

}  // namespace arclab
