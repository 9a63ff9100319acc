#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ctf {

using EdgeId = std::size_t;
using Vertex = std::size_t;

/// Largest number of edges any graph may carry; edge ids live in a 64-bit mask.
inline constexpr std::size_t kMaxEdges = 64;

/// A set of edge ids backed by a bitmask.
class EdgeSet {
public:
    constexpr EdgeSet() = default;
    constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

    static EdgeSet of(std::initializer_list<EdgeId> ids) {
        EdgeSet s;
        for (auto id : ids) s.insert(id);
        return s;
    }

    static constexpr EdgeSet first_n(std::size_t n) {
        return EdgeSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

    constexpr bool contains(EdgeId id) const { return id < 64 && ((bits_ >> id) & 1U) != 0; }

    void insert(EdgeId id) {
        if (id >= kMaxEdges) throw std::out_of_range("edge id exceeds 64");
        bits_ |= std::uint64_t{1} << id;
    }
    void erase(EdgeId id) {
        if (id < 64) bits_ &= ~(std::uint64_t{1} << id);
    }

    constexpr bool is_subset_of(EdgeSet other) const { return (bits_ & ~other.bits_) == 0; }

    std::vector<EdgeId> ids() const {
        std::vector<EdgeId> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<EdgeId>(std::countr_zero(b)));
        return out;
    }

    friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
    friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
    friend constexpr EdgeSet operator^(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ ^ b.bits_); }
    friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(EdgeSet, EdgeSet) = default;

private:
    std::uint64_t bits_ = 0;
};

} // namespace ctf
