#ifndef IRRTOP_POINT_SET_HPP
#define IRRTOP_POINT_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace irrtop {

/// Maximum carrier size supported by the mask representation.
inline constexpr unsigned kMaxPoints = 16;

/// A subset of the carrier of a fixed finite space, as a membership mask.
/// A PointSet is always interpreted relative to exactly one space's carrier;
/// the carrier itself is not stored here.
struct PointSet {
    std::uint32_t bits = 0;

    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint32_t mask) : bits(mask) {}

    static constexpr PointSet empty_set() { return PointSet{0}; }
    static constexpr PointSet singleton(unsigned i) { return PointSet{1u << i}; }
    static constexpr PointSet full(unsigned n) {
        return PointSet{n >= 32 ? ~0u : (1u << n) - 1u};
    }

    constexpr bool contains(unsigned i) const { return (bits >> i) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr unsigned count() const { return static_cast<unsigned>(std::popcount(bits)); }

    constexpr bool subset_of(PointSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits & o.bits) != 0; }

    constexpr PointSet with(unsigned i) const { return PointSet{bits | (1u << i)}; }
    constexpr PointSet without(unsigned i) const { return PointSet{bits & ~(1u << i)}; }

    friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet{a.bits & b.bits}; }
    friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet{a.bits | b.bits}; }
    /// Relative complement a \ b.
    friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet{a.bits & ~b.bits}; }
    friend constexpr bool operator==(PointSet a, PointSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(PointSet a, PointSet b) { return a.bits != b.bits; }
    friend constexpr bool operator<(PointSet a, PointSet b) { return a.bits < b.bits; }

    std::vector<unsigned> members(unsigned n) const {
        std::vector<unsigned> out;
        for (unsigned i = 0; i < n; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }
};

/// Complement within an n-point carrier.
constexpr PointSet complement(PointSet a, unsigned n) { return PointSet::full(n) - a; }

} // namespace irrtop

#endif
