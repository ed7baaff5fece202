#pragma once

// Subsets of the d simple roots as bitmasks. Root alpha_{i+1} is bit i;
// the ordering is global and ascending.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace steinberg {

inline constexpr unsigned kMaxSubsetRank = 31;

class SubsetIndex {
public:
    constexpr SubsetIndex() = default;

    SubsetIndex(std::uint32_t bits, unsigned rank) : bits_(bits), rank_(rank)
    {
        if (rank > kMaxSubsetRank)
            throw resource_error("subset rank " + std::to_string(rank) + " exceeds " +
                                 std::to_string(kMaxSubsetRank));
        if (bits >= (std::uint32_t{1} << rank))
            throw usage_error("subset bits " + std::to_string(bits) + " out of range for rank " +
                              std::to_string(rank));
    }

    static SubsetIndex empty(unsigned rank) { return SubsetIndex(0, rank); }
    static SubsetIndex full(unsigned rank) { return SubsetIndex(full_mask(rank), rank); }

    // From 1-based root indices, e.g. {1, 3}.
    static SubsetIndex from_roots(const std::vector<unsigned>& roots, unsigned rank)
    {
        std::uint32_t bits = 0;
        for (unsigned r : roots) {
            if (r == 0 || r > rank)
                throw usage_error("root index " + std::to_string(r) + " out of range 1.." +
                                  std::to_string(rank));
            bits |= std::uint32_t{1} << (r - 1);
        }
        return SubsetIndex(bits, rank);
    }

    std::uint32_t bits() const { return bits_; }
    unsigned rank() const { return rank_; }
    unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
    bool contains(unsigned coordinate) const { return (bits_ >> coordinate) & 1u; }

    std::vector<unsigned> roots() const
    {
        std::vector<unsigned> out;
        for (unsigned i = 0; i < rank_; ++i)
            if (contains(i))
                out.push_back(i + 1);
        return out;
    }

    // "{1,3}", "{}" for the empty set.
    std::string label() const
    {
        std::string s = "{";
        bool first = true;
        for (unsigned r : roots()) {
            if (!first)
                s += ",";
            s += std::to_string(r);
            first = false;
        }
        return s + "}";
    }

    static std::uint32_t full_mask(unsigned rank)
    {
        return rank == 0 ? 0u : (~std::uint32_t{0} >> (32 - rank));
    }

    friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
    friend auto operator<=>(const SubsetIndex&, const SubsetIndex&) = default;

private:
    std::uint32_t bits_ = 0;
    unsigned rank_ = 0;
};

namespace detail {
inline void require_same_rank(const SubsetIndex& a, const SubsetIndex& b)
{
    if (a.rank() != b.rank())
        throw usage_error("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                          std::to_string(b.rank()));
}
} // namespace detail

inline SubsetIndex symmetric_difference(const SubsetIndex& a, const SubsetIndex& b)
{
    detail::require_same_rank(a, b);
    return SubsetIndex(a.bits() ^ b.bits(), a.rank());
}

// Hamming distance |a xor b|.
inline unsigned delta(const SubsetIndex& a, const SubsetIndex& b)
{
    return symmetric_difference(a, b).size();
}

inline SubsetIndex complement(const SubsetIndex& a)
{
    return SubsetIndex(~a.bits() & SubsetIndex::full_mask(a.rank()), a.rank());
}

inline bool is_subset_of(const SubsetIndex& a, const SubsetIndex& b)
{
    detail::require_same_rank(a, b);
    return (a.bits() & ~b.bits()) == 0;
}

// J lies on a hypercube geodesic from I to K.
inline bool is_geodesic_triple(const SubsetIndex& i, const SubsetIndex& j, const SubsetIndex& k)
{
    return delta(i, j) + delta(j, k) == delta(i, k);
}

// delta(I,K)! : one geodesic per ordering of the flipped coordinates.
inline std::uint64_t count_geodesics(const SubsetIndex& i, const SubsetIndex& k)
{
    std::uint64_t n = 1;
    for (unsigned m = 2; m <= delta(i, k); ++m)
        n *= m;
    return n;
}

// All 2^rank subsets in mask order.
inline std::vector<SubsetIndex> all_subsets(unsigned rank)
{
    std::vector<SubsetIndex> out;
    out.reserve(std::size_t{1} << rank);
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << rank); ++b)
        out.emplace_back(b, rank);
    return out;
}

// JSON form: sorted array of 1-based root indices.
inline nlohmann::json to_json(const SubsetIndex& s) { return nlohmann::json(s.roots()); }

inline SubsetIndex subset_from_json(const nlohmann::json& j, unsigned rank)
{
    if (!j.is_array())
        throw usage_error("subset must be a JSON array");
    std::vector<unsigned> roots;
    for (const auto& r : j) {
        if (!r.is_number_unsigned())
            throw usage_error("subset entries must be positive integers");
        roots.push_back(r.get<unsigned>());
    }
    return SubsetIndex::from_roots(roots, rank);
}

} // namespace steinberg
