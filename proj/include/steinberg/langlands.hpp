#pragma once

// Label-level dictionary between subsets I of simple roots, torus orbits
// C_I on the affine space of rank d, and the representation-side names
// attached to them. Nothing here is analytic; labels are opaque strings.

#include <string>
#include <vector>

#include "errors.hpp"
#include "subsets.hpp"

namespace steinberg::langlands {

inline constexpr unsigned kMaxPacketRank = 10;

enum class Coordinate { zero, torus };

struct OrbitDescriptor {
    SubsetIndex index;
    std::vector<Coordinate> coords;  // coords[i] == zero iff bit i of index is set

    unsigned rank() const { return static_cast<unsigned>(coords.size()); }

    unsigned dimension() const
    {
        unsigned n = 0;
        for (auto c : coords)
            n += c == Coordinate::torus;
        return n;
    }

    // One character per coordinate: '0' for a fixed zero, '*' for a torus.
    std::string pattern() const
    {
        std::string s;
        for (auto c : coords)
            s += c == Coordinate::zero ? '0' : '*';
        return s;
    }
};

struct ParameterPoint {
    unsigned rank = 0;
    std::vector<int> x;  // x[i] in {0, 1}
};

inline OrbitDescriptor orbit_of(const SubsetIndex& i)
{
    OrbitDescriptor o{i, {}};
    for (unsigned c = 0; c < i.rank(); ++c)
        o.coords.push_back(i.contains(c) ? Coordinate::zero : Coordinate::torus);
    return o;
}

// C_J lies in the closure of C_I.
inline bool closure_leq(const SubsetIndex& i, const SubsetIndex& j) { return is_subset_of(i, j); }

inline ParameterPoint parameter_point(const SubsetIndex& i)
{
    ParameterPoint p{i.rank(), {}};
    for (unsigned c = 0; c < i.rank(); ++c)
        p.x.push_back(i.contains(c) ? 0 : 1);
    return p;
}

inline bool lies_on(const ParameterPoint& p, const OrbitDescriptor& o)
{
    if (p.rank != o.rank())
        return false;
    for (unsigned c = 0; c < p.rank; ++c)
        if ((p.x[c] == 0) != (o.coords[c] == Coordinate::zero))
            return false;
    return true;
}

inline SubsetIndex az_dual(const SubsetIndex& i) { return complement(i); }

inline std::string steinberg_label(const SubsetIndex& i)
{
    if (i == SubsetIndex::empty(i.rank()))
        return "St_G";
    if (i == SubsetIndex::full(i.rank()))
        return "triv_G";
    return "sigma_" + i.label();
}

struct PacketEntry {
    SubsetIndex index;
    std::string steinberg;
    SubsetIndex az_dual;
    std::string standard;     // standard module induced from the Levi of I^c
    OrbitDescriptor orbit;
    std::string ic;
    std::string projective;
    std::string enhancement;  // always the trivial character
    std::vector<int> exponents_doubled;
    std::string arthur;       // empty unless I is empty or full
};

// 2 * (d/2, d/2 - 1, ..., -d/2).
inline std::vector<int> infinitesimal_exponents_doubled(unsigned d)
{
    std::vector<int> out;
    for (int e = static_cast<int>(d); e >= -static_cast<int>(d); e -= 2)
        out.push_back(e);
    return out;
}

inline PacketEntry packet_entry(const SubsetIndex& i)
{
    const unsigned d = i.rank();
    PacketEntry e{i,
                  steinberg_label(i),
                  az_dual(i),
                  "Delta(" + steinberg_label(i) + ")=Ind_M" + az_dual(i).label(),
                  orbit_of(i),
                  "IC_" + i.label(),
                  "P_" + i.label(),
                  "trivial",
                  infinitesimal_exponents_doubled(d),
                  {}};
    // The two extremes coincide when d == 0; the Steinberg label wins.
    if (i == SubsetIndex::empty(d))
        e.arthur = "Sym^" + std::to_string(d) + "(x)";
    else if (i == SubsetIndex::full(d))
        e.arthur = "Sym^" + std::to_string(d) + "(y)";
    return e;
}

// One entry per subset, in bitmask order.
inline std::vector<PacketEntry> packet_report(unsigned d)
{
    if (d > kMaxPacketRank)
        throw resource_error("packet report is limited to d <= " + std::to_string(kMaxPacketRank));
    std::vector<PacketEntry> out;
    for (const auto& i : all_subsets(d))
        out.push_back(packet_entry(i));
    return out;
}

} // namespace steinberg::langlands
