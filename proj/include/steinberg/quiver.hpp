#pragma once

// The double quiver on the powerset hypercube: one "up" arrow I -> I+{i}
// for every i not in I and one "down" arrow I -> I-{i} for every i in I.
// Paths modulo the kernel ideal (non-geodesic paths, and differences of
// geodesics with equal endpoints) reduce to a single canonical geodesic.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "subsets.hpp"

namespace steinberg::quiver {

inline constexpr unsigned kMaxQuiverRank = 16;

enum class Direction { up, down };

struct Arrow {
    SubsetIndex source;
    unsigned coordinate = 0;

    Direction direction() const
    {
        return source.contains(coordinate) ? Direction::down : Direction::up;
    }
    SubsetIndex target() const
    {
        return SubsetIndex(source.bits() ^ (std::uint32_t{1} << coordinate), source.rank());
    }

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class HypercubeQuiver {
public:
    explicit HypercubeQuiver(unsigned rank) : rank_(rank)
    {
        if (rank > kMaxQuiverRank)
            throw resource_error("hypercube rank " + std::to_string(rank) + " exceeds " +
                                 std::to_string(kMaxQuiverRank));
    }

    unsigned rank() const { return rank_; }
    std::size_t vertex_count() const { return std::size_t{1} << rank_; }
    std::size_t arrow_count() const { return rank_ * vertex_count(); }

    std::vector<SubsetIndex> vertices() const { return all_subsets(rank_); }

    // Arrow number v*d + i leaves vertex v across coordinate i.
    Arrow arrow(std::size_t index) const
    {
        return Arrow{SubsetIndex(static_cast<std::uint32_t>(index / rank_), rank_),
                     static_cast<unsigned>(index % rank_)};
    }

    std::vector<Arrow> arrows() const
    {
        std::vector<Arrow> out;
        out.reserve(arrow_count());
        for (std::size_t a = 0; a < arrow_count(); ++a)
            out.push_back(arrow(a));
        return out;
    }

    std::vector<Arrow> arrows_from(const SubsetIndex& v) const
    {
        std::vector<Arrow> out;
        for (unsigned i = 0; i < rank_; ++i)
            out.push_back(Arrow{v, i});
        return out;
    }

private:
    unsigned rank_;
};

inline HypercubeQuiver build_hypercube(unsigned d) { return HypercubeQuiver(d); }

// A path stored as its source and the sequence of flipped coordinates;
// every such sequence is composable.
class QuiverPath {
public:
    explicit QuiverPath(SubsetIndex source) : source_(source), target_(source) {}

    QuiverPath(SubsetIndex source, const std::vector<unsigned>& flips) : QuiverPath(source)
    {
        for (unsigned c : flips)
            append(c);
    }

    static QuiverPath stationary(SubsetIndex v) { return QuiverPath(v); }

    void append(unsigned coordinate)
    {
        if (coordinate >= source_.rank())
            throw usage_error("coordinate " + std::to_string(coordinate) + " out of range");
        flips_.push_back(coordinate);
        target_ = Arrow{target_, coordinate}.target();
    }

    QuiverPath then(const QuiverPath& next) const
    {
        if (next.source_ != target_)
            throw usage_error("paths do not compose: " + target_.label() + " vs " +
                              next.source_.label());
        QuiverPath out = *this;
        for (unsigned c : next.flips_)
            out.append(c);
        return out;
    }

    const SubsetIndex& source() const { return source_; }
    const SubsetIndex& target() const { return target_; }
    std::size_t length() const { return flips_.size(); }
    const std::vector<unsigned>& flips() const { return flips_; }

    std::vector<Arrow> arrows() const
    {
        std::vector<Arrow> out;
        SubsetIndex at = source_;
        for (unsigned c : flips_) {
            out.push_back(Arrow{at, c});
            at = out.back().target();
        }
        return out;
    }

    friend bool operator==(const QuiverPath&, const QuiverPath&) = default;

private:
    SubsetIndex source_;
    SubsetIndex target_;
    std::vector<unsigned> flips_;
};

inline bool is_geodesic(const QuiverPath& p)
{
    return p.length() == delta(p.source(), p.target());
}

class NormalForm {
public:
    static NormalForm zero() { return NormalForm(); }
    static NormalForm geodesic(SubsetIndex s, SubsetIndex t)
    {
        detail::require_same_rank(s, t);
        NormalForm n;
        n.zero_ = false;
        n.source_ = s;
        n.target_ = t;
        return n;
    }

    bool is_zero() const { return zero_; }
    const SubsetIndex& source() const { return source_; }
    const SubsetIndex& target() const { return target_; }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    bool zero_ = true;
    SubsetIndex source_;
    SubsetIndex target_;
};

// Flips the coordinates of I xor J in ascending order.
inline QuiverPath canonical_geodesic(const SubsetIndex& from, const SubsetIndex& to)
{
    const SubsetIndex diff = symmetric_difference(from, to);
    QuiverPath p(from);
    for (unsigned i = 0; i < from.rank(); ++i)
        if (diff.contains(i))
            p.append(i);
    return p;
}

inline NormalForm normal_form(const QuiverPath& p)
{
    if (!is_geodesic(p))
        return NormalForm::zero();
    return NormalForm::geodesic(p.source(), p.target());
}

// All paths from `source` of length <= max_len, by length and then
// lexicographically by flipped coordinates.
inline std::vector<QuiverPath> enumerate_paths(const HypercubeQuiver& q, const SubsetIndex& source,
                                               std::size_t max_len)
{
    if (source.rank() != q.rank())
        throw usage_error("source rank does not match quiver rank");
    if (max_len > 2 * std::size_t{q.rank()} + 4)
        throw resource_error("path length " + std::to_string(max_len) + " exceeds 2d+4");
    std::vector<QuiverPath> out{QuiverPath(source)};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t k = layer_begin; k < layer_end; ++k) {
            for (unsigned c = 0; c < q.rank(); ++c) {
                QuiverPath next = out[k];
                next.append(c);
                out.push_back(std::move(next));
            }
        }
        layer_begin = layer_end;
    }
    return out;
}

struct KernelCheckResult {
    bool ok = true;
    unsigned rank = 0;
    std::size_t max_len = 0;
    // quotient_dims[I * 2^d + J]: dimension of the quotient summed over lengths.
    std::vector<std::size_t> quotient_dims;
    std::string certificate;

    std::size_t total_quotient_dim() const
    {
        std::size_t s = 0;
        for (auto n : quotient_dims)
            s += n;
        return s;
    }
};

namespace detail {

// One graded piece (source, target, length) of the free path space.
struct PathPiece {
    std::vector<QuiverPath> paths;
    std::map<std::vector<unsigned>, std::size_t> index_of;
    linalg::TrackedEchelon span;
    std::vector<linalg::SparseVec> generators;
};

inline std::string describe(const QuiverPath& p)
{
    std::ostringstream os;
    os << p.source().label() << " flips[";
    for (std::size_t k = 0; k < p.flips().size(); ++k)
        os << (k ? "," : "") << p.flips()[k] + 1;
    os << "]";
    return os.str();
}

} // namespace detail

// Verifies, per graded piece, that the stated generators of the kernel
// (non-geodesic paths; differences of geodesics with equal endpoints) span
// a two-sided ideal and that each (I, J) quotient is one-dimensional.
// Pairs with delta(I,J) > max_len have no path in range and expect 0.
inline KernelCheckResult kernel_ideal_closure_check(unsigned d, std::size_t max_len)
{
    if (d > 3)
        throw resource_error("kernel closure check supports d <= 3");
    if (max_len > d + 3)
        throw resource_error("kernel closure check supports max_len <= d + 3");

    const std::size_t nv = std::size_t{1} << d;
    const HypercubeQuiver q(d);
    const std::size_t top = max_len + 1;  // products of length-max_len generators land here

    // pieces[(len * nv + I) * nv + J]
    std::vector<detail::PathPiece> pieces((top + 1) * nv * nv);
    auto piece = [&](std::size_t len, const SubsetIndex& s, const SubsetIndex& t) -> detail::PathPiece& {
        return pieces[(len * nv + s.bits()) * nv + t.bits()];
    };

    for (const auto& v : q.vertices()) {
        for (auto& p : enumerate_paths(q, v, top)) {
            auto& pc = piece(p.length(), p.source(), p.target());
            pc.index_of.emplace(p.flips(), pc.paths.size());
            pc.paths.push_back(std::move(p));
        }
    }

    for (auto& pc : pieces) {
        std::size_t first_geodesic = pc.paths.size();
        for (std::size_t k = 0; k < pc.paths.size(); ++k) {
            if (!is_geodesic(pc.paths[k])) {
                pc.generators.push_back(linalg::unit_vector(k));
            } else if (first_geodesic == pc.paths.size()) {
                first_geodesic = k;
            } else {
                pc.generators.push_back(
                    linalg::axpy(linalg::unit_vector(k), Rational(-1), linalg::unit_vector(first_geodesic)));
            }
        }
        for (std::size_t g = 0; g < pc.generators.size(); ++g)
            pc.span.insert(pc.generators[g], g);
    }

    KernelCheckResult result;
    result.rank = d;
    result.max_len = max_len;
    result.quotient_dims.assign(nv * nv, 0);

    // Multiplies a combination of paths in one piece by an arrow on the
    // left (prepend) or right (append).
    auto multiply = [&](const detail::PathPiece& from, const linalg::SparseVec& v, const Arrow& a,
                        bool on_left, std::string& where) -> bool {
        const QuiverPath& sample = from.paths[v.front().index];
        const SubsetIndex s = on_left ? a.source : sample.source();
        const SubsetIndex t = on_left ? sample.target() : a.target();
        auto& dest = piece(sample.length() + 1, s, t);
        std::vector<linalg::Entry> terms;
        for (const auto& e : v) {
            const QuiverPath& p = from.paths[e.index];
            QuiverPath prod = on_left ? QuiverPath(a.source, {a.coordinate}).then(p)
                                      : p.then(QuiverPath(p.target(), {a.coordinate}));
            terms.push_back(linalg::Entry{dest.index_of.at(prod.flips()), e.value});
        }
        if (dest.span.contains(linalg::from_terms(terms)))
            return true;
        std::ostringstream os;
        os << (on_left ? "left" : "right") << " product with arrow " << a.source.label() << "->"
           << a.target().label() << " leaves the span; generator starts at " << detail::describe(sample);
        where = os.str();
        return false;
    };

    for (std::size_t len = 0; len <= max_len && result.ok; ++len) {
        for (const auto& s : q.vertices()) {
            for (const auto& t : q.vertices()) {
                const auto& pc = piece(len, s, t);
                for (const auto& g : pc.generators) {
                    for (unsigned c = 0; c < d && result.ok; ++c) {
                        // left factor: arrow ending at s, i.e. leaving s with flip c
                        const Arrow into{Arrow{s, c}.target(), c};
                        if (!multiply(pc, g, into, true, result.certificate))
                            result.ok = false;
                        else if (!multiply(pc, g, Arrow{t, c}, false, result.certificate))
                            result.ok = false;
                    }
                }
            }
        }
    }

    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const auto& s : q.vertices()) {
            for (const auto& t : q.vertices()) {
                const auto& pc = piece(len, s, t);
                result.quotient_dims[s.bits() * nv + t.bits()] += pc.paths.size() - pc.span.rank();
            }
        }
    }
    for (const auto& s : q.vertices()) {
        for (const auto& t : q.vertices()) {
            const std::size_t expected = delta(s, t) <= max_len ? 1 : 0;
            const std::size_t got = result.quotient_dims[s.bits() * nv + t.bits()];
            if (got != expected && result.ok) {
                result.ok = false;
                result.certificate = "quotient piece " + s.label() + "->" + t.label() + " has dimension " +
                                     std::to_string(got) + ", expected " + std::to_string(expected);
            }
        }
    }
    return result;
}

// Graphviz rendering: up-arrows solid, down-arrows dashed.
inline std::string to_dot(const HypercubeQuiver& q)
{
    std::ostringstream os;
    os << "digraph hypercube_d" << q.rank() << " {\n";
    for (const auto& v : q.vertices())
        os << "  v" << v.bits() << " [label=\"" << to_json(v).dump() << "\"];\n";
    for (const auto& a : q.arrows()) {
        os << "  v" << a.source.bits() << " -> v" << a.target().bits() << " [style="
           << (a.direction() == Direction::up ? "solid" : "dashed") << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace steinberg::quiver
