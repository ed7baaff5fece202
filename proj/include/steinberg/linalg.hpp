#pragma once

// Exact sparse linear algebra over the rationals.
//
// Vectors are sorted (index, coefficient) lists with no stored zeros.
// Elimination always pivots on the smallest live index and processes
// input in the order given, so every basis produced here is a pure
// function of the input order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace steinberg::linalg {

struct Entry {
    std::size_t index;
    Rational value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

using SparseVec = std::vector<Entry>;

inline SparseVec unit_vector(std::size_t index, Rational value = Rational(1))
{
    return SparseVec{Entry{index, std::move(value)}};
}

inline Rational coefficient(const SparseVec& v, std::size_t index)
{
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const Entry& e, std::size_t i) { return e.index < i; });
    if (it != v.end() && it->index == index)
        return it->value;
    return Rational(0);
}

// a + scale * b
inline SparseVec axpy(const SparseVec& a, const Rational& scale, const SparseVec& b)
{
    SparseVec out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->index < ib->index)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->index < ia->index) {
            if (scale != 0)
                out.push_back(Entry{ib->index, scale * ib->value});
            ++ib;
        } else {
            Rational v = ia->value + scale * ib->value;
            if (v != 0)
                out.push_back(Entry{ia->index, std::move(v)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

inline SparseVec scaled(SparseVec v, const Rational& s)
{
    if (s == 0)
        return {};
    for (auto& e : v)
        e.value *= s;
    return v;
}

// Builds a canonical sparse vector from unsorted, possibly repeated terms.
inline SparseVec from_terms(const std::vector<Entry>& terms)
{
    std::map<std::size_t, Rational> acc;
    for (const auto& t : terms)
        acc[t.index] += t.value;
    SparseVec out;
    for (auto& [i, v] : acc)
        if (v != 0)
            out.push_back(Entry{i, v});
    return out;
}

// Column-major sparse matrix: columns[j] is the image of the j-th basis vector.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseVec> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    SparseVec apply(const SparseVec& v) const
    {
        SparseVec out;
        for (const auto& e : v)
            out = axpy(out, e.value, columns.at(e.index));
        return out;
    }

    // (*this) after `first`, i.e. this * first.
    SparseMatrix after(const SparseMatrix& first) const
    {
        SparseMatrix out(rows, first.cols);
        for (std::size_t j = 0; j < first.cols; ++j)
            out.columns[j] = apply(first.columns[j]);
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(columns.begin(), columns.end(),
                           [](const SparseVec& c) { return c.empty(); });
    }
};

// Incremental row echelon form that remembers how each stored row was
// built from the inserted vectors. Serves rank, span membership, solving
// and kernels.
class TrackedEchelon {
public:
    struct Row {
        SparseVec vec;
        SparseVec combination;  // over insertion ids
    };

    // Reduces v (tracked by `combination`) against the stored rows.
    // Invariant throughout: v == original + sum(combination[j] * inserted_j).
    void reduce(SparseVec& v, SparseVec& combination) const
    {
        std::size_t floor = 0;
        for (;;) {
            auto it = std::find_if(v.begin(), v.end(), [&](const Entry& e) {
                return e.index >= floor && rows_.count(e.index) > 0;
            });
            if (it == v.end())
                return;
            const std::size_t pivot = it->index;
            const Rational c = it->value;
            const Row& row = rows_.at(pivot);
            v = axpy(v, -c, row.vec);
            combination = axpy(combination, -c, row.combination);
            floor = pivot + 1;
        }
    }

    // Inserts v under `id`. Returns std::nullopt if v was independent,
    // otherwise the dependency: a combination over ids (with coefficient 1
    // at `id`) that sums to zero.
    std::optional<SparseVec> insert(SparseVec v, std::size_t id)
    {
        SparseVec comb = unit_vector(id);
        reduce(v, comb);
        if (v.empty())
            return comb;
        const Rational inv = Rational(1) / v.front().value;
        const std::size_t pivot = v.front().index;
        rows_.emplace(pivot, Row{scaled(std::move(v), inv), scaled(std::move(comb), inv)});
        return std::nullopt;
    }

    bool contains(SparseVec v) const
    {
        SparseVec comb;
        reduce(v, comb);
        return v.empty();
    }

    // Coefficients c over insertion ids with target == sum c_j inserted_j.
    std::optional<SparseVec> express(SparseVec target) const
    {
        SparseVec comb;
        reduce(target, comb);
        if (!target.empty())
            return std::nullopt;
        return scaled(std::move(comb), Rational(-1));
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::map<std::size_t, Row> rows_;
};

inline std::size_t rank(const std::vector<SparseVec>& vectors)
{
    TrackedEchelon e;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        e.insert(vectors[i], i);
    return e.rank();
}

inline std::size_t rank(const SparseMatrix& m) { return rank(m.columns); }

// Kernel basis of the column map. Each basis vector has coefficient 1 at
// exactly one non-pivot column (its own) and 0 at every other non-pivot
// column, so kernel coordinates can be read off those columns.
struct Kernel {
    std::vector<std::size_t> free_columns;
    std::vector<SparseVec> basis;
};

inline Kernel kernel(const std::vector<SparseVec>& columns)
{
    Kernel out;
    TrackedEchelon e;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (auto dep = e.insert(columns[j], j)) {
            out.free_columns.push_back(j);
            out.basis.push_back(std::move(*dep));
        }
    }
    return out;
}

} // namespace steinberg::linalg
