#pragma once

// Finite-dimensional graded associative algebras given by a basis and a
// sparse table of structure constants over the rationals, together with
// the three constructions that realise the Ext-algebra of generalised
// Steinberg representations, the hypercube path algebra modulo its kernel
// ideal, and the endomorphism algebra of the projectives P_I.
//
// Conventions: a basis element f runs from source(f) to target(f), and
// the product g∘f (f first, then g) is defined only when
// target(f) == source(g); the result runs from source(f) to target(g).

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "quiver.hpp"
#include "rational.hpp"
#include "subsets.hpp"

namespace steinberg {

using BasisId = std::size_t;
using VertexId = std::size_t;

// Linear combination of basis elements, indexed by BasisId.
using LinComb = linalg::SparseVec;

struct BasisElement {
    VertexId source = 0;
    VertexId target = 0;
    unsigned degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

inline constexpr unsigned kMaxAlgebraRank = 8;

class StructureAlgebra {
public:
    // Validates the typing, grading and idempotent invariants; throws
    // usage_error on the first violation. Associativity is checked
    // separately (see check_associativity_*), it is too costly to run here.
    StructureAlgebra(std::vector<std::string> vertex_labels, std::vector<BasisElement> basis,
                     std::unordered_map<std::uint64_t, LinComb> products,
                     std::optional<unsigned> subset_rank = std::nullopt)
        : vertex_labels_(std::move(vertex_labels)),
          basis_(std::move(basis)),
          products_(std::move(products)),
          subset_rank_(subset_rank)
    {
        validate();
    }

    std::size_t dimension() const { return basis_.size(); }
    std::size_t vertex_count() const { return vertex_labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& element(BasisId id) const { return basis_.at(id); }
    unsigned grading_max() const { return grading_max_; }

    // Set when vertex v stands for the subset with bitmask v.
    const std::optional<unsigned>& subset_rank() const { return subset_rank_; }
    SubsetIndex vertex_subset(VertexId v) const
    {
        if (!subset_rank_)
            throw usage_error("algebra vertices are not labelled by subsets");
        return SubsetIndex(static_cast<std::uint32_t>(v), *subset_rank_);
    }

    BasisId idempotent(VertexId v) const { return idempotents_.at(v); }
    const std::vector<BasisId>& elements_from(VertexId v) const { return from_.at(v); }
    const std::vector<BasisId>& elements_to(VertexId v) const { return to_.at(v); }

    // Unique basis element between two vertices, if there is exactly one.
    std::optional<BasisId> element_between(VertexId s, VertexId t) const
    {
        std::optional<BasisId> found;
        for (BasisId b : from_.at(s)) {
            if (basis_[b].target == t) {
                if (found)
                    return std::nullopt;
                found = b;
            }
        }
        return found;
    }

    // g∘f on basis elements; empty when zero.
    const LinComb& product(BasisId g, BasisId f) const
    {
        static const LinComb zero;
        auto it = products_.find(key(g, f));
        return it == products_.end() ? zero : it->second;
    }

    LinComb multiply(const LinComb& g, const LinComb& f) const
    {
        LinComb out;
        for (const auto& eg : g) {
            for (const auto& ef : f) {
                const LinComb& p = product(eg.index, ef.index);
                if (!p.empty())
                    out = linalg::axpy(out, eg.value * ef.value, p);
            }
        }
        return out;
    }

    // Stored nonzero products as (g, f) -> g∘f, in (g, f) order.
    std::vector<std::pair<std::pair<BasisId, BasisId>, const LinComb*>> sorted_products() const
    {
        std::vector<std::pair<std::pair<BasisId, BasisId>, const LinComb*>> out;
        out.reserve(products_.size());
        for (const auto& [k, v] : products_)
            out.push_back({{k / dimension(), k % dimension()}, &v});
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    std::size_t stored_product_count() const { return products_.size(); }

    std::uint64_t key(BasisId g, BasisId f) const
    {
        return static_cast<std::uint64_t>(g) * basis_.size() + f;
    }

private:
    void validate()
    {
        const std::size_t nv = vertex_labels_.size();
        if (subset_rank_ && nv != (std::size_t{1} << *subset_rank_))
            throw usage_error("subset-labelled algebra needs 2^rank vertices");
        idempotents_.assign(nv, basis_.size());
        from_.assign(nv, {});
        to_.assign(nv, {});
        for (BasisId b = 0; b < basis_.size(); ++b) {
            const auto& e = basis_[b];
            if (e.source >= nv || e.target >= nv)
                throw usage_error("basis element " + std::to_string(b) + " has unknown vertex");
            from_[e.source].push_back(b);
            to_[e.target].push_back(b);
            grading_max_ = std::max(grading_max_, e.degree);
            if (e.degree == 0) {
                if (e.source != e.target || idempotents_[e.source] != basis_.size())
                    throw usage_error("degree-0 part must be one idempotent per vertex");
                idempotents_[e.source] = b;
            }
        }
        for (VertexId v = 0; v < nv; ++v)
            if (idempotents_[v] == basis_.size())
                throw usage_error("vertex " + vertex_labels_[v] + " has no idempotent");

        for (const auto& [k, value] : products_) {
            const BasisId g = k / basis_.size();
            const BasisId f = k % basis_.size();
            if (g >= basis_.size() || value.empty())
                throw usage_error("malformed product table entry");
            const auto& eg = basis_[g];
            const auto& ef = basis_[f];
            if (ef.target != eg.source)
                throw usage_error("product of non-composable elements " + std::to_string(g) + "∘" +
                                  std::to_string(f));
            for (const auto& t : value) {
                if (t.index >= basis_.size())
                    throw usage_error("product refers to unknown basis element");
                const auto& eh = basis_[t.index];
                if (eh.source != ef.source || eh.target != eg.target)
                    throw usage_error("product " + std::to_string(g) + "∘" + std::to_string(f) +
                                      " has wrong endpoints");
                if (eh.degree != ef.degree + eg.degree)
                    throw usage_error("product " + std::to_string(g) + "∘" + std::to_string(f) +
                                      " breaks degree additivity");
            }
        }
        for (BasisId b = 0; b < basis_.size(); ++b) {
            const auto& e = basis_[b];
            const LinComb self = linalg::unit_vector(b);
            if (product(b, idempotents_[e.source]) != self || product(idempotents_[e.target], b) != self)
                throw usage_error("idempotents do not act as units on basis element " + std::to_string(b));
        }
    }

    std::vector<std::string> vertex_labels_;
    std::vector<BasisElement> basis_;
    std::unordered_map<std::uint64_t, LinComb> products_;
    std::optional<unsigned> subset_rank_;

    unsigned grading_max_ = 0;
    std::vector<BasisId> idempotents_;
    std::vector<std::vector<BasisId>> from_;
    std::vector<std::vector<BasisId>> to_;
};

// Accumulates basis elements and structure constants.
class AlgebraBuilder {
public:
    VertexId add_vertex(std::string label)
    {
        labels_.push_back(std::move(label));
        return labels_.size() - 1;
    }

    BasisId add_element(VertexId source, VertexId target, unsigned degree)
    {
        basis_.push_back(BasisElement{source, target, degree});
        return basis_.size() - 1;
    }

    // Records g∘f += coeff * h. Call only after all elements are added.
    void add_product(BasisId g, BasisId f, BasisId h, const Rational& coeff)
    {
        auto& slot = products_[static_cast<std::uint64_t>(g) * basis_.size() + f];
        slot = linalg::axpy(slot, coeff, linalg::unit_vector(h));
        if (slot.empty())
            products_.erase(static_cast<std::uint64_t>(g) * basis_.size() + f);
    }

    void set_subset_rank(unsigned rank) { subset_rank_ = rank; }

    StructureAlgebra build() &&
    {
        return StructureAlgebra(std::move(labels_), std::move(basis_), std::move(products_), subset_rank_);
    }

private:
    std::vector<std::string> labels_;
    std::vector<BasisElement> basis_;
    std::unordered_map<std::uint64_t, LinComb> products_;
    std::optional<unsigned> subset_rank_;
};

namespace detail {

inline void guard_rank(unsigned d, unsigned max_d)
{
    if (d > max_d)
        throw resource_error("rank " + std::to_string(d) + " exceeds the guard " + std::to_string(max_d));
}

// Subset-labelled algebra with one basis element per ordered pair (I, J),
// numbered I * 2^d + J. `rule` returns whether f_{JK}∘f_{IJ} = f_{IK}.
template <typename ProductRule>
StructureAlgebra pair_algebra(unsigned d, ProductRule&& rule)
{
    const std::size_t nv = std::size_t{1} << d;
    AlgebraBuilder b;
    for (const auto& v : all_subsets(d))
        b.add_vertex(v.label());
    for (const auto& i : all_subsets(d))
        for (const auto& j : all_subsets(d))
            b.add_element(i.bits(), j.bits(), delta(i, j));
    for (const auto& i : all_subsets(d)) {
        for (const auto& j : all_subsets(d)) {
            for (const auto& k : all_subsets(d)) {
                if (rule(i, j, k))
                    b.add_product(j.bits() * nv + k.bits(), i.bits() * nv + j.bits(), i.bits() * nv + k.bits(),
                                  Rational(1));
            }
        }
    }
    b.set_subset_rank(d);
    return std::move(b).build();
}

} // namespace detail

// Ext-algebra: Ext^k(σ_I, σ_J) is one-dimensional
// exactly in degree δ(I,J), and the Yoneda product ε_{JK}∘ε_{IJ} is ε_{IK}
// when δ(I,J) + δ(J,K) = δ(I,K) and zero otherwise.
inline StructureAlgebra dat_ext_algebra(unsigned d, unsigned max_d = kMaxAlgebraRank)
{
    detail::guard_rank(d, max_d);
    return detail::pair_algebra(d, [](const SubsetIndex& i, const SubsetIndex& j, const SubsetIndex& k) {
        return is_geodesic_triple(i, j, k);
    });
}

// C[Q]/K: one class per canonical geodesic; products concatenate the
// representatives and reduce with quiver::normal_form.
inline StructureAlgebra path_quotient_algebra(unsigned d, unsigned max_d = kMaxAlgebraRank)
{
    detail::guard_rank(d, max_d);
    const std::size_t nv = std::size_t{1} << d;
    std::vector<quiver::QuiverPath> reps;
    reps.reserve(nv * nv);
    for (const auto& i : all_subsets(d))
        for (const auto& j : all_subsets(d))
            reps.push_back(quiver::canonical_geodesic(i, j));
    return detail::pair_algebra(d, [&](const SubsetIndex& i, const SubsetIndex& j, const SubsetIndex& k) {
        const auto nf = quiver::normal_form(reps[i.bits() * nv + j.bits()].then(reps[j.bits() * nv + k.bits()]));
        if (nf.is_zero())
            return false;
        if (nf.source() != i || nf.target() != k)
            throw std::logic_error("normal form changed the endpoints");
        return true;
    });
}

// The algebra with one vertex and one basis element.
inline StructureAlgebra scalar_algebra()
{
    AlgebraBuilder b;
    b.add_vertex("pt");
    const BasisId e = b.add_element(0, 0, 0);
    b.add_product(e, e, e, Rational(1));
    return std::move(b).build();
}

// Two vertices Δ, ∇; arrows a: Δ→∇ and b: ∇→Δ in degree 1 with a∘b = b∘a = 0.
// Basis order: e_Δ, a, b, e_∇ (sorted by source, then target).
inline StructureAlgebra base_algebra(const std::string& delta_label = "Delta",
                                     const std::string& nabla_label = "Nabla")
{
    AlgebraBuilder b;
    const VertexId dv = b.add_vertex(delta_label);
    const VertexId nv = b.add_vertex(nabla_label);
    const BasisId e_d = b.add_element(dv, dv, 0);
    const BasisId a = b.add_element(dv, nv, 1);
    const BasisId bb = b.add_element(nv, dv, 1);
    const BasisId e_n = b.add_element(nv, nv, 0);
    const Rational one(1);
    b.add_product(e_d, e_d, e_d, one);
    b.add_product(e_n, e_n, e_n, one);
    b.add_product(a, e_d, a, one);
    b.add_product(e_n, a, a, one);
    b.add_product(bb, e_n, bb, one);
    b.add_product(e_d, bb, bb, one);
    return std::move(b).build();
}

// Unsigned tensor product: (g1⊗g2)∘(f1⊗f2) = (g1∘f1)⊗(g2∘f2).
// Vertex (u, v) is numbered u * |V_B| + v, basis (x, y) as x * dim B + y.
inline StructureAlgebra tensor_product(const StructureAlgebra& a, const StructureAlgebra& b)
{
    AlgebraBuilder out;
    for (const auto& la : a.vertex_labels())
        for (const auto& lb : b.vertex_labels())
            out.add_vertex(la + "⊗" + lb);
    const std::size_t nvb = b.vertex_count();
    for (const auto& ea : a.basis())
        for (const auto& eb : b.basis())
            out.add_element(ea.source * nvb + eb.source, ea.target * nvb + eb.target, ea.degree + eb.degree);
    const std::size_t db = b.dimension();
    const auto pa = a.sorted_products();
    const auto pb = b.sorted_products();
    for (const auto& [ka, va] : pa) {
        for (const auto& [kb, vb] : pb) {
            for (const auto& ta : *va)
                for (const auto& tb : *vb)
                    out.add_product(ka.first * db + kb.first, ka.second * db + kb.second, ta.index * db + tb.index,
                                    ta.value * tb.value);
        }
    }
    return std::move(out).build();
}

inline StructureAlgebra tensor_power(const StructureAlgebra& a, unsigned d)
{
    StructureAlgebra out = scalar_algebra();
    if (d == 0)
        return out;
    out = a;
    for (unsigned k = 1; k < d; ++k)
        out = tensor_product(out, a);
    return out;
}

// Relabels an algebra with exactly one basis element per ordered vertex
// pair onto subsets: vertex v goes to subset vertex_to_mask[v], and the
// basis element from I to J becomes number I * 2^d + J. Structure
// constants are carried over unchanged.
inline StructureAlgebra relabel_pair_algebra(const StructureAlgebra& a, const std::vector<std::uint32_t>& vertex_to_mask,
                                             unsigned rank)
{
    const std::size_t nv = std::size_t{1} << rank;
    if (a.vertex_count() != nv || vertex_to_mask.size() != nv || a.dimension() != nv * nv)
        throw usage_error("relabel_pair_algebra needs 2^d vertices and 4^d basis elements");
    std::vector<BasisId> new_id(a.dimension());
    std::vector<bool> seen(a.dimension(), false);
    for (BasisId b = 0; b < a.dimension(); ++b) {
        const auto& e = a.element(b);
        const BasisId id = vertex_to_mask.at(e.source) * nv + vertex_to_mask.at(e.target);
        if (seen.at(id))
            throw usage_error("relabel_pair_algebra: two basis elements between the same vertices");
        seen[id] = true;
        new_id[b] = id;
    }
    AlgebraBuilder out;
    for (const auto& v : all_subsets(rank))
        out.add_vertex(v.label());
    std::vector<BasisElement> elems(a.dimension());
    for (BasisId b = 0; b < a.dimension(); ++b) {
        const auto& e = a.element(b);
        elems[new_id[b]] = BasisElement{vertex_to_mask[e.source], vertex_to_mask[e.target], e.degree};
    }
    for (const auto& e : elems)
        out.add_element(e.source, e.target, e.degree);
    for (const auto& [k, v] : a.sorted_products())
        for (const auto& t : *v)
            out.add_product(new_id[k.first], new_id[k.second], new_id[t.index], t.value);
    out.set_subset_rank(rank);
    return std::move(out).build();
}

// A_d = End(⊕ P_I): the d-th tensor power of the base algebra with vertex
// (c_1, ..., c_d) sent to the subset {α_i : c_i = ∇}.
inline StructureAlgebra endomorphism_algebra(unsigned d, unsigned max_d = kMaxAlgebraRank)
{
    detail::guard_rank(d, max_d);
    const StructureAlgebra power = tensor_power(base_algebra(), d);
    // The first tensor factor is the most significant digit of the vertex
    // number and corresponds to α_1 (bit 0).
    const std::size_t nv = std::size_t{1} << d;
    std::vector<std::uint32_t> to_mask(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        std::uint32_t mask = 0;
        for (unsigned i = 0; i < d; ++i)
            if ((v >> (d - 1 - i)) & 1u)
                mask |= std::uint32_t{1} << i;
        to_mask[v] = mask;
    }
    return relabel_pair_algebra(power, to_mask, d);
}

// ---------------------------------------------------------------------------
// Graded invariants

// Polynomial in t with nonnegative integer coefficients; coeffs[k] is the
// coefficient of t^k.
struct Polynomial {
    std::vector<std::uint64_t> coeffs;

    void add_monomial(unsigned k)
    {
        if (coeffs.size() <= k)
            coeffs.resize(k + 1, 0);
        ++coeffs[k];
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            const std::string c = std::to_string(coeffs[k]);
            if (k == 0)
                s += c;
            else
                s += (coeffs[k] == 1 ? "" : c) + (k == 1 ? std::string("t") : "t^" + std::to_string(k));
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        auto trimmed = [](std::vector<std::uint64_t> c) {
            while (!c.empty() && c.back() == 0)
                c.pop_back();
            return c;
        };
        return trimmed(a.coeffs) == trimmed(b.coeffs);
    }
};

inline Polynomial monomial(unsigned k)
{
    Polynomial p;
    p.add_monomial(k);
    return p;
}

struct HilbertMatrix {
    std::size_t size = 0;
    std::vector<Polynomial> entries;  // row-major

    const Polynomial& at(VertexId i, VertexId j) const { return entries.at(i * size + j); }

    bool is_symmetric() const
    {
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!(at(i, j) == at(j, i)))
                    return false;
        return true;
    }
};

// Entry (I, J) = sum of t^deg over basis elements from I to J.
inline HilbertMatrix hilbert_matrix(const StructureAlgebra& a)
{
    HilbertMatrix h;
    h.size = a.vertex_count();
    h.entries.assign(h.size * h.size, Polynomial{});
    for (const auto& e : a.basis())
        h.entries[e.source * h.size + e.target].add_monomial(e.degree);
    return h;
}

// For every k >= 2 the degree-k component is spanned by the products
// x∘y with deg x = 1 and deg y = k - 1.
inline bool check_generated_in_degrees_01(const StructureAlgebra& a)
{
    std::vector<std::vector<BasisId>> by_degree(a.grading_max() + 1);
    for (BasisId b = 0; b < a.dimension(); ++b)
        by_degree[a.element(b).degree].push_back(b);
    for (unsigned k = 2; k <= a.grading_max(); ++k) {
        if (by_degree[k].empty())
            continue;
        linalg::TrackedEchelon span;
        std::size_t id = 0;
        for (BasisId y : by_degree[k - 1]) {
            for (BasisId x : a.elements_from(a.element(y).target)) {
                if (a.element(x).degree != 1)
                    continue;
                const LinComb& p = a.product(x, y);
                if (!p.empty())
                    span.insert(p, id++);
            }
        }
        if (span.rank() != by_degree[k].size())
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Associativity

struct BasisTriple {
    BasisId h = 0, g = 0, f = 0;

    friend bool operator==(const BasisTriple&, const BasisTriple&) = default;
};

inline bool associates(const StructureAlgebra& a, BasisId h, BasisId g, BasisId f)
{
    const LinComb gf = a.product(g, f);
    const LinComb hg = a.product(h, g);
    return a.multiply(linalg::unit_vector(h), gf) == a.multiply(hg, linalg::unit_vector(f));
}

struct AssociativityReport {
    std::size_t triples_checked = 0;
    std::optional<BasisTriple> violation;
};

// Every basis triple. Triples that are not composable on both sides are
// zero on both sides by the typing invariant and are skipped.
inline AssociativityReport check_associativity_exhaustive(const StructureAlgebra& a)
{
    AssociativityReport r;
    const std::size_t n = a.dimension();
    for (BasisId f = 0; f < n; ++f) {
        for (BasisId g = 0; g < n; ++g) {
            for (BasisId h = 0; h < n; ++h) {
                ++r.triples_checked;
                if (a.element(f).target != a.element(g).source || a.element(g).target != a.element(h).source)
                    continue;
                if (!associates(a, h, g, f)) {
                    r.violation = BasisTriple{h, g, f};
                    return r;
                }
            }
        }
    }
    return r;
}

// `samples` uniform basis triples plus `samples` uniformly drawn composable
// chains f, g, h, from a generator seeded with `seed`.
inline AssociativityReport check_associativity_sampled(const StructureAlgebra& a, std::size_t samples,
                                                       std::uint64_t seed)
{
    AssociativityReport r;
    std::mt19937_64 rng(seed);
    const std::size_t n = a.dimension();
    auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
    for (std::size_t s = 0; s < samples; ++s) {
        const BasisTriple t{pick(n), pick(n), pick(n)};
        ++r.triples_checked;
        if (!associates(a, t.h, t.g, t.f)) {
            r.violation = t;
            return r;
        }
    }
    for (std::size_t s = 0; s < samples; ++s) {
        const BasisId f = pick(n);
        const auto& gs = a.elements_from(a.element(f).target);
        const BasisId g = gs[pick(gs.size())];
        const auto& hs = a.elements_from(a.element(g).target);
        const BasisId h = hs[pick(hs.size())];
        ++r.triples_checked;
        if (!associates(a, h, g, f)) {
            r.violation = BasisTriple{h, g, f};
            return r;
        }
    }
    return r;
}

} // namespace steinberg
