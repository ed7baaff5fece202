#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace steinberg {

// A linear map between structure algebras given on basis elements,
// together with the vertex bijection it is meant to cover.
struct AlgebraMap {
    std::shared_ptr<const StructureAlgebra> domain;
    std::shared_ptr<const StructureAlgebra> codomain;
    std::vector<VertexId> vertex_map;
    std::vector<LinComb> images;

    LinComb apply(const LinComb& x) const
    {
        LinComb out;
        for (const auto& e : x)
            out = linalg::axpy(out, e.value, images.at(e.index));
        return out;
    }
};

// For two subset-labelled algebras of the same rank with one basis element
// per ordered pair: f_IJ goes to the codomain's element from I to J.
inline AlgebraMap identity_on_labels(std::shared_ptr<const StructureAlgebra> domain,
                                     std::shared_ptr<const StructureAlgebra> codomain)
{
    if (!domain->subset_rank() || domain->subset_rank() != codomain->subset_rank())
        throw usage_error("identity_on_labels needs subset-labelled algebras of equal rank");
    AlgebraMap m;
    m.vertex_map.resize(domain->vertex_count());
    for (VertexId v = 0; v < domain->vertex_count(); ++v)
        m.vertex_map[v] = v;
    m.images.reserve(domain->dimension());
    for (const auto& e : domain->basis()) {
        auto target = codomain->element_between(e.source, e.target);
        if (!target)
            throw usage_error("codomain has no unique element from " + codomain->vertex_labels()[e.source] +
                              " to " + codomain->vertex_labels()[e.target]);
        m.images.push_back(linalg::unit_vector(*target));
    }
    m.domain = std::move(domain);
    m.codomain = std::move(codomain);
    return m;
}

struct IsomorphismReport {
    bool ok = true;
    std::string failed_check;  // empty when ok
    std::optional<std::pair<BasisId, BasisId>> counterexample;  // (g, f) for g∘f
    std::string detail;
    std::size_t pairs_checked = 0;
};

// Checks that `m` is a degree-preserving linear bijection which sends each
// idempotent ε_v to ε_{vertex_map(v)} and satisfies m(g∘f) = m(g)∘m(f) on
// every pair of basis elements. Throws usage_error for ill-typed input.
inline IsomorphismReport verify_isomorphism(const AlgebraMap& m)
{
    const auto& dom = *m.domain;
    const auto& cod = *m.codomain;
    if (dom.dimension() != cod.dimension())
        throw usage_error("domain and codomain dimensions differ");
    if (m.images.size() != dom.dimension() || m.vertex_map.size() != dom.vertex_count() ||
        cod.vertex_count() != dom.vertex_count())
        throw usage_error("map does not cover the domain basis and vertices");
    for (VertexId v : m.vertex_map)
        if (v >= cod.vertex_count())
            throw usage_error("vertex map points outside the codomain");
    for (BasisId b = 0; b < dom.dimension(); ++b) {
        const auto& e = dom.element(b);
        for (const auto& t : m.images[b]) {
            if (t.index >= cod.dimension())
                throw usage_error("image of basis element " + std::to_string(b) + " is out of range");
            const auto& c = cod.element(t.index);
            if (c.source != m.vertex_map[e.source] || c.target != m.vertex_map[e.target])
                throw usage_error("image of basis element " + std::to_string(b) + " has the wrong endpoints");
        }
    }

    IsomorphismReport r;
    auto fail = [&](std::string check, std::string detail, std::optional<std::pair<BasisId, BasisId>> where = {}) {
        r.ok = false;
        r.failed_check = std::move(check);
        r.detail = std::move(detail);
        r.counterexample = where;
        return r;
    };

    std::vector<bool> hit(cod.vertex_count(), false);
    for (VertexId v : m.vertex_map) {
        if (hit[v])
            return fail("vertex bijection", "vertex " + cod.vertex_labels()[v] + " is hit twice");
        hit[v] = true;
    }
    for (BasisId b = 0; b < dom.dimension(); ++b) {
        for (const auto& t : m.images[b])
            if (cod.element(t.index).degree != dom.element(b).degree)
                return fail("degree", "basis element " + std::to_string(b) + " changes degree");
    }
    for (VertexId v = 0; v < dom.vertex_count(); ++v) {
        if (m.images[dom.idempotent(v)] != linalg::unit_vector(cod.idempotent(m.vertex_map[v])))
            return fail("idempotents", "idempotent at " + dom.vertex_labels()[v] + " is not sent to an idempotent");
    }
    if (linalg::rank(m.images) != dom.dimension())
        return fail("bijection", "images are linearly dependent");

    for (BasisId g = 0; g < dom.dimension(); ++g) {
        for (BasisId f = 0; f < dom.dimension(); ++f) {
            ++r.pairs_checked;
            const LinComb lhs = m.apply(dom.product(g, f));
            const LinComb rhs = cod.multiply(m.images[g], m.images[f]);
            if (lhs != rhs) {
                return fail("multiplicativity",
                            "image of " + std::to_string(g) + "∘" + std::to_string(f) +
                                " differs from the product of the images",
                            std::make_pair(g, f));
            }
        }
    }
    return r;
}

} // namespace steinberg
