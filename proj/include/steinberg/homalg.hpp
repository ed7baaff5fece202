#pragma once

// Graded right modules over a structure algebra, projective covers and
// minimal graded projective resolutions.
//
// A right module assigns a vector space to each vertex; a basis element
// x: J -> K acts as a linear map from the J-part to the K-part, and
// m·(g∘f) = (m·f)·g. Modules store the action of degree-1 basis elements
// only. Higher-degree elements act through a factorisation into products
// of degree-1 elements, so the algebra must be generated in degrees 0, 1.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace steinberg::homalg {

using linalg::SparseMatrix;
using linalg::SparseVec;

// Each basis element b of degree >= 2 written as sum c * outer∘inner with
// deg outer = 1 and deg inner = deg b - 1.
class DegreeOneFactorization {
public:
    struct Term {
        BasisId outer;
        BasisId inner;
        Rational coeff;
    };

    explicit DegreeOneFactorization(const StructureAlgebra& a) : terms_(a.dimension())
    {
        using Block = std::tuple<VertexId, VertexId, unsigned>;
        struct Candidates {
            std::vector<std::pair<BasisId, BasisId>> pairs;
            linalg::TrackedEchelon span;
        };
        std::map<Block, Candidates> blocks;
        for (BasisId y = 0; y < a.dimension(); ++y) {
            const auto& ey = a.element(y);
            if (ey.degree == 0)
                continue;
            for (BasisId x : a.elements_from(ey.target)) {
                if (a.element(x).degree != 1)
                    continue;
                const LinComb& p = a.product(x, y);
                if (p.empty())
                    continue;
                auto& c = blocks[Block{ey.source, a.element(x).target, ey.degree + 1}];
                c.span.insert(p, c.pairs.size());
                c.pairs.emplace_back(x, y);
            }
        }
        for (BasisId b = 0; b < a.dimension(); ++b) {
            const auto& e = a.element(b);
            if (e.degree < 2)
                continue;
            auto it = blocks.find(Block{e.source, e.target, e.degree});
            std::optional<SparseVec> coeffs;
            if (it != blocks.end())
                coeffs = it->second.span.express(linalg::unit_vector(b));
            if (!coeffs)
                throw usage_error("algebra is not generated in degrees 0 and 1 (basis element " +
                                  std::to_string(b) + ")");
            for (const auto& c : *coeffs) {
                const auto [x, y] = it->second.pairs[c.index];
                terms_[b].push_back(Term{x, y, c.value});
            }
        }
    }

    const std::vector<Term>& terms(BasisId b) const { return terms_.at(b); }

private:
    std::vector<std::vector<Term>> terms_;
};

// An algebra together with the data modules need to act with it.
struct Ring {
    std::shared_ptr<const StructureAlgebra> algebra;
    DegreeOneFactorization factorization;
    std::vector<BasisId> degree_one;

    explicit Ring(std::shared_ptr<const StructureAlgebra> a) : algebra(std::move(a)), factorization(*algebra)
    {
        for (BasisId b = 0; b < algebra->dimension(); ++b)
            if (algebra->element(b).degree == 1)
                degree_one.push_back(b);
    }
};

inline std::shared_ptr<const Ring> make_ring(StructureAlgebra a)
{
    return std::make_shared<const Ring>(std::make_shared<const StructureAlgebra>(std::move(a)));
}

inline std::shared_ptr<const Ring> make_ring(std::shared_ptr<const StructureAlgebra> a)
{
    return std::make_shared<const Ring>(std::move(a));
}

// (vertex, internal degree) of a generator of a free module.
struct Generator {
    VertexId vertex = 0;
    int degree = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

class RightModule {
public:
    RightModule(std::shared_ptr<const Ring> ring, std::vector<VertexId> vertex_of, std::vector<int> degree_of,
                std::map<BasisId, SparseMatrix> action)
        : ring_(std::move(ring)),
          vertex_of_(std::move(vertex_of)),
          degree_of_(std::move(degree_of)),
          action_(std::move(action))
    {
        validate_shape();
    }

    static RightModule zero(std::shared_ptr<const Ring> ring) { return RightModule(std::move(ring), {}, {}, {}); }

    const std::shared_ptr<const Ring>& ring() const { return ring_; }
    const StructureAlgebra& algebra() const { return *ring_->algebra; }
    std::size_t dimension() const { return vertex_of_.size(); }
    VertexId vertex_of(std::size_t i) const { return vertex_of_.at(i); }
    int degree_of(std::size_t i) const { return degree_of_.at(i); }
    const std::vector<VertexId>& vertices() const { return vertex_of_; }
    const std::vector<int>& degrees() const { return degree_of_; }
    const std::map<BasisId, SparseMatrix>& action() const { return action_; }

    std::vector<std::size_t> dims() const
    {
        std::vector<std::size_t> out(algebra().vertex_count(), 0);
        for (VertexId v : vertex_of_)
            ++out[v];
        return out;
    }

    // v·b for any basis element b.
    SparseVec act(const SparseVec& v, BasisId b) const
    {
        const auto& e = algebra().element(b);
        if (e.degree == 0) {
            SparseVec out;
            for (const auto& t : v)
                if (vertex_of_[t.index] == e.source)
                    out.push_back(t);
            return out;
        }
        if (e.degree == 1) {
            auto it = action_.find(b);
            return it == action_.end() ? SparseVec{} : it->second.apply(v);
        }
        SparseVec out;
        for (const auto& term : ring_->factorization.terms(b))
            out = linalg::axpy(out, term.coeff, act(act(v, term.inner), term.outer));
        return out;
    }

    // Composite action of degree-1 pairs agrees with the action of their
    // product, zero products included.
    bool satisfies_relations() const
    {
        const auto& a = algebra();
        for (BasisId y : ring_->degree_one) {
            for (BasisId x : a.elements_from(a.element(y).target)) {
                if (a.element(x).degree != 1)
                    continue;
                const LinComb& p = a.product(x, y);
                for (std::size_t i = 0; i < dimension(); ++i) {
                    const SparseVec v = linalg::unit_vector(i);
                    SparseVec via_product;
                    for (const auto& t : p)
                        via_product = linalg::axpy(via_product, t.value, act(v, t.index));
                    if (act(act(v, y), x) != via_product)
                        return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const RightModule& a, const RightModule& b)
    {
        if (a.ring_->algebra != b.ring_->algebra || a.vertex_of_ != b.vertex_of_ || a.degree_of_ != b.degree_of_)
            return false;
        auto nonzero = [](const std::map<BasisId, SparseMatrix>& m) {
            std::map<BasisId, std::vector<SparseVec>> out;
            for (const auto& [x, mat] : m)
                if (!mat.is_zero())
                    out[x] = mat.columns;
            return out;
        };
        return nonzero(a.action_) == nonzero(b.action_);
    }

private:
    void validate_shape() const
    {
        const auto& a = algebra();
        if (degree_of_.size() != vertex_of_.size())
            throw usage_error("module grading and vertex data differ in length");
        for (VertexId v : vertex_of_)
            if (v >= a.vertex_count())
                throw usage_error("module basis vector at unknown vertex");
        for (const auto& [x, mat] : action_) {
            if (x >= a.dimension() || a.element(x).degree != 1)
                throw usage_error("module action given for a basis element that is not of degree 1");
            if (mat.cols != dimension() || mat.rows != dimension())
                throw usage_error("action matrix has the wrong shape");
            const auto& ex = a.element(x);
            for (std::size_t j = 0; j < dimension(); ++j) {
                if (mat.columns[j].empty())
                    continue;
                if (vertex_of_[j] != ex.source)
                    throw usage_error("action of " + std::to_string(x) + " on a vector at the wrong vertex");
                for (const auto& t : mat.columns[j])
                    if (vertex_of_[t.index] != ex.target || degree_of_[t.index] != degree_of_[j] + 1)
                        throw usage_error("action of " + std::to_string(x) + " is not homogeneous of degree 1");
            }
        }
    }

    std::shared_ptr<const Ring> ring_;
    std::vector<VertexId> vertex_of_;
    std::vector<int> degree_of_;
    std::map<BasisId, SparseMatrix> action_;
};

// ---------------------------------------------------------------------------
// Constructions

inline void require_vertex(const Ring& ring, VertexId v)
{
    if (v >= ring.algebra->vertex_count())
        throw usage_error("unknown vertex " + std::to_string(v));
}

// One-dimensional at v, concentrated in internal degree `shift`.
inline RightModule simple_module(std::shared_ptr<const Ring> ring, VertexId v, int shift = 0)
{
    require_vertex(*ring, v);
    return RightModule(std::move(ring), {v}, {shift}, {});
}

// Basis elements of P_v = ε_v·A, in (target, degree, id) order.
inline std::vector<BasisId> projective_basis(const StructureAlgebra& a, VertexId v)
{
    std::vector<BasisId> out = a.elements_from(v);
    std::sort(out.begin(), out.end(), [&](BasisId x, BasisId y) {
        const auto& ex = a.element(x);
        const auto& ey = a.element(y);
        return std::tie(ex.target, ex.degree, x) < std::tie(ey.target, ey.degree, y);
    });
    return out;
}

// P_v = ε_v·A shifted by `shift`; basis vector b sits at target(b) in
// internal degree shift + deg(b), and x acts by b ↦ x∘b.
inline RightModule projective_module(std::shared_ptr<const Ring> ring, VertexId v, int shift = 0)
{
    require_vertex(*ring, v);
    const auto& a = *ring->algebra;
    const auto basis = projective_basis(a, v);
    std::map<BasisId, std::size_t> index;
    std::vector<VertexId> vertex_of;
    std::vector<int> degree_of;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        index[basis[i]] = i;
        vertex_of.push_back(a.element(basis[i]).target);
        degree_of.push_back(shift + static_cast<int>(a.element(basis[i]).degree));
    }
    std::map<BasisId, SparseMatrix> action;
    for (BasisId x : ring->degree_one) {
        SparseMatrix m(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<linalg::Entry> terms;
            for (const auto& t : a.product(x, basis[i]))
                terms.push_back(linalg::Entry{index.at(t.index), t.value});
            m.columns[i] = linalg::from_terms(terms);
        }
        if (!m.is_zero())
            action.emplace(x, std::move(m));
    }
    return RightModule(std::move(ring), std::move(vertex_of), std::move(degree_of), std::move(action));
}

inline RightModule shifted(const RightModule& m, int shift)
{
    std::vector<int> deg = m.degrees();
    for (auto& d : deg)
        d += shift;
    return RightModule(m.ring(), m.vertices(), std::move(deg), m.action());
}

inline RightModule direct_sum(const RightModule& a, const RightModule& b)
{
    if (a.ring()->algebra != b.ring()->algebra)
        throw usage_error("direct sum of modules over different algebras");
    const std::size_t n = a.dimension() + b.dimension();
    std::vector<VertexId> vertex_of = a.vertices();
    vertex_of.insert(vertex_of.end(), b.vertices().begin(), b.vertices().end());
    std::vector<int> degree_of = a.degrees();
    degree_of.insert(degree_of.end(), b.degrees().begin(), b.degrees().end());
    std::map<BasisId, SparseMatrix> action;
    auto place = [&](const RightModule& m, std::size_t offset) {
        for (const auto& [x, mat] : m.action()) {
            auto& out = action.try_emplace(x, SparseMatrix(n, n)).first->second;
            for (std::size_t j = 0; j < mat.cols; ++j) {
                SparseVec col = mat.columns[j];
                for (auto& t : col)
                    t.index += offset;
                out.columns[j + offset] = std::move(col);
            }
        }
    };
    place(a, 0);
    place(b, a.dimension());
    return RightModule(a.ring(), std::move(vertex_of), std::move(degree_of), std::move(action));
}

// A graded submodule together with its inclusion into the ambient module.
struct Submodule {
    RightModule module;
    SparseMatrix inclusion;  // ambient.dimension() x module.dimension()
};

namespace detail {

inline std::optional<std::pair<VertexId, int>> homogeneous_part(const RightModule& m, const SparseVec& v)
{
    if (v.empty())
        return std::nullopt;
    const VertexId vert = m.vertex_of(v.front().index);
    const int deg = m.degree_of(v.front().index);
    for (const auto& t : v)
        if (m.vertex_of(t.index) != vert || m.degree_of(t.index) != deg)
            throw usage_error("submodule generators must be homogeneous");
    return std::make_pair(vert, deg);
}

// Ambient basis indices in (vertex, degree, index) order.
inline std::vector<std::size_t> graded_order(const RightModule& m)
{
    std::vector<std::size_t> order(m.dimension());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::make_pair(m.vertex_of(x), m.degree_of(x)) < std::make_pair(m.vertex_of(y), m.degree_of(y));
    });
    return order;
}

} // namespace detail

// The submodule spanned, as a vector space, by homogeneous vectors that
// are already closed under the action. Basis: the first independent
// vectors of each (vertex, degree) block, blocks in (vertex, degree) order.
inline Submodule span_submodule(const RightModule& m, const std::vector<SparseVec>& vectors)
{
    using Block = std::pair<VertexId, int>;
    struct BlockData {
        std::vector<SparseVec> basis;
        linalg::TrackedEchelon echelon;
    };
    std::map<Block, BlockData> blocks;
    for (const auto& v : vectors) {
        auto part = detail::homogeneous_part(m, v);
        if (!part)
            continue;
        auto& b = blocks[*part];
        if (!b.echelon.insert(v, b.basis.size()))
            b.basis.push_back(v);
    }
    std::vector<VertexId> vertex_of;
    std::vector<int> degree_of;
    std::map<Block, std::size_t> offset;
    SparseMatrix inclusion(m.dimension(), 0);
    for (const auto& [key, b] : blocks) {
        offset[key] = vertex_of.size();
        for (const auto& v : b.basis) {
            vertex_of.push_back(key.first);
            degree_of.push_back(key.second);
            inclusion.columns.push_back(v);
        }
    }
    inclusion.cols = vertex_of.size();
    const std::size_t n = vertex_of.size();

    std::map<BasisId, SparseMatrix> action;
    for (BasisId x : m.ring()->degree_one) {
        SparseMatrix mat(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec image = m.act(inclusion.columns[j], x);
            if (image.empty())
                continue;
            const Block key{m.vertex_of(image.front().index), m.degree_of(image.front().index)};
            auto it = blocks.find(key);
            std::optional<SparseVec> coords;
            if (it != blocks.end())
                coords = it->second.echelon.express(image);
            if (!coords)
                throw usage_error("span_submodule: vectors are not closed under the action");
            for (auto& t : *coords)
                t.index += offset.at(key);
            mat.columns[j] = std::move(*coords);
        }
        if (!mat.is_zero())
            action.emplace(x, std::move(mat));
    }
    return Submodule{RightModule(m.ring(), std::move(vertex_of), std::move(degree_of), std::move(action)),
                     std::move(inclusion)};
}

// Sum of the images of the degree-1 actions (the whole radical, as the
// algebra is generated in degrees 0 and 1).
inline Submodule radical(const RightModule& m)
{
    std::vector<SparseVec> images;
    for (const auto& [x, mat] : m.action())
        for (const auto& col : mat.columns)
            if (!col.empty())
                images.push_back(col);
    return span_submodule(m, images);
}

struct Top {
    std::vector<Generator> generators;
    std::vector<SparseVec> representatives;  // in the module's coordinates
};

// Basis vectors of m, in (vertex, degree, index) order, that complete the
// radical to a basis; these represent a basis of m / rad m.
inline Top top(const RightModule& m)
{
    linalg::TrackedEchelon span;
    std::size_t id = 0;
    for (const auto& [x, mat] : m.action())
        for (const auto& col : mat.columns)
            if (!col.empty())
                span.insert(col, id++);
    Top t;
    for (std::size_t i : detail::graded_order(m)) {
        if (!span.insert(linalg::unit_vector(i), id++)) {
            t.generators.push_back(Generator{m.vertex_of(i), m.degree_of(i)});
            t.representatives.push_back(linalg::unit_vector(i));
        }
    }
    return t;
}

struct ProjectiveCover {
    std::vector<Generator> generators;
    RightModule projective;
    SparseMatrix surjection;  // module.dimension() x projective.dimension()
};

// P = ⊕ P_J⟨s⟩ over the top of m, mapping the generator of each summand to
// its top representative.
inline ProjectiveCover projective_cover(const RightModule& m)
{
    if (m.dimension() == 0)
        throw usage_error("projective cover of the zero module");
    const auto& a = m.algebra();
    Top t = top(m);
    std::optional<RightModule> p;
    SparseMatrix surj(m.dimension(), 0);
    for (std::size_t i = 0; i < t.generators.size(); ++i) {
        const auto& g = t.generators[i];
        RightModule summand = projective_module(m.ring(), g.vertex, g.degree);
        p = p ? direct_sum(*p, summand) : summand;
        for (BasisId b : projective_basis(a, g.vertex))
            surj.columns.push_back(m.act(t.representatives[i], b));
    }
    surj.cols = surj.columns.size();
    return ProjectiveCover{std::move(t.generators), std::move(*p), std::move(surj)};
}

// Kernel of a graded, vertex-preserving map out of `source`, computed block
// by block.
inline Submodule graded_kernel(const RightModule& source, const SparseMatrix& map)
{
    std::map<std::pair<VertexId, int>, std::vector<std::size_t>> blocks;
    for (std::size_t j = 0; j < source.dimension(); ++j)
        blocks[{source.vertex_of(j), source.degree_of(j)}].push_back(j);
    std::vector<SparseVec> kernel_vectors;
    for (const auto& [key, cols] : blocks) {
        std::vector<SparseVec> block_columns;
        for (std::size_t j : cols)
            block_columns.push_back(map.columns[j]);
        for (auto& v : linalg::kernel(block_columns).basis) {
            for (auto& t : v)
                t.index = cols[t.index];
            kernel_vectors.push_back(std::move(v));
        }
    }
    return span_submodule(source, kernel_vectors);
}

// ---------------------------------------------------------------------------
// Resolutions

struct ResolutionLimits {
    unsigned max_rank = 3;
    unsigned max_k = 12;
};

struct Resolution {
    RightModule module;
    std::vector<std::vector<Generator>> terms;
    std::vector<RightModule> projectives;
    // differentials[0]: P_0 -> module; differentials[k]: P_k -> P_{k-1}.
    std::vector<SparseMatrix> differentials;
};

inline Resolution minimal_resolution(const RightModule& m, unsigned max_k, ResolutionLimits limits = {})
{
    if (max_k > limits.max_k)
        throw resource_error("homological degree " + std::to_string(max_k) + " exceeds the guard " +
                             std::to_string(limits.max_k));
    const auto& rank = m.algebra().subset_rank();
    if (rank && *rank > limits.max_rank)
        throw resource_error("resolutions are limited to d <= " + std::to_string(limits.max_rank));

    Resolution r{m, {}, {}, {}};
    RightModule current = m;
    std::optional<SparseMatrix> into_previous;  // inclusion of `current` into P_{k-1}
    for (unsigned k = 0; k <= max_k && current.dimension() > 0; ++k) {
        ProjectiveCover cover = projective_cover(current);
        SparseMatrix d = into_previous ? into_previous->after(cover.surjection) : cover.surjection;
        Submodule ker = graded_kernel(cover.projective, cover.surjection);
        r.terms.push_back(std::move(cover.generators));
        r.projectives.push_back(cover.projective);
        r.differentials.push_back(std::move(d));
        current = std::move(ker.module);
        into_previous = std::move(ker.inclusion);
    }
    return r;
}

struct ResolutionCheck {
    bool exact = true;
    bool minimal = true;
    std::string detail;
};

// Exactness: d_0 is onto, d_{k-1}∘d_k = 0 and rank d_{k-1} + rank d_k =
// dim P_{k-1}. Minimality: d_0 is a projective cover and, for k >= 1, no
// summand generator of P_k maps onto an idempotent coordinate of P_{k-1}.
inline ResolutionCheck check_resolution(const Resolution& r)
{
    ResolutionCheck c;
    if (r.terms.empty()) {
        c.exact = r.module.dimension() == 0;
        return c;
    }
    std::vector<std::size_t> ranks;
    for (const auto& d : r.differentials)
        ranks.push_back(linalg::rank(d));
    if (ranks[0] != r.module.dimension()) {
        c.exact = false;
        c.detail = "d_0 is not surjective";
    }
    for (std::size_t k = 1; k < r.differentials.size() && c.exact; ++k) {
        if (!r.differentials[k - 1].after(r.differentials[k]).is_zero()) {
            c.exact = false;
            c.detail = "d_" + std::to_string(k - 1) + " ∘ d_" + std::to_string(k) + " != 0";
        } else if (ranks[k - 1] + ranks[k] != r.projectives[k - 1].dimension()) {
            c.exact = false;
            c.detail = "homology at term " + std::to_string(k - 1);
        }
    }
    if (top(r.module).generators.size() != r.terms[0].size()) {
        c.minimal = false;
        c.detail += (c.detail.empty() ? "" : "; ") + std::string("P_0 is not a projective cover");
    }
    const auto& a = r.module.algebra();
    for (std::size_t k = 1; k < r.differentials.size() && c.minimal; ++k) {
        // Internal degree of the summand generator owning each coordinate of P_{k-1}.
        std::vector<int> owner_degree;
        for (const auto& g : r.terms[k - 1])
            owner_degree.insert(owner_degree.end(), a.elements_from(g.vertex).size(), g.degree);
        const auto& prev = r.projectives[k - 1];
        std::size_t offset = 0;
        for (const auto& g : r.terms[k]) {
            const auto basis = projective_basis(a, g.vertex);
            const auto at = std::find(basis.begin(), basis.end(), a.idempotent(g.vertex)) - basis.begin();
            for (const auto& t : r.differentials[k].columns[offset + static_cast<std::size_t>(at)]) {
                // A degree-0 algebra coefficient is an invertible component.
                if (prev.degree_of(t.index) == owner_degree[t.index]) {
                    c.minimal = false;
                    c.detail += (c.detail.empty() ? "" : "; ") + std::string("d_") + std::to_string(k) +
                                " has an invertible component";
                    break;
                }
            }
            if (!c.minimal)
                break;
            offset += basis.size();
        }
    }
    return c;
}

// Multiplicity of vertex j among the generators of each term; entries
// past the end of a finite resolution are zero.
inline std::vector<std::size_t> ext_dimensions(const Resolution& r, VertexId j, unsigned max_k)
{
    std::vector<std::size_t> out(max_k + 1, 0);
    for (std::size_t k = 0; k < r.terms.size() && k <= max_k; ++k)
        for (const auto& g : r.terms[k])
            if (g.vertex == j)
                ++out[k];
    return out;
}

// dim Ext^k(S_i, S_j) for k = 0..max_k over a basic algebra.
inline std::vector<std::size_t> ext_table(std::shared_ptr<const Ring> ring, VertexId i, VertexId j, unsigned max_k,
                                          ResolutionLimits limits = {})
{
    require_vertex(*ring, j);
    const Resolution r = minimal_resolution(simple_module(ring, i), max_k, limits);
    return ext_dimensions(r, j, max_k);
}

// Every generator in homological degree k sits in internal degree k.
inline bool is_linear_resolution(const Resolution& r)
{
    const int base = r.terms.empty() || r.terms[0].empty() ? 0 : r.terms[0].front().degree;
    for (std::size_t k = 0; k < r.terms.size(); ++k)
        for (const auto& g : r.terms[k])
            if (g.degree != base + static_cast<int>(k))
                return false;
    return true;
}

// Number of d-tuples of nonnegative integers summing to k whose i-th entry
// is odd exactly when α_i ∈ I ⊖ J: Ext dimensions over the d-fold tensor
// power of the base algebra, by the Künneth formula.
inline std::uint64_t kunneth_oracle(unsigned d, const SubsetIndex& i, const SubsetIndex& j, unsigned k)
{
    if (i.rank() != d || j.rank() != d)
        throw usage_error("kunneth_oracle: subset rank differs from d");
    const SubsetIndex diff = symmetric_difference(i, j);
    std::vector<std::uint64_t> ways(k + 1, 0);
    ways[0] = 1;
    for (unsigned c = 0; c < d; ++c) {
        const unsigned parity = diff.contains(c) ? 1 : 0;
        std::vector<std::uint64_t> next(k + 1, 0);
        for (unsigned s = 0; s <= k; ++s) {
            if (ways[s] == 0)
                continue;
            for (unsigned kc = parity; s + kc <= k; kc += 2)
                next[s + kc] += ways[s];
        }
        ways = std::move(next);
    }
    return ways[k];
}

} // namespace steinberg::homalg
