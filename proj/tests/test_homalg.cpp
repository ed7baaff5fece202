#include <gtest/gtest.h>

#include <functional>

#include <steinberg/homalg.hpp>

using namespace steinberg;
using namespace steinberg::homalg;

namespace {

constexpr VertexId kDelta = 0;
constexpr VertexId kNabla = 1;

std::shared_ptr<const Ring> a1() { return make_ring(base_algebra()); }

// Brute-force tuple count, independent of the dynamic programme.
std::uint64_t tuples(unsigned d, std::uint32_t parity, unsigned k)
{
    std::uint64_t n = 0;
    std::function<void(unsigned, unsigned)> go = [&](unsigned c, unsigned left) {
        if (c == d) {
            n += left == 0;
            return;
        }
        for (unsigned kc = 0; kc <= left; ++kc)
            if (kc % 2 == ((parity >> c) & 1u))
                go(c + 1, left - kc);
    };
    go(0, k);
    return n;
}

} // namespace

TEST(Homalg, SimpleAndProjectiveOverA1)
{
    const auto r = a1();
    const auto s = simple_module(r, kDelta);
    EXPECT_EQ(s.dims(), (std::vector<std::size_t>{1, 0}));
    EXPECT_TRUE(s.action().empty());
    const auto p = projective_module(r, kDelta);
    EXPECT_EQ(p.dims(), (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(p.degrees(), (std::vector<int>{0, 1}));
    EXPECT_TRUE(p.satisfies_relations());
    EXPECT_THROW(simple_module(r, 2), usage_error);
}

TEST(Homalg, RadicalAndCoverOverA1)
{
    const auto r = a1();
    const auto rad = radical(projective_module(r, kDelta));
    EXPECT_EQ(rad.module, simple_module(r, kNabla, 1));
    EXPECT_EQ(radical(simple_module(r, kDelta)).module.dimension(), 0u);
    const auto cover = projective_cover(rad.module);
    EXPECT_EQ(cover.projective, projective_module(r, kNabla, 1));
    EXPECT_EQ(cover.generators, (std::vector<Generator>{{kNabla, 1}}));
    EXPECT_THROW(projective_cover(RightModule::zero(r)), usage_error);
}

TEST(Homalg, A1ResolutionIsTwoPeriodic)
{
    const auto r = a1();
    const auto res = minimal_resolution(simple_module(r, kDelta), 6);
    ASSERT_EQ(res.terms.size(), 7u);
    for (unsigned k = 0; k <= 6; ++k)
        EXPECT_EQ(res.terms[k], (std::vector<Generator>{{k % 2 == 0 ? kDelta : kNabla, static_cast<int>(k)}}));
    const auto c = check_resolution(res);
    EXPECT_TRUE(c.exact) << c.detail;
    EXPECT_TRUE(c.minimal) << c.detail;
    EXPECT_TRUE(is_linear_resolution(res));
    EXPECT_EQ(ext_table(r, kDelta, kNabla, 6), (std::vector<std::size_t>{0, 1, 0, 1, 0, 1, 0}));
    EXPECT_EQ(ext_table(r, kDelta, kDelta, 6), (std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1}));
}

TEST(Homalg, ScalarsResolveInLengthZero)
{
    const auto r = make_ring(scalar_algebra());
    const auto res = minimal_resolution(simple_module(r, 0), 5);
    EXPECT_EQ(res.terms.size(), 1u);
    EXPECT_TRUE(check_resolution(res).exact);
    EXPECT_EQ(ext_table(r, 0, 0, 3), (std::vector<std::size_t>{1, 0, 0, 0}));
}

TEST(Homalg, KunnethOracle)
{
    const auto e = SubsetIndex::empty(2);
    EXPECT_EQ(kunneth_oracle(2, e, e, 2), 2u);
    EXPECT_EQ(kunneth_oracle(1, SubsetIndex::empty(1), SubsetIndex::full(1), 2), 0u);
    for (unsigned d = 0; d <= 4; ++d)
        for (const auto& i : all_subsets(d))
            for (const auto& j : all_subsets(d)) {
                EXPECT_EQ(kunneth_oracle(d, i, j, delta(i, j)), 1u);
                for (unsigned k = 0; k <= 7; ++k)
                    EXPECT_EQ(kunneth_oracle(d, i, j, k), tuples(d, i.bits() ^ j.bits(), k));
            }
    EXPECT_THROW(kunneth_oracle(2, e, SubsetIndex::empty(3), 0), usage_error);
}

TEST(Homalg, ExtOverEndomorphismAlgebraMatchesOracle)
{
    for (unsigned d = 0; d <= 2; ++d) {
        const auto r = make_ring(endomorphism_algebra(d));
        for (const auto& i : all_subsets(d)) {
            const auto res = minimal_resolution(simple_module(r, i.bits()), 6);
            const auto c = check_resolution(res);
            EXPECT_TRUE(c.exact && c.minimal) << c.detail;
            EXPECT_TRUE(is_linear_resolution(res));
            for (const auto& j : all_subsets(d)) {
                const auto dims = ext_dimensions(res, j.bits(), 6);
                EXPECT_EQ(dims[0], i == j ? 1u : 0u);
                for (unsigned k = 0; k <= 6; ++k)
                    EXPECT_EQ(dims[k], kunneth_oracle(d, i, j, k)) << i.label() << " " << j.label() << " " << k;
            }
        }
    }
}

TEST(Homalg, ExtIsTransportedAcrossTheIsomorphicAlgebras)
{
    const unsigned d = 2;
    const auto e = make_ring(dat_ext_algebra(d));
    const auto q = make_ring(path_quotient_algebra(d));
    const auto a = make_ring(endomorphism_algebra(d));
    for (VertexId i = 0; i < 4; ++i)
        for (VertexId j = 0; j < 4; ++j) {
            const auto ref = ext_table(a, i, j, 5);
            EXPECT_EQ(ext_table(e, i, j, 5), ref);
            EXPECT_EQ(ext_table(q, i, j, 5), ref);
        }
}

TEST(Homalg, ProjectivesOverEndomorphismAlgebra)
{
    const unsigned d = 3;
    const auto r = make_ring(endomorphism_algebra(d));
    for (VertexId v = 0; v < 8; ++v) {
        const auto p = projective_module(r, v);
        EXPECT_EQ(p.dimension(), 8u);
        EXPECT_TRUE(p.satisfies_relations());
        EXPECT_EQ(radical(p).module.dimension(), 7u);
        EXPECT_EQ(top(p).generators, (std::vector<Generator>{{v, 0}}));
        EXPECT_EQ(projective_cover(simple_module(r, v)).projective, p);
    }
}

TEST(Homalg, NonLinearControl)
{
    const auto r = a1();
    const auto m = direct_sum(simple_module(r, kDelta), simple_module(r, kDelta, 1));
    const auto res = minimal_resolution(m, 3);
    EXPECT_EQ(res.terms[0], (std::vector<Generator>{{kDelta, 0}, {kDelta, 1}}));
    EXPECT_TRUE(check_resolution(res).exact);
    EXPECT_FALSE(is_linear_resolution(res));
}

TEST(Homalg, NonMinimalDifferentialIsFlagged)
{
    const auto r = a1();
    auto res = minimal_resolution(simple_module(r, kDelta), 0);
    // Append P_1 = P_∇<1> ⊕ P_Δ whose P_Δ generator maps onto e_Δ.
    res.terms.push_back({{kNabla, 1}, {kDelta, 0}});
    res.projectives.push_back(direct_sum(projective_module(r, kNabla, 1), projective_module(r, kDelta)));
    linalg::SparseMatrix d1(2, 4);
    d1.columns = {{}, linalg::unit_vector(1), linalg::unit_vector(0), linalg::unit_vector(1)};
    res.differentials.push_back(d1);
    EXPECT_FALSE(check_resolution(res).minimal);
}

TEST(Homalg, Guards)
{
    const auto r = a1();
    EXPECT_THROW(minimal_resolution(simple_module(r, kDelta), 13), resource_error);
    EXPECT_NO_THROW(minimal_resolution(simple_module(r, kDelta), 13, ResolutionLimits{3, 16}));
    const auto big = make_ring(endomorphism_algebra(4));
    EXPECT_THROW(minimal_resolution(simple_module(big, 0), 2), resource_error);
}

TEST(Homalg, RejectsMalformedModules)
{
    const auto r = a1();
    // a: Δ -> ∇ acting on a vector at ∇.
    linalg::SparseMatrix m(2, 2);
    m.columns[1] = linalg::unit_vector(0);
    EXPECT_THROW(RightModule(r, {kDelta, kNabla}, {1, 0}, {{1, m}}), usage_error);
    // Degree-0 element given an action.
    EXPECT_THROW(RightModule(r, {kDelta}, {0}, {{0, linalg::SparseMatrix(1, 1)}}), usage_error);
}

TEST(Homalg, RelationViolationIsDetected)
{
    const auto r = a1();
    // Δ <-> ∇ with both arrows acting nontrivially: b∘a = 0 is violated.
    linalg::SparseMatrix a(2, 2), b(2, 2);
    a.columns[0] = linalg::unit_vector(1);
    b.columns[1] = linalg::unit_vector(0);
    const RightModule bad(r, {kDelta, kNabla}, {0, 1}, {{1, a}});
    EXPECT_TRUE(bad.satisfies_relations());
    EXPECT_THROW(RightModule(r, {kDelta, kNabla}, {0, 1}, {{1, a}, {2, b}}), usage_error);  // b breaks grading
    const RightModule loop(r, {kDelta, kNabla, kDelta}, {0, 1, 2},
                           {{1, [] {
                                 linalg::SparseMatrix x(3, 3);
                                 x.columns[0] = linalg::unit_vector(1);
                                 return x;
                             }()},
                            {2, [] {
                                 linalg::SparseMatrix x(3, 3);
                                 x.columns[1] = linalg::unit_vector(2);
                                 return x;
                             }()}});
    EXPECT_FALSE(loop.satisfies_relations());
}

TEST(Homalg, RingNeedsGenerationInDegreesZeroOne)
{
    AlgebraBuilder b;
    b.add_vertex("pt");
    const auto e = b.add_element(0, 0, 0);
    const auto x = b.add_element(0, 0, 1);
    const auto y = b.add_element(0, 0, 2);
    for (auto z : {e, x, y}) {
        b.add_product(z, e, z, Rational(1));
        if (z != e)
            b.add_product(e, z, z, Rational(1));
    }
    EXPECT_THROW(make_ring(std::move(b).build()), usage_error);
}
