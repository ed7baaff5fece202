#pragma once

// Named verification checks for a fixed rank d. Each check returns a
// status with a short detail and, on failure, a JSON counterexample.
// Checks outside their supported range report "skipped".

#include <cstdint>
#include <functional>
#include <future>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "algebra.hpp"
#include "algebra_map.hpp"
#include "homalg.hpp"
#include "langlands.hpp"
#include "quiver.hpp"
#include "subsets.hpp"

namespace steinberg::checks {

using json = nlohmann::ordered_json;

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    Status status = Status::pass;
    std::string detail;
    json counterexample;  // null unless failed
};

struct Algebras {
    std::shared_ptr<const StructureAlgebra> dat;
    std::shared_ptr<const StructureAlgebra> quotient;
    std::shared_ptr<const StructureAlgebra> endo;

    std::vector<std::pair<std::string, const StructureAlgebra*>> named() const
    {
        return {{"dat_ext", dat.get()}, {"path_quotient", quotient.get()}, {"endomorphism", endo.get()}};
    }
};

inline Algebras construct_algebras(unsigned d, unsigned max_d = kMaxAlgebraRank)
{
    return Algebras{std::make_shared<const StructureAlgebra>(dat_ext_algebra(d, max_d)),
                    std::make_shared<const StructureAlgebra>(path_quotient_algebra(d, max_d)),
                    std::make_shared<const StructureAlgebra>(endomorphism_algebra(d, max_d))};
}

struct Options {
    std::uint64_t seed = 0;
    std::size_t samples = 100000;
    unsigned max_k = 6;
    unsigned jobs = 1;
};

namespace detail {

inline CheckResult pass(std::string name, std::string detail) { return {std::move(name), Status::pass, std::move(detail), {}}; }
inline CheckResult fail(std::string name, std::string detail, json where = {})
{
    return {std::move(name), Status::fail, std::move(detail), std::move(where)};
}
inline CheckResult skip(std::string name, std::string why) { return {std::move(name), Status::skipped, std::move(why), {}}; }

inline json element_json(const StructureAlgebra& a, BasisId b)
{
    const auto& e = a.element(b);
    json j;
    j["id"] = b;
    j["source"] = a.vertex_subset(e.source).roots();
    j["target"] = a.vertex_subset(e.target).roots();
    j["degree"] = e.degree;
    return j;
}

inline std::uint64_t pow4(unsigned d) { return std::uint64_t{1} << (2 * d); }

} // namespace detail

inline CheckResult check_dimension(const Algebras& t, unsigned d)
{
    for (const auto& [name, a] : t.named())
        if (a->dimension() != detail::pow4(d))
            return detail::fail("dimension", name + " has dimension " + std::to_string(a->dimension()),
                                json{{"algebra", name}, {"dimension", a->dimension()}});
    return detail::pass("dimension", "all three algebras have dimension 4^" + std::to_string(d) + " = " +
                                         std::to_string(detail::pow4(d)));
}

// Identity-on-labels maps E -> C[Q]/K -> A and their degree preservation.
inline CheckResult check_isomorphisms(const Algebras& t, unsigned d, unsigned max_d = 5)
{
    const std::string name = "isomorphism";
    if (d > max_d)
        return detail::skip(name, "all-pairs multiplicativity is run for d <= " + std::to_string(max_d));
    std::size_t pairs = 0;
    const std::pair<const char*, const char*> legs[] = {{"dat_ext", "path_quotient"}, {"path_quotient", "endomorphism"}};
    const std::shared_ptr<const StructureAlgebra> algs[] = {t.dat, t.quotient, t.endo};
    for (std::size_t k = 0; k < 2; ++k) {
        IsomorphismReport r;
        try {
            r = verify_isomorphism(identity_on_labels(algs[k], algs[k + 1]));
        } catch (const usage_error& e) {
            return detail::fail(name, std::string(legs[k].first) + " -> " + legs[k].second + ": " + e.what(),
                                json{{"map", std::string(legs[k].first) + " -> " + legs[k].second}});
        }
        pairs += r.pairs_checked;
        if (!r.ok) {
            json where{{"map", std::string(legs[k].first) + " -> " + legs[k].second}, {"check", r.failed_check}};
            if (r.counterexample) {
                where["g"] = detail::element_json(*algs[k], r.counterexample->first);
                where["f"] = detail::element_json(*algs[k], r.counterexample->second);
            }
            return detail::fail(name, r.failed_check + ": " + r.detail, std::move(where));
        }
    }
    return detail::pass(name, "E -> C[Q]/K -> A multiplicative on " + std::to_string(pairs) + " basis pairs");
}

// deg = δ(source, target) everywhere; the three Hilbert matrices agree.
inline CheckResult check_grading(const Algebras& t)
{
    const std::string name = "grading";
    for (const auto& [an, a] : t.named()) {
        for (BasisId b = 0; b < a->dimension(); ++b) {
            const auto& e = a->element(b);
            if (e.degree != delta(a->vertex_subset(e.source), a->vertex_subset(e.target)))
                return detail::fail(name, an + ": degree differs from the symmetric-difference distance",
                                    json{{"algebra", an}, {"element", detail::element_json(*a, b)}});
        }
    }
    const auto h = hilbert_matrix(*t.dat);
    if (!(hilbert_matrix(*t.quotient).entries == h.entries) || !(hilbert_matrix(*t.endo).entries == h.entries))
        return detail::fail(name, "Hilbert matrices differ");
    return detail::pass(name, "every basis element has degree delta(source, target); Hilbert matrices agree");
}

// g∘f != 0 iff δ is additive along source(f), target(f), target(g); the
// nonzero products are the unique element between the outer endpoints.
inline CheckResult check_product_law(const Algebras& t)
{
    const std::string name = "product_law";
    std::size_t composable = 0;
    for (const auto& [an, a] : t.named()) {
        for (BasisId f = 0; f < a->dimension(); ++f) {
            const auto& ef = a->element(f);
            for (BasisId g : a->elements_from(ef.target)) {
                ++composable;
                const auto& eg = a->element(g);
                const auto i = a->vertex_subset(ef.source);
                const auto j = a->vertex_subset(ef.target);
                const auto k = a->vertex_subset(eg.target);
                const LinComb& p = a->product(g, f);
                const bool additive = delta(i, j) + delta(j, k) == delta(i, k);
                bool ok = p.empty() != additive;
                if (ok && additive) {
                    const auto h = a->element_between(ef.source, eg.target);
                    ok = h && p == linalg::unit_vector(*h);
                }
                if (!ok)
                    return detail::fail(name, an + ": product law fails",
                                        json{{"algebra", an},
                                             {"g", detail::element_json(*a, g)},
                                             {"f", detail::element_json(*a, f)}});
            }
        }
        // Non-composable products are zero by the typing invariant of the algebra.
    }
    return detail::pass(name, std::to_string(composable) + " composable pairs obey the delta-additivity law");
}

inline CheckResult check_associativity(const Algebras& t, unsigned d, const Options& opt)
{
    const std::string name = "associativity";
    std::size_t triples = 0;
    for (const auto& [an, a] : t.named()) {
        const AssociativityReport r =
            d <= 2 ? check_associativity_exhaustive(*a) : check_associativity_sampled(*a, opt.samples, opt.seed);
        triples += r.triples_checked;
        if (r.violation) {
            const auto& v = *r.violation;
            return detail::fail(name,
                                an + ": (h∘g)∘f != h∘(g∘f) for triple (" + std::to_string(v.h) + ", " +
                                    std::to_string(v.g) + ", " + std::to_string(v.f) + ")",
                                json{{"algebra", an},
                                     {"h", detail::element_json(*a, v.h)},
                                     {"g", detail::element_json(*a, v.g)},
                                     {"f", detail::element_json(*a, v.f)}});
        }
    }
    return detail::pass(name, std::string(d <= 2 ? "exhaustive" : "sampled (seed " + std::to_string(opt.seed) + ")") +
                                  ", " + std::to_string(triples) + " triples");
}

inline CheckResult check_kernel_ideal(unsigned d)
{
    const std::string name = "kernel_ideal";
    if (d > 3)
        return detail::skip(name, "path enumeration is run for d <= 3");
    const auto r = quiver::kernel_ideal_closure_check(d, d + 1);
    if (!r.ok)
        return detail::fail(name, r.certificate, json{{"certificate", r.certificate}});
    return detail::pass(name, "kernel generators span a two-sided ideal up to path length " + std::to_string(d + 1) +
                                  "; quotient dimension " + std::to_string(r.total_quotient_dim()));
}

inline CheckResult check_generation(const Algebras& t, unsigned d)
{
    const std::string name = "generated_in_degrees_0_1";
    if (d > 6)
        return detail::skip(name, "run for d <= 6");
    for (const auto& [an, a] : t.named())
        if (!check_generated_in_degrees_01(*a))
            return detail::fail(name, an + " is not generated in degrees 0 and 1", json{{"algebra", an}});
    return detail::pass(name, "every degree-k piece is spanned by degree-1 times degree-(k-1) products");
}

// Minimal resolutions of every simple over A_d, one per vertex.
inline std::vector<homalg::Resolution> simple_resolutions(const std::shared_ptr<const homalg::Ring>& ring, unsigned max_k,
                                                          unsigned jobs = 1, homalg::ResolutionLimits limits = {})
{
    const std::size_t n = ring->algebra->vertex_count();
    std::vector<std::future<homalg::Resolution>> futures;
    std::vector<homalg::Resolution> out;
    auto run = [ring, max_k, limits](VertexId v) {
        return homalg::minimal_resolution(homalg::simple_module(ring, v), max_k, limits);
    };
    for (VertexId v = 0; v < n; ++v) {
        if (jobs > 1) {
            futures.push_back(std::async(std::launch::async, run, v));
            continue;
        }
        out.push_back(run(v));
    }
    for (auto& f : futures)
        out.push_back(f.get());
    return out;
}

inline CheckResult check_koszul(const StructureAlgebra& a, const std::vector<homalg::Resolution>& res, unsigned max_k)
{
    const std::string name = "koszul_linear_resolutions";
    for (VertexId v = 0; v < res.size(); ++v) {
        const auto c = homalg::check_resolution(res[v]);
        const json where{{"simple", a.vertex_subset(v).roots()}};
        if (!c.exact)
            return detail::fail(name, "resolution of S_" + a.vertex_subset(v).label() + " is not exact: " + c.detail, where);
        if (!c.minimal)
            return detail::fail(name, "resolution of S_" + a.vertex_subset(v).label() + " is not minimal: " + c.detail, where);
        if (!homalg::is_linear_resolution(res[v]))
            return detail::fail(name, "resolution of S_" + a.vertex_subset(v).label() + " is not linear", where);
    }
    return detail::pass(name, "all " + std::to_string(res.size()) +
                                  " simples have exact, minimal, linear resolutions up to degree " +
                                  std::to_string(max_k) + " (evidence for Koszulity, not a proof)");
}

inline CheckResult check_ext_kunneth(const StructureAlgebra& a, unsigned d, const std::vector<homalg::Resolution>& res,
                                     unsigned max_k)
{
    const std::string name = "ext_kunneth";
    for (VertexId i = 0; i < res.size(); ++i) {
        const auto si = a.vertex_subset(i);
        for (VertexId j = 0; j < a.vertex_count(); ++j) {
            const auto sj = a.vertex_subset(j);
            const auto dims = homalg::ext_dimensions(res[i], j, max_k);
            for (unsigned k = 0; k <= max_k; ++k) {
                const auto expected = homalg::kunneth_oracle(d, si, sj, k);
                if (dims[k] != expected)
                    return detail::fail(name, "Ext^" + std::to_string(k) + "(S_" + si.label() + ", S_" + sj.label() +
                                                  ") has dimension " + std::to_string(dims[k]) + ", oracle " +
                                                  std::to_string(expected),
                                        json{{"I", si.roots()}, {"J", sj.roots()}, {"k", k}});
            }
            const auto first = std::find_if(dims.begin(), dims.end(), [](std::size_t n) { return n != 0; });
            const unsigned dij = delta(si, sj);
            if (dij <= max_k && (first == dims.end() || static_cast<unsigned>(first - dims.begin()) != dij || *first != 1))
                return detail::fail(name, "lowest nonzero Ext(S_" + si.label() + ", S_" + sj.label() +
                                              ") is not one-dimensional in degree delta",
                                    json{{"I", si.roots()}, {"J", sj.roots()}});
        }
    }
    return detail::pass(name, "Ext dimensions match the Kunneth count for k <= " + std::to_string(max_k) +
                                  "; lowest degree is delta(I,J) with dimension 1");
}

inline CheckResult check_projective_covers(const std::shared_ptr<const homalg::Ring>& ring, unsigned d)
{
    const std::string name = "projective_covers";
    if (d > 4)
        return detail::skip(name, "run for d <= 4");
    const auto& a = *ring->algebra;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        const json where{{"vertex", a.vertex_subset(v).roots()}};
        const auto p = homalg::projective_module(ring, v);
        const auto t = homalg::top(p);
        if (t.generators != std::vector<homalg::Generator>{{v, 0}})
            return detail::fail(name, "top of P_" + a.vertex_subset(v).label() + " is not S_" + a.vertex_subset(v).label(), where);
        const auto cover = homalg::projective_cover(homalg::simple_module(ring, v));
        if (!(cover.projective == p) || linalg::rank(cover.surjection) != 1)
            return detail::fail(name, "projective cover of S_" + a.vertex_subset(v).label() + " is not P_" +
                                          a.vertex_subset(v).label(), where);
    }
    return detail::pass(name, "top(P_I) = S_I and cover(S_I) = P_I for all " + std::to_string(a.vertex_count()) + " vertices");
}

inline CheckResult check_packets(const StructureAlgebra& endo, unsigned d)
{
    const std::string name = "orbits_and_packets";
    if (d > 6)
        return detail::skip(name, "run for d <= 6");
    const auto report = langlands::packet_report(d);
    if (report.size() != (std::size_t{1} << d) || report.size() != endo.vertex_count())
        return detail::fail(name, "packet count differs from 2^d");
    const auto exps = langlands::infinitesimal_exponents_doubled(d);
    for (const auto& e : report) {
        const json where{{"I", e.index.roots()}};
        if (e.orbit.dimension() != complement(e.index).size() || e.orbit.dimension() + e.index.size() != d)
            return detail::fail(name, "orbit dimension differs from |I^c|", where);
        if (langlands::az_dual(e.az_dual) != e.index)
            return detail::fail(name, "duality is not an involution", where);
        if (!langlands::lies_on(langlands::parameter_point(e.index), e.orbit))
            return detail::fail(name, "parameter point is off its orbit", where);
        if (e.exponents_doubled != exps || e.enhancement != "trivial")
            return detail::fail(name, "entries do not share one infinitesimal parameter", where);
        if (e.ic != "IC_" + endo.vertex_labels()[e.index.bits()])
            return detail::fail(name, "packet label does not match the simple at that vertex", where);
    }
    if (d > 0 && (report.front().steinberg != "St_G" || report.back().steinberg != "triv_G" ||
                  langlands::az_dual(report.front().index) != report.back().index))
        return detail::fail(name, "duality does not exchange the Steinberg and trivial entries");
    // Closure order from coordinatewise closures: {0} only contains 0.
    for (const auto& i : report) {
        for (const auto& j : report) {
            bool contained = true;
            for (unsigned c = 0; c < d; ++c)
                if (i.orbit.coords[c] == langlands::Coordinate::zero && j.orbit.coords[c] != langlands::Coordinate::zero)
                    contained = false;
            const bool leq = langlands::closure_leq(i.index, j.index);
            if (leq != contained || leq != is_subset_of(i.index, j.index) ||
                leq != langlands::closure_leq(langlands::az_dual(j.index), langlands::az_dual(i.index)))
                return detail::fail(name, "closure order disagrees with the orbit patterns",
                                    json{{"I", i.index.roots()}, {"J", j.index.roots()}});
        }
    }
    return detail::pass(name, std::to_string(report.size()) +
                                  " packets; orbit dimensions, duality and closure order consistent");
}

inline std::uint64_t factorial(unsigned n)
{
    std::uint64_t f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

inline CheckResult check_geodesics(unsigned d)
{
    const std::string name = "geodesic_count";
    if (d > 4)
        return detail::skip(name, "path enumeration is run for d <= 4");
    const quiver::HypercubeQuiver q(d);
    const std::size_t nv = q.vertex_count();
    for (const auto& i : q.vertices()) {
        std::vector<std::uint64_t> found(nv, 0);
        for (const auto& p : quiver::enumerate_paths(q, i, d))
            if (p.length() == delta(i, p.target()))
                ++found[p.target().bits()];
        for (const auto& k : q.vertices()) {
            const auto expected = factorial(delta(i, k));
            if (found[k.bits()] != expected || count_geodesics(i, k) != expected)
                return detail::fail(name, "geodesic count " + i.label() + " -> " + k.label(),
                                    json{{"I", i.roots()}, {"K", k.roots()}, {"enumerated", found[k.bits()]}});
        }
    }
    return detail::pass(name, "enumerated geodesics number delta(I,K)! for all pairs");
}

// The full suite, in a fixed order. Independent checks run concurrently
// when opt.jobs > 1; results are returned in suite order.
inline std::vector<CheckResult> run_all(const Algebras& t, unsigned d, const Options& opt)
{
    std::vector<std::function<CheckResult()>> tasks{
        [&] { return check_dimension(t, d); },
        [&] { return check_isomorphisms(t, d); },
        [&] { return check_grading(t); },
        [&] { return check_product_law(t); },
        [&] { return check_associativity(t, d, opt); },
        [&] { return check_kernel_ideal(d); },
        [&] { return check_generation(t, d); },
        [&] { return check_geodesics(d); },
        [&] { return check_packets(*t.endo, d); },
    };

    std::shared_ptr<const homalg::Ring> ring;
    std::string ring_error;
    try {
        ring = homalg::make_ring(t.endo);
    } catch (const usage_error& e) {
        ring_error = e.what();
    }
    auto module_checks = [&]() -> std::vector<CheckResult> {
        const char* names[] = {"projective_covers", "koszul_linear_resolutions", "ext_kunneth"};
        if (!ring) {
            std::vector<CheckResult> out;
            for (const char* n : names)
                out.push_back(detail::fail(n, "module layer unavailable: " + ring_error));
            return out;
        }
        std::vector<CheckResult> out{check_projective_covers(ring, d)};
        if (d > 3) {
            out.push_back(detail::skip(names[1], "resolutions are run for d <= 3"));
            out.push_back(detail::skip(names[2], "resolutions are run for d <= 3"));
            return out;
        }
        const auto res = simple_resolutions(ring, opt.max_k, opt.jobs);
        out.push_back(check_koszul(*t.endo, res, opt.max_k));
        out.push_back(check_ext_kunneth(*t.endo, d, res, opt.max_k));
        return out;
    };

    std::vector<CheckResult> results;
    if (opt.jobs > 1) {
        std::vector<std::future<CheckResult>> futures;
        for (auto& task : tasks)
            futures.push_back(std::async(std::launch::async, task));
        auto modules = std::async(std::launch::async, module_checks);
        for (auto& f : futures)
            results.push_back(f.get());
        for (auto& r : modules.get())
            results.push_back(std::move(r));
    } else {
        for (auto& task : tasks)
            results.push_back(task());
        for (auto& r : module_checks())
            results.push_back(std::move(r));
    }
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results)
{
    return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::fail; });
}

} // namespace steinberg::checks
