// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock
// limits where the criterion states one. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <steinberg/steinberg.hpp>

using namespace steinberg;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome failed(std::string why) { return Outcome{false, std::move(why)}; }

Outcome from_check(const checks::CheckResult& r)
{
    if (r.status == checks::Status::pass)
        return Outcome{true, r.detail};
    return failed(r.name + " " + checks::to_string(r.status) + ": " + r.detail +
                  (r.counterexample.is_null() ? "" : " " + r.counterexample.dump()));
}

std::shared_ptr<const StructureAlgebra> share(StructureAlgebra a)
{
    return std::make_shared<const StructureAlgebra>(std::move(a));
}

std::string run_cli(const std::string& args, int& code)
{
    const std::string cmd = "\"" + std::string(STEINBERG_CLI) + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, n);
    const int status = pclose(p);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// ---------------------------------------------------------------------------

Outcome dimension_formula()
{
    for (unsigned d = 0; d <= 6; ++d) {
        const std::size_t expected = std::size_t{1} << (2 * d);
        const auto t = checks::construct_algebras(d);
        for (const auto& [name, a] : t.named())
            if (a->dimension() != expected)
                return failed(name + " at d=" + std::to_string(d) + " has dimension " + std::to_string(a->dimension()));
    }
    return Outcome{true, "dim = 4^d for all three algebras, d = 0..6"};
}

Outcome triple_isomorphism()
{
    std::size_t pairs = 0;
    for (unsigned d = 0; d <= 5; ++d) {
        const auto t = checks::construct_algebras(d);
        for (const auto& [x, y] : {std::pair{t.dat, t.quotient}, std::pair{t.quotient, t.endo}}) {
            const auto r = verify_isomorphism(identity_on_labels(x, y));
            pairs += r.pairs_checked;
            if (!r.ok)
                return failed("d=" + std::to_string(d) + ": " + r.failed_check + ": " + r.detail);
            if (r.pairs_checked != x->dimension() * x->dimension())
                return failed("not every basis pair was checked at d=" + std::to_string(d));
        }
    }
    return Outcome{true, "E -> C[Q]/K -> A multiplicative on all " + std::to_string(pairs) + " basis pairs, d = 0..5"};
}

Outcome grading()
{
    for (unsigned d = 0; d <= 6; ++d) {
        const auto t = checks::construct_algebras(d);
        const auto r = checks::check_grading(t);
        if (r.status != checks::Status::pass)
            return from_check(r);
        // Identity-on-labels maps are degree-preserving: same degree at every label.
        const auto m1 = identity_on_labels(t.dat, t.quotient);
        const auto m2 = identity_on_labels(t.quotient, t.endo);
        for (BasisId b = 0; b < t.dat->dimension(); ++b) {
            const auto q = m1.images[b].front().index;
            const auto a = m2.images[q].front().index;
            if (t.dat->element(b).degree != t.quotient->element(q).degree ||
                t.quotient->element(q).degree != t.endo->element(a).degree)
                return failed("degree changes under the label maps at d=" + std::to_string(d));
        }
    }
    return Outcome{true, "degree = delta(source, target) and label maps preserve degree, d = 0..6"};
}

// Over all basis pairs, including non-composable ones, against a
// set-theoretic oracle: J between I and K iff I∩K ⊆ J ⊆ I∪K.
Outcome product_law()
{
    std::uint64_t pairs = 0;
    for (unsigned d = 0; d <= 6; ++d) {
        const auto t = checks::construct_algebras(d);
        const std::size_t nv = std::size_t{1} << d;
        for (const auto& [name, a] : t.named()) {
            for (BasisId g = 0; g < a->dimension(); ++g) {
                const auto& eg = a->element(g);
                for (BasisId f = 0; f < a->dimension(); ++f) {
                    ++pairs;
                    const auto& ef = a->element(f);
                    const LinComb& p = a->product(g, f);
                    if (ef.target != eg.source) {
                        if (!p.empty())
                            return failed(name + ": non-composable product is nonzero");
                        continue;
                    }
                    const std::size_t i = ef.source, j = ef.target, k = eg.target;
                    const bool between = ((i & k) & ~j) == 0 && (j & ~(i | k)) == 0;
                    if (between != !p.empty() || (between && p != linalg::unit_vector(i * nv + k)))
                        return failed(name + " at d=" + std::to_string(d) + ": g=" + std::to_string(g) +
                                      " f=" + std::to_string(f));
                }
            }
        }
    }
    return Outcome{true, "product != 0 iff delta-additive, and then the unique element with coefficient 1; " +
                             std::to_string(pairs) + " pairs, d = 0..6"};
}

Outcome associativity()
{
    std::size_t triples = 0;
    for (unsigned d = 0; d <= 5; ++d) {
        const auto t = checks::construct_algebras(d);
        checks::Options opt;
        opt.samples = 100000;
        opt.seed = 0;
        const auto r = checks::check_associativity(t, d, opt);
        if (r.status != checks::Status::pass)
            return from_check(r);
        for (const auto& [name, a] : t.named())
            triples += d <= 2 ? a->dimension() * a->dimension() * a->dimension() : 2 * opt.samples;
    }
    return Outcome{true, "exhaustive for d <= 2, 10^5 uniform + 10^5 composable seeded samples for d = 3..5; " +
                             std::to_string(triples) + " triples, no violation"};
}

Outcome kernel_structure()
{
    for (unsigned d = 0; d <= 3; ++d) {
        const auto r = quiver::kernel_ideal_closure_check(d, d + 1);
        if (!r.ok)
            return failed("d=" + std::to_string(d) + ": " + r.certificate);
        for (auto n : r.quotient_dims)
            if (n != 1)
                return failed("a graded piece of the quotient is not one-dimensional at d=" + std::to_string(d));
    }
    return Outcome{true, "kernel generators span a two-sided ideal; every (I,J) quotient piece is 1-dimensional, d <= 3"};
}

Outcome generation()
{
    for (unsigned d = 0; d <= 4; ++d)
        if (!check_generated_in_degrees_01(endomorphism_algebra(d)))
            return failed("A_" + std::to_string(d) + " is not generated in degrees 0 and 1");
    return Outcome{true, "A_d generated in degrees 0 and 1, d <= 4"};
}

Outcome koszul()
{
    std::size_t simples = 0;
    for (unsigned d = 0; d <= 3; ++d) {
        const auto ring = homalg::make_ring(endomorphism_algebra(d));
        const auto res = checks::simple_resolutions(ring, 6);
        const auto r = checks::check_koszul(*ring->algebra, res, 6);
        if (r.status != checks::Status::pass)
            return from_check(r);
        simples += res.size();
    }
    return Outcome{true, std::to_string(simples) + " simples over A_d (d <= 3) have linear minimal resolutions to degree 6"};
}

Outcome ext_tables()
{
    for (unsigned d = 0; d <= 3; ++d) {
        const auto ring = homalg::make_ring(endomorphism_algebra(d));
        const auto res = checks::simple_resolutions(ring, 6);
        const auto r = checks::check_ext_kunneth(*ring->algebra, d, res, 6);
        if (r.status != checks::Status::pass)
            return from_check(r);
    }
    return Outcome{true, "Ext^k(S_I,S_J) = Kunneth count for k <= 6, d <= 3; lowest degree delta(I,J) with dim 1"};
}

Outcome projective_covers()
{
    for (unsigned d = 0; d <= 4; ++d) {
        const auto r = checks::check_projective_covers(homalg::make_ring(endomorphism_algebra(d)), d);
        if (r.status != checks::Status::pass)
            return from_check(r);
    }
    return Outcome{true, "top(P_I) = S_I and projective_cover(S_I) = P_I, d <= 4"};
}

Outcome packets()
{
    for (unsigned d = 0; d <= 6; ++d) {
        const auto r = checks::check_packets(endomorphism_algebra(d), d);
        if (r.status != checks::Status::pass)
            return from_check(r);
        if (d > 0 && (langlands::az_dual(SubsetIndex::empty(d)) != SubsetIndex::full(d)))
            return failed("duality does not exchange the empty and full subsets");
    }
    return Outcome{true, "2^d packets, dim C_I = |I^c|, duality involutive, closure order anti-isomorphic, d <= 6"};
}

Outcome geodesic_counting()
{
    for (unsigned d = 0; d <= 4; ++d) {
        const auto r = checks::check_geodesics(d);
        if (r.status != checks::Status::pass)
            return from_check(r);
    }
    return Outcome{true, "count_geodesics = delta! = enumerated count, d <= 4"};
}

Outcome determinism()
{
    int c1 = 0, c2 = 0;
    const std::string a = run_cli("--d 3 verify", c1);
    const std::string b = run_cli("--d 3 verify", c2);
    if (c1 != 0 || c2 != 0)
        return failed("verify --d 3 exited with " + std::to_string(c1) + ", " + std::to_string(c2));
    if (a.empty() || a != b)
        return failed("the two reports differ");
    return Outcome{true, "two verify --d 3 reports are byte-identical (" + std::to_string(a.size()) + " bytes)"};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0: no stated limit
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "dimension formula", 10, dimension_formula},
        {2, "triple isomorphism", 60, triple_isomorphism},
        {3, "grading", 0, grading},
        {4, "product law", 0, product_law},
        {5, "associativity", 120, associativity},
        {6, "kernel structure", 60, kernel_structure},
        {7, "degree 0/1 generation", 0, generation},
        {8, "Koszulity evidence", 300, koszul},
        {9, "Ext tables", 0, ext_tables},
        {10, "projective covers", 0, projective_covers},
        {11, "orbit/packet combinatorics", 0, packets},
        {12, "geodesic counting", 0, geodesic_counting},
        {13, "determinism", 0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = failed(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.limit_s > 0 && secs > c.limit_s)
            o = failed("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
        failures += !o.ok;
        std::ostringstream time;
        time << std::fixed << std::setprecision(2) << secs << " s";
        if (c.limit_s > 0)
            time << " / " << std::setprecision(0) << c.limit_s << " s";
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << ": "
                  << o.detail << " [" << time.str() << "]" << std::endl;
    }
    std::cout << (failures == 0 ? "all 13 criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
