// steinberg_quiver: build, verify and report on the rank-d algebras.
// Exit codes: 0 success, 1 verification failure, 2 usage or resource error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <steinberg/steinberg.hpp>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace steinberg;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
    std::optional<unsigned> d;
    std::string type;
    unsigned max_k = 6;
    std::string format;
    std::string out;
    unsigned jobs = 1;
    bool allow_large = false;
    std::string from;
};

unsigned rank_of(const Config& c)
{
    if (c.d && !c.type.empty())
        throw usage_error("give either --d or --type, not both");
    if (c.d)
        return *c.d;
    if (!c.type.empty())
        return cartan_rank(c.type);
    throw usage_error("one of --d or --type is required");
}

void guard(unsigned d, unsigned normal, unsigned large, const Config& c)
{
    const unsigned limit = c.allow_large ? large : normal;
    if (d > limit)
        throw resource_error("d = " + std::to_string(d) + " exceeds the limit " + std::to_string(limit) +
                             (c.allow_large || normal == large ? "" : " (--allow-large raises it to " + std::to_string(large) + ")"));
}

std::string format_or(const Config& c, const std::string& fallback, std::initializer_list<const char*> allowed)
{
    const std::string f = c.format.empty() ? fallback : c.format;
    for (const char* a : allowed)
        if (f == a)
            return f;
    throw usage_error("format '" + f + "' is not available for this command");
}

std::uint64_t seed_from_env()
{
    const char* s = std::getenv("STEINBERG_QUIVER_SEED");
    if (!s || !*s)
        return 0;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != std::string(s).size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw usage_error(std::string("STEINBERG_QUIVER_SEED must be an unsigned integer, got '") + s + "'");
    }
}

void emit(const Config& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw usage_error("cannot write " + c.out);
    f << text;
}

void add_type(json& j, const Config& c)
{
    if (!c.type.empty())
        j["type"] = c.type;
}

const char* const kAlgebraFiles[] = {"dat_ext.json", "path_quotient.json", "endomorphism.json"};

int cmd_build(const Config& c)
{
    const unsigned d = rank_of(c);
    guard(d, 6, kMaxAlgebraRank, c);
    format_or(c, "json", {"json"});
    const fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
    fs::create_directories(dir);
    const auto t = checks::construct_algebras(d);
    const StructureAlgebra* algs[] = {t.dat.get(), t.quotient.get(), t.endo.get()};
    for (std::size_t k = 0; k < 3; ++k) {
        json j = algebra_to_json(*algs[k]);
        std::ofstream f(dir / kAlgebraFiles[k], std::ios::binary);
        if (!f)
            throw usage_error("cannot write " + (dir / kAlgebraFiles[k]).string());
        f << j.dump(1) << "\n";
        std::cerr << "wrote " << (dir / kAlgebraFiles[k]).string() << " (" << algs[k]->dimension() << " basis elements)\n";
    }
    return 0;
}

checks::Algebras load_algebras(const fs::path& dir, unsigned d)
{
    std::shared_ptr<const StructureAlgebra> loaded[3];
    for (std::size_t k = 0; k < 3; ++k) {
        std::ifstream f(dir / kAlgebraFiles[k]);
        if (!f)
            throw usage_error("cannot read " + (dir / kAlgebraFiles[k]).string());
        nlohmann::json j;
        try {
            f >> j;
        } catch (const nlohmann::json::exception& e) {
            throw usage_error((dir / kAlgebraFiles[k]).string() + ": " + e.what());
        }
        loaded[k] = std::make_shared<const StructureAlgebra>(algebra_from_json(j));
        if (loaded[k]->subset_rank() != d)
            throw usage_error((dir / kAlgebraFiles[k]).string() + " has a different rank");
    }
    return checks::Algebras{loaded[0], loaded[1], loaded[2]};
}

std::string verify_markdown(unsigned d, const Config& c, std::uint64_t seed, const std::vector<checks::CheckResult>& rs)
{
    std::ostringstream os;
    os << "# Verification, d = " << d;
    if (!c.type.empty())
        os << " (type " << c.type << ")";
    os << "\n\nseed " << seed << ", max_k " << c.max_k << "\n\n";
    os << "| check | status | detail |\n|---|---|---|\n";
    for (const auto& r : rs) {
        os << "| " << r.name << " | " << checks::to_string(r.status) << " | " << r.detail;
        if (!r.counterexample.is_null())
            os << " `" << r.counterexample.dump() << "`";
        os << " |\n";
    }
    os << "\n" << (checks::all_passed(rs) ? "All checks passed." : "Some checks FAILED.") << "\n";
    return os.str();
}

int cmd_verify(const Config& c)
{
    const unsigned d = rank_of(c);
    guard(d, 6, kMaxAlgebraRank, c);
    const std::string fmt = format_or(c, "json", {"json", "markdown"});
    if (c.max_k > 12 && !c.allow_large)
        throw resource_error("--max-k above 12 needs --allow-large");
    checks::Options opt;
    opt.seed = seed_from_env();
    opt.max_k = c.max_k;
    opt.jobs = c.jobs;
    const auto t = c.from.empty() ? checks::construct_algebras(d) : load_algebras(c.from, d);
    const auto results = checks::run_all(t, d, opt);

    std::string text;
    if (fmt == "json") {
        json j;
        j["d"] = d;
        add_type(j, c);
        j["seed"] = opt.seed;
        j["max_k"] = opt.max_k;
        j["source"] = c.from.empty() ? "constructed" : "loaded";
        auto arr = json::array();
        auto failures = json::array();
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& r : results) {
            json e;
            e["name"] = r.name;
            e["status"] = checks::to_string(r.status);
            e["detail"] = r.detail;
            if (!r.counterexample.is_null())
                e["counterexample"] = r.counterexample;
            arr.push_back(std::move(e));
            ++counts[static_cast<int>(r.status)];
            if (r.status == checks::Status::fail)
                failures.push_back(json{{"name", r.name}, {"counterexample", r.counterexample}});
        }
        j["checks"] = std::move(arr);
        j["summary"] = json{{"passed", counts[0]}, {"failed", counts[1]}, {"skipped", counts[2]}};
        j["failures"] = std::move(failures);
        j["all_passed"] = checks::all_passed(results);
        text = j.dump(2) + "\n";
    } else {
        text = verify_markdown(d, c, opt.seed, results);
    }
    emit(c, text);
    return checks::all_passed(results) ? 0 : kExitFail;
}

int cmd_ext_table(const Config& c)
{
    const unsigned d = rank_of(c);
    const std::string fmt = format_or(c, "json", {"json", "markdown"});
    homalg::ResolutionLimits limits;
    if (c.allow_large) {
        limits.max_rank = 5;
        limits.max_k = 24;
    }
    guard(d, limits.max_rank, limits.max_rank, c);
    if (c.max_k > limits.max_k)
        throw resource_error("--max-k " + std::to_string(c.max_k) + " exceeds the limit " + std::to_string(limits.max_k));
    const auto ring = homalg::make_ring(endomorphism_algebra(d));
    const auto& a = *ring->algebra;
    const auto res = checks::simple_resolutions(ring, c.max_k, c.jobs, limits);

    struct Row {
        SubsetIndex i, j;
        std::vector<std::size_t> dims;
    };
    std::vector<Row> rows;
    for (VertexId i = 0; i < a.vertex_count(); ++i)
        for (VertexId j = 0; j < a.vertex_count(); ++j)
            rows.push_back(Row{a.vertex_subset(i), a.vertex_subset(j), homalg::ext_dimensions(res[i], j, c.max_k)});
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        return std::make_pair(x.i.roots(), x.j.roots()) < std::make_pair(y.i.roots(), y.j.roots());
    });

    if (fmt == "json") {
        json j;
        j["d"] = d;
        add_type(j, c);
        j["max_k"] = c.max_k;
        auto entries = json::array();
        for (const auto& r : rows)
            entries.push_back(json{{"I", r.i.roots()}, {"J", r.j.roots()}, {"dims", r.dims}});
        j["entries"] = std::move(entries);
        emit(c, j.dump(2) + "\n");
        return 0;
    }
    // Grid of the lowest k with Ext^k(S_I, S_J) != 0, rows I, columns J.
    std::vector<SubsetIndex> order;
    for (const auto& s : all_subsets(d))
        order.push_back(s);
    std::sort(order.begin(), order.end(), [](const SubsetIndex& x, const SubsetIndex& y) { return x.roots() < y.roots(); });
    std::ostringstream os;
    os << "# Lowest nonzero Ext degree, d = " << d << " (k <= " << c.max_k << ")\n\n| I \\ J |";
    for (const auto& s : order)
        os << " " << s.label() << " |";
    os << "\n|---|";
    for (std::size_t k = 0; k < order.size(); ++k)
        os << "---|";
    os << "\n";
    for (const auto& i : order) {
        os << "| " << i.label() << " |";
        for (const auto& j : order) {
            const auto dims = homalg::ext_dimensions(res[i.bits()], j.bits(), c.max_k);
            const auto it = std::find_if(dims.begin(), dims.end(), [](std::size_t n) { return n != 0; });
            os << " " << (it == dims.end() ? std::string("-") : std::to_string(it - dims.begin())) << " |";
        }
        os << "\n";
    }
    emit(c, os.str());
    return 0;
}

int cmd_report(const Config& c)
{
    const unsigned d = rank_of(c);
    guard(d, langlands::kMaxPacketRank, langlands::kMaxPacketRank, c);
    const std::string fmt = format_or(c, "json", {"json", "markdown"});
    const auto report = langlands::packet_report(d);
    if (fmt == "json") {
        json j;
        j["d"] = d;
        add_type(j, c);
        auto entries = json::array();
        for (const auto& e : report) {
            json item;
            item["I"] = e.index.roots();
            item["steinberg"] = e.steinberg;
            item["az_dual"] = e.az_dual.roots();
            item["standard"] = e.standard;
            item["orbit"] = json{{"dim", e.orbit.dimension()}, {"pattern", e.orbit.pattern()}};
            item["parameter_point"] = langlands::parameter_point(e.index).x;
            item["ic"] = e.ic;
            item["projective"] = e.projective;
            item["enhancement"] = e.enhancement;
            item["exponents_doubled"] = e.exponents_doubled;
            if (!e.arthur.empty())
                item["arthur"] = e.arthur;
            entries.push_back(std::move(item));
        }
        j["entries"] = std::move(entries);
        emit(c, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "# Packets, d = " << d << "\n\n| I | representation | dual | orbit | dim | IC | projective |\n|---|---|---|---|---|---|---|\n";
    for (const auto& e : report)
        os << "| " << e.index.label() << " | " << e.steinberg << " | " << e.az_dual.label() << " | `" << e.orbit.pattern()
           << "` | " << e.orbit.dimension() << " | " << e.ic << " | " << e.projective << " |\n";
    emit(c, os.str());
    return 0;
}

int cmd_export_quiver(const Config& c)
{
    const unsigned d = rank_of(c);
    guard(d, 10, quiver::kMaxQuiverRank, c);
    format_or(c, "dot", {"dot"});
    emit(c, quiver::to_dot(quiver::build_hypercube(d)));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Build and verify the rank-d Ext, path-quotient and endomorphism algebras"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Config c;
    unsigned d_value = 0;
    auto* d_opt = app.add_option("--d", d_value, "rank d (number of simple roots)");
    app.add_option("--type", c.type, "Cartan type label, e.g. A3; only its rank is used");
    app.add_option("--max-k", c.max_k, "highest homological degree")->capture_default_str();
    app.add_option("--format", c.format, "json | markdown | dot");
    app.add_option("--out", c.out, "output file (build: output directory)");
    app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    app.add_flag("--allow-large", c.allow_large, "raise the size guards");

    auto* build = app.add_subcommand("build", "write the three algebras as JSON");
    auto* verify = app.add_subcommand("verify", "run every check for rank d");
    verify->add_option("--from", c.from, "verify algebras previously written by build");
    auto* ext = app.add_subcommand("ext-table", "Ext dimensions between simples");
    auto* report = app.add_subcommand("report", "orbit and packet dictionary");
    auto* dot = app.add_subcommand("export-quiver", "hypercube double quiver as DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (d_opt->count() > 0)
        c.d = d_value;

    try {
        if (*build)
            return cmd_build(c);
        if (*verify)
            return cmd_verify(c);
        if (*ext)
            return cmd_ext_table(c);
        if (*report)
            return cmd_report(c);
        if (*dot)
            return cmd_export_quiver(c);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
