#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "mlab/io.hpp"
#include "mlab/verify.hpp"

using namespace mlab;

namespace {

struct Common {
    int genus = 0; // 0: from the curve file, else 4
    uint64_t seed = 1;
    int samples = -1;
    int depth = -1;
    std::string curves, out, name = "result";
};

struct Session {
    std::optional<Surface> S;
    std::optional<CurveTable> table;
};

// genus from --genus, else from the curve file header, else 4
void open_session(Session& s, const Common& o)
{
    std::string text;
    int g = o.genus;
    if (!o.curves.empty()) {
        text = detail::read_file(o.curves);
        int fg = parse_curves(text).genus;
        if (g && g != fg) fail(ErrorKind::parse, "--genus " + std::to_string(g) + " does not match " + o.curves);
        g = fg;
    }
    if (!g) g = 4;
    if (g < 2 || g > 12) fail(ErrorKind::precondition, "genus must be in 2..12");
    s.S.emplace(g);
    if (!text.empty()) s.table = parse_curves(text, &*s.S);
}

CurveClass curve_arg(const Session& s, const std::string& name)
{
    return resolve_curve(*s.S, s.table ? &*s.table : nullptr, name);
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorKind::parse, "cannot write " + path);
    f << text;
}

// print the curve; with --out also store it in that curve file
void emit_curve(const Session& s, const Common& o, const CurveClass& c)
{
    std::cout << curve_line(o.name, c) << "\n";
    if (o.out.empty()) return;
    CurveTable t{s.S->genus(), {}};
    if (std::filesystem::exists(o.out)) t = load_curves(o.out, &*s.S);
    t.put(o.name, c);
    write_file(o.out, serialize_curves(t));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mlab: curves and meridians on a genus-g handlebody"};
    app.require_subcommand(1);
    app.fallthrough();

    Common o;
    app.add_option("--genus", o.genus, "surface genus");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--samples", o.samples, "random instances per suite");
    app.add_option("--depth", o.depth, "search depth or bound");
    app.add_option("--curves", o.curves, "curve file");
    app.add_option("--out", o.out, "output file");
    app.add_option("--name", o.name, "name of the produced curve");

    std::string c1, c2, map_file, suite, dot_kind;
    std::vector<std::string> avoid, must_hit, dot_args;
    bool timing = false;

    auto* classify_cmd = app.add_subcommand("classify", "meridian / separating / genus type of a curve");
    classify_cmd->add_option("curve", c1)->required();

    auto* delta_cmd = app.add_subcommand("delta", "non-separating meridian inside a (1,g-1)-meridian");
    delta_cmd->add_option("curve", c1)->required();

    auto* join_cmd = app.add_subcommand("join", "join two disjoint curves along a shortest arc");
    join_cmd->add_option("first", c1)->required();
    join_cmd->add_option("second", c2)->required();
    join_cmd->add_option("--avoid", avoid, "curves the arc must miss");
    join_cmd->add_option("--must-hit", must_hit, "curves the arc must cross");

    auto* twist_cmd = app.add_subcommand("twist", "apply a map file (twist <curve> <exp> lines) to a curve");
    twist_cmd->add_option("map", map_file)->required();
    twist_cmd->add_option("curve", c1)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_flag("--timing", timing, "also record elapsed_ms in the report");

    auto* dot_cmd = app.add_subcommand("export-dot", "write a complex as a DOT graph");
    dot_cmd->add_option("kind", dot_kind, "family | link <k> | curves [names...]")->required();
    dot_cmd->add_option("args", dot_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        if (*verify_cmd) {
            SuiteOptions so;
            so.genus = o.genus ? o.genus : 4;
            so.seed = o.seed;
            so.samples = o.samples;
            so.depth = o.depth;
            auto r = run_suite(suite, so);
            std::fprintf(stderr, "elapsed_ms %lld\n", (long long)r.elapsed_ms);
            if (!timing) r.elapsed_ms = -1;
            std::string text = serialize_report(r);
            std::cout << text;
            if (!o.out.empty()) write_file(o.out, text);
            return r.failures.empty() ? 0 : exit_code(ErrorKind::verification);
        }

        Session s;
        open_session(s, o);
        const Surface& S = *s.S;
        if (*classify_cmd) {
            std::cout << classify(S, curve_arg(s, c1)).str() << "\n";
        } else if (*delta_cmd) {
            emit_curve(s, o, delta(S, curve_arg(s, c1)));
        } else if (*join_cmd) {
            auto a = curve_arg(s, c1), b = curve_arg(s, c2);
            std::vector<CurveClass> av, mh;
            for (auto& n : avoid) av.push_back(curve_arg(s, n));
            for (auto& n : must_hit) mh.push_back(curve_arg(s, n));
            auto arc = connect_arc(S, a, b, av, mh);
            if (!arc) fail(ErrorKind::precondition, "no arc from " + c1 + " to " + c2 + " with these constraints");
            emit_curve(s, o, join(S, a, b, *arc));
        } else if (*twist_cmd) {
            auto spec = parse_map(detail::read_file(map_file));
            auto m = resolve_map(S, s.table ? &*s.table : nullptr, spec);
            emit_curve(s, o, apply_map(S, m, curve_arg(s, c1)));
        } else if (*dot_cmd) {
            FlagComplex c;
            std::vector<std::string> labels;
            if (dot_kind == "family") {
                c = build_subcomplex(S, standard_family(S));
                for (int i = 1; i <= S.genus(); ++i) labels.push_back("Petal(" + std::to_string(i) + ")");
                for (int k = 2; k <= S.genus() - 2; ++k) labels.push_back("Group(" + std::to_string(k) + ")");
            } else if (dot_kind == "link") {
                if (dot_args.size() != 1) fail(ErrorKind::parse, "export-dot link needs k");
                auto ls = link_sample(S, std::stoi(dot_args[0]));
                c = ls.complex;
                labels = ls.names;
            } else if (dot_kind == "curves") {
                std::vector<CurveClass> vs;
                for (auto& n : dot_args) {
                    vs.push_back(curve_arg(s, n));
                    labels.push_back(n);
                }
                if (dot_args.empty() && s.table)
                    for (auto& [n, cc] : s.table->curves) {
                        vs.push_back(cc);
                        labels.push_back(n);
                    }
                for (size_t i = 0; i < vs.size(); ++i)
                    for (size_t j = 0; j < i; ++j)
                        if (vs[i] == vs[j]) fail(ErrorKind::precondition, "curves " + labels[j] + " and " + labels[i] + " coincide");
                c = build_subcomplex(S, vs);
            } else {
                fail(ErrorKind::parse, "unknown complex '" + dot_kind + "'");
            }
            std::string text = to_dot(c, S.genus(), labels);
            if (o.out.empty()) std::cout << text;
            else write_file(o.out, text);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "elapsed_ms %lld\n", (long long)ms);
        return 0;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code(e.kind);
    } catch (const std::bad_alloc&) {
        std::fprintf(stderr, "error: out of memory\n");
        return exit_code(ErrorKind::resource);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code(ErrorKind::parse);
    }
}
