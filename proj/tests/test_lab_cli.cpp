#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "mlab/io.hpp"
#include "mlab/verify.hpp"

using namespace mlab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string bin()
{
    const char* b = std::getenv("MLAB_BIN");
    return b ? b : "";
}

// stdout only; stderr goes to /dev/null
Run mlab_run(const std::string& args)
{
    Run r;
    std::string cmd = bin() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

fs::path scratch_dir()
{
    auto d = fs::temp_directory_path() / ("mlab_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind;
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::resource;
}

} // namespace

TEST(CurveFiles, RoundTrip)
{
    Surface S(3);
    CurveTable t{3, {}};
    t.put("a1", S.std_curve(StdKind::A, 1));
    t.put("p2", S.std_curve(StdKind::Petal, 2));
    t.put("m", meridian_pair(S, 1, 3));
    auto text = serialize_curves(t);
    EXPECT_EQ(text.rfind("genus 3\ncurve a1 :", 0), 0u);
    EXPECT_EQ(parse_curves(text, &S), t);
    EXPECT_EQ(parse_curves(text), t);
    t.put("a1", S.std_curve(StdKind::B, 1));
    EXPECT_EQ(t.curves.size(), 3u);
    EXPECT_EQ(*t.find("a1"), S.std_curve(StdKind::B, 1));
    // comments and blank lines
    EXPECT_EQ(parse_curves("# x\n\ngenus 3 # y\n" + text.substr(8), &S).curves.size(), 3u);
}

TEST(CurveFiles, NonCanonicalWeightsAreCanonicalized)
{
    Surface S(3);
    auto c = S.std_curve(StdKind::Petal, 1);
    auto parsed = parse_curves("genus 3\n" + curve_line("x", c) + "\n", &S);
    EXPECT_EQ(*parsed.find("x"), c);
}

TEST(CurveFiles, ParseErrors)
{
    Surface S(2);
    std::string nine = " 0 0 0 0 0 0 0 0 0";
    auto bad = [&](const std::string& text) { return kind_of([&] { parse_curves(text, &S); }); };
    EXPECT_EQ(bad("curve x :" + nine), ErrorKind::parse);
    EXPECT_EQ(bad(""), ErrorKind::parse);
    EXPECT_EQ(bad("genus 1\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 3\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ngenus 2\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ncurve x : 1 2\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ncurve x :" + nine + " 0\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ncurve x : -1 0 0 0 0 0 0 0 0\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ncurve x : 1 0 0 0 0 0 0 0 0\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ncurve x :" + nine + "\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ncurve x y" + nine + "\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ncurve x/y :" + nine + "\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\nfoo\n"), ErrorKind::parse);
    EXPECT_EQ(bad("genus 2\ncurve x : 1 0 0 0 0 0 0 0 z\n"), ErrorKind::parse);
    // two parallel copies are not one curve
    auto a = S.std_curve(StdKind::A, 1);
    CurveClass two = a;
    for (auto& w : two.w) w *= 2;
    EXPECT_EQ(bad("genus 2\n" + curve_line("x", two) + "\n"), ErrorKind::parse);
    auto dup = "genus 2\n" + curve_line("x", a) + "\n" + curve_line("x", a) + "\n";
    EXPECT_EQ(bad(dup), ErrorKind::parse);
}

TEST(MapFiles, RoundTripAndErrors)
{
    MapSpec m{{{"B1", 2}, {"M1_2", -1}, {"mine", 1}}};
    EXPECT_EQ(parse_map(serialize_map(m)), m);
    EXPECT_EQ(parse_map("# none\n\n").steps.size(), 0u);
    for (auto t : {"twist B1\n", "twist B1 0\n", "turn B1 1\n", "twist B1 x\n", "twist B1 5000\n", "twist B/1 1\n"})
        EXPECT_EQ(kind_of([&] { parse_map(t); }), ErrorKind::parse) << t;
    Surface S(3);
    CurveTable t{3, {{"mine", S.std_curve(StdKind::B, 3)}}};
    auto mm = resolve_map(S, &t, m);
    ASSERT_EQ(mm.word.size(), 3u);
    EXPECT_EQ(mm.word[1].curve, meridian_pair(S, 1, 2));
    EXPECT_EQ(mm.word[2].curve, S.std_curve(StdKind::B, 3));
    EXPECT_EQ(kind_of([&] { resolve_map(S, nullptr, m); }), ErrorKind::parse);
}

TEST(Names, Builtins)
{
    Surface S(4);
    EXPECT_EQ(*builtin_curve(S, "Petal(2)"), S.std_curve(StdKind::Petal, 2));
    EXPECT_EQ(*builtin_curve(S, "P2"), S.std_curve(StdKind::Petal, 2));
    EXPECT_EQ(*builtin_curve(S, "G2"), S.std_curve(StdKind::Group, 2));
    EXPECT_EQ(*builtin_curve(S, "Group(2)"), S.std_curve(StdKind::Group, 2));
    EXPECT_EQ(*builtin_curve(S, "A(3)"), S.std_curve(StdKind::A, 3));
    EXPECT_EQ(*builtin_curve(S, "B4"), S.std_curve(StdKind::B, 4));
    EXPECT_EQ(*builtin_curve(S, "M2_4"), meridian_pair(S, 2, 4));
    EXPECT_EQ(*builtin_curve(S, "S1_3_2"), meridian_slide(S, 1, 3, 2));
    for (auto n : {"M1_1", "M1_5", "S1_2_2", "S1_2", "Q1", "P", "Px", "M1__2"}) EXPECT_FALSE(builtin_curve(S, n)) << n;
    EXPECT_EQ(kind_of([&] { resolve_curve(S, nullptr, "nope"); }), ErrorKind::parse);
    CurveTable t{4, {{"B1", S.std_curve(StdKind::A, 1)}}};
    // file names shadow built-ins
    EXPECT_EQ(resolve_curve(S, &t, "B1"), S.std_curve(StdKind::A, 1));
}

TEST(Reports, RoundTrip)
{
    VerificationReport r;
    r.suite = "x";
    r.genus = 5;
    r.seed = 77;
    r.check(true, "a", "1", "1");
    r.check(false, "b-2", "expected thing", "got | other\nthing");
    r.notes.push_back("a note");
    r.elapsed_ms = 12;
    auto text = serialize_report(r);
    EXPECT_NE(text.find("result FAIL\n"), std::string::npos);
    auto back = parse_report(text);
    EXPECT_EQ(back.instances, 2);
    EXPECT_EQ(back.failures.size(), 1u);
    EXPECT_EQ(back.failures[0].got, "got   other thing");
    EXPECT_EQ(serialize_report(back), text);
    r.failures.clear();
    r.elapsed_ms = -1;
    auto ok = serialize_report(r);
    EXPECT_EQ(ok.find("elapsed_ms"), std::string::npos);
    EXPECT_NE(ok.find("result PASS\n"), std::string::npos);
    EXPECT_EQ(kind_of([&] { parse_report("bogus 1\n"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([&] { parse_report("failure a b c\n"); }), ErrorKind::parse);
}

TEST(Suites, NamesAndGenusRanges)
{
    EXPECT_EQ(suite_names().size(), 10u);
    SuiteOptions o;
    o.genus = 2;
    EXPECT_EQ(kind_of([&] { run_suite("dim-sm", o); }), ErrorKind::precondition);
    EXPECT_EQ(kind_of([&] { run_suite("nope", o); }), ErrorKind::parse);
    o.genus = 3;
    auto r = run_suite("dim-sm", o);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_GE(r.elapsed_ms, 0);
    o.samples = 20;
    EXPECT_EQ(serialize_report([&] { auto x = run_suite("word-homology", o); x.elapsed_ms = -1; return x; }()),
              serialize_report([&] { auto x = run_suite("word-homology", o); x.elapsed_ms = -1; return x; }()));
}

TEST(Cli, Commands)
{
    ASSERT_FALSE(bin().empty()) << "MLAB_BIN not set";
    auto d = scratch_dir();
    auto r = mlab_run("--genus 3 classify Petal1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "meridian separating (1,2)\n");
    EXPECT_EQ(mlab_run("--genus 3 classify A1").out, "non-meridian\n");

    Surface S(3);
    r = mlab_run("--genus 3 delta P2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, curve_line("result", S.std_curve(StdKind::B, 2)) + "\n");

    // --out builds a curve file that later commands read
    auto cf = d / "c.txt";
    fs::remove(cf);
    EXPECT_EQ(mlab_run("--genus 4 --out " + cf.string() + " --name J join P1 P2").code, 0);
    auto t = load_curves(cf.string());
    EXPECT_EQ(t.genus, 4);
    Surface S4(4);
    EXPECT_EQ(*t.find("J"), S4.std_curve(StdKind::Group, 2));
    EXPECT_EQ(mlab_run("--curves " + cf.string() + " classify J").out, "meridian separating (2,2)\n");
    EXPECT_EQ(mlab_run("--curves " + cf.string() + " --genus 5 classify J").code, 2);

    auto mf = d / "m.txt";
    write(mf, "twist M1_2 1\ntwist B1 -2\n");
    r = mlab_run("--genus 3 twist " + mf.string() + " A1");
    EXPECT_EQ(r.code, 0);
    MCGMap m{{{meridian_pair(S, 1, 2), 1}, {S.std_curve(StdKind::B, 1), -2}}};
    EXPECT_EQ(r.out, curve_line("result", apply_map(S, m, S.std_curve(StdKind::A, 1))) + "\n");

    r = mlab_run("--genus 4 export-dot family");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("graph G {\n  genus=4;\n", 0), 0u);
    fs::remove_all(d);
}

TEST(Cli, ExitCodes)
{
    ASSERT_FALSE(bin().empty());
    EXPECT_EQ(mlab_run("").code, 2);
    EXPECT_EQ(mlab_run("frobnicate").code, 2);
    EXPECT_EQ(mlab_run("--genus 3 classify Nope").code, 2);
    EXPECT_EQ(mlab_run("--genus 3 delta B2").code, 3);
    EXPECT_EQ(mlab_run("--genus 1 classify A1").code, 3);
    EXPECT_EQ(mlab_run("--genus 3 join A1 B1").code, 3);
    EXPECT_EQ(mlab_run("verify nope").code, 2);
    EXPECT_EQ(mlab_run("--genus 2 verify dim-sm").code, 3);
    EXPECT_EQ(mlab_run("--genus 3 twist /nonexistent/map A1").code, 2);
}

TEST(Cli, VerifyIsDeterministic)
{
    ASSERT_FALSE(bin().empty());
    auto d = scratch_dir();
    auto a = mlab_run("--genus 4 --seed 5 --samples 30 verify word-homology");
    auto b = mlab_run("--genus 4 --seed 5 --samples 30 --out " + (d / "r.txt").string() + " verify word-homology");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(d / "r.txt"), a.out);
    EXPECT_EQ(a.out.find("elapsed_ms"), std::string::npos);
    EXPECT_NE(a.out.find("result PASS"), std::string::npos);
    auto tm = mlab_run("--genus 4 --seed 5 --samples 30 verify word-homology --timing");
    EXPECT_NE(tm.out.find("elapsed_ms"), std::string::npos);
    auto c = mlab_run("--genus 4 --seed 6 --samples 30 verify word-homology");
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("seed 6"), std::string::npos);
    fs::remove_all(d);
}
