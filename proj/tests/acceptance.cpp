// Acceptance run: one PASS/FAIL line per criterion, exit 1 on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mlab/verify.hpp"

using namespace mlab;

namespace {

struct Outcome {
    int64_t instances = 0;
    std::vector<std::string> problems;
};

void absorb(Outcome& o, const VerificationReport& r)
{
    o.instances += r.instances;
    for (auto& f : r.failures)
        o.problems.push_back(r.suite + "@g" + std::to_string(r.genus) + " " + f.id + ": expected " + f.expected +
                             ", got " + f.got);
}

VerificationReport suite(const std::string& name, int g, int samples = -1, int depth = -1)
{
    SuiteOptions o;
    o.genus = g;
    o.seed = 1;
    o.samples = samples;
    o.depth = depth;
    return run_suite(name, o);
}

// run one of the suite bodies directly on a fresh report
template <class F>
VerificationReport direct(const std::string& name, int g, F&& body)
{
    VerificationReport r;
    r.suite = name;
    r.genus = g;
    Surface S(g);
    body(S, r);
    return r;
}

} // namespace

int main()
{
    struct Criterion {
        std::string label;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> cs = {
        {"dimension 2g-4 of the standard separating family, g=3..6",
         [](Outcome& o) {
             for (int g = 3; g <= 6; ++g) absorb(o, suite("dim-sm", g));
         }},
        {"link of a (k,g-k)-meridian splits as a join, g=4,5,6",
         [](Outcome& o) {
             for (int g = 4; g <= 6; ++g) absorb(o, direct("link-split", g, suites::link_split));
         }},
        {"link of a (1,g-1)-meridian does not split, g=4,5,6",
         [](Outcome& o) {
             for (int g = 4; g <= 6; ++g) absorb(o, direct("link-nosplit", g, suites::link_nosplit));
         }},
        {"intersection numbers invariant under meridian twist words, g=6, 200 pairs",
         [](Outcome& o) { absorb(o, suite("intersection", 6, 200)); }},
        {"delta commutes with handlebody maps, g=3 and g=6, 50 cases each",
         [](Outcome& o) {
             absorb(o, suite("delta-natural", 3, 50));
             absorb(o, suite("delta-natural", 6, 50));
         }},
        {"join types add up, g=6 (100 joins); chain gives (2,g-2), g=4,5",
         [](Outcome& o) {
             absorb(o, suite("join-arith", 6, 100));
             for (int g = 4; g <= 5; ++g) absorb(o, direct("join-chain", g, suites::join_chain));
         }},
        {"stripe elimination and intersection reduction, g=4 and g=6",
         [](Outcome& o) {
             absorb(o, suite("stripes", 4));
             absorb(o, suite("stripes", 6));
         }},
        {"delta of (1,2)-meridians off the standard cut system is some B(i), g=3, depth 4",
         [](Outcome& o) { absorb(o, suite("claim1", 3, -1, 4)); }},
        {"cut system path to a twisted system within bound 8, g=3",
         [](Outcome& o) { absorb(o, suite("cutsys-path", 3, -1, 8)); }},
        {"model soundness on 500 orbit curves per genus, g=3..6",
         [](Outcome& o) {
             for (int g = 3; g <= 6; ++g) absorb(o, suite("word-homology", g, 500));
         }},
    };

    int failed = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cs[i].run(o);
        } catch (const std::exception& e) {
            o.problems.push_back(std::string("error: ") + e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        bool ok = o.problems.empty() && o.instances > 0;
        if (o.instances == 0 && o.problems.empty()) o.problems.push_back("no checks ran");
        failed += !ok;
        std::printf("%s criterion %zu: %s [%lld checks, %lld ms]\n", ok ? "PASS" : "FAIL", i + 1,
                    cs[i].label.c_str(), (long long)o.instances, (long long)ms);
        for (size_t k = 0; k < o.problems.size() && k < 10; ++k) std::printf("    %s\n", o.problems[k].c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
