#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcg.hpp"
#include "meridians.hpp"
#include "surface.hpp"

namespace mlab {

// ------------------------------------------------------------------ curve files
//   genus <g>
//   curve <name> : w_0 ... w_{6g-4}
// '#' starts a comment. Weights are normal coordinates in edge-id order.

struct CurveTable {
    int genus = 0;
    std::vector<std::pair<std::string, CurveClass>> curves;

    const CurveClass* find(const std::string& name) const
    {
        for (auto& [n, c] : curves)
            if (n == name) return &c;
        return nullptr;
    }
    void put(const std::string& name, const CurveClass& c)
    {
        for (auto& [n, x] : curves)
            if (n == name) {
                x = c;
                return;
            }
        curves.push_back({name, c});
    }
    bool operator==(const CurveTable& o) const { return genus == o.genus && curves == o.curves; }
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream is(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

inline int64_t to_int(const std::string& s, int line)
{
    int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(ErrorKind::parse, "line " + std::to_string(line) + ": not an integer: '" + s + "'");
    return v;
}

inline bool valid_name(const std::string& n)
{
    return !n.empty() && std::all_of(n.begin(), n.end(), [](char c) {
        return std::isalnum((unsigned char)c) || std::string("_+-().,").find(c) != std::string::npos;
    });
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace detail

inline std::string curve_line(const std::string& name, const CurveClass& c)
{
    std::string s = "curve " + name + " :";
    for (auto w : c.w) s += " " + std::to_string(w);
    return s;
}

inline std::string serialize_curves(const CurveTable& t)
{
    std::string s = "genus " + std::to_string(t.genus) + "\n";
    for (auto& [n, c] : t.curves) s += curve_line(n, c) + "\n";
    return s;
}

// The surface is needed to validate and canonicalize the weights; its genus must
// match the header.
inline CurveTable parse_curves(const std::string& text, const Surface* S = nullptr)
{
    CurveTable t;
    std::istringstream is(text);
    int ln = 0;
    for (std::string line; std::getline(is, line);) {
        ++ln;
        auto tk = detail::tokens(line);
        if (tk.empty()) continue;
        auto where = "line " + std::to_string(ln) + ": ";
        if (tk[0] == "genus") {
            if (tk.size() != 2 || t.genus) fail(ErrorKind::parse, where + "bad genus header");
            t.genus = (int)detail::to_int(tk[1], ln);
            if (t.genus < 2) fail(ErrorKind::parse, where + "genus must be >= 2");
            if (S && S->genus() != t.genus) fail(ErrorKind::parse, where + "genus does not match --genus");
            continue;
        }
        if (tk[0] != "curve") fail(ErrorKind::parse, where + "expected 'genus' or 'curve'");
        if (!t.genus) fail(ErrorKind::parse, where + "curve before genus header");
        if (tk.size() < 3 || tk[2] != ":") fail(ErrorKind::parse, where + "expected 'curve <name> : weights'");
        if (!detail::valid_name(tk[1])) fail(ErrorKind::parse, where + "bad curve name '" + tk[1] + "'");
        if (t.find(tk[1])) fail(ErrorKind::parse, where + "duplicate curve name '" + tk[1] + "'");
        const size_t ne = 6 * (size_t)t.genus - 3;
        if (tk.size() - 3 != ne)
            fail(ErrorKind::parse, where + "expected " + std::to_string(ne) + " weights, got " +
                                       std::to_string(tk.size() - 3));
        Weights w;
        for (size_t i = 3; i < tk.size(); ++i) {
            int64_t v = detail::to_int(tk[i], ln);
            if (v < 0) fail(ErrorKind::parse, where + "negative weight");
            w.push_back(v);
        }
        CurveClass c{w};
        if (S) {
            if (!is_normal(S->model(), w)) fail(ErrorKind::parse, where + "weights violate the triangle inequalities");
            check_cap(w);
            if (trace_components(S->model(), w).size() != 1)
                fail(ErrorKind::parse, where + "weights do not describe a single curve");
            c = S->from_weights(w);
        }
        t.curves.push_back({tk[1], c});
    }
    if (!t.genus) fail(ErrorKind::parse, "missing genus header");
    return t;
}

inline CurveTable load_curves(const std::string& path, const Surface* S = nullptr)
{
    return parse_curves(detail::read_file(path), S);
}

// Built-in names: A<i>, B<i>, Petal<i> (or P<i>), Group<k> (or G<k>), with or
// without parentheses around the index; generator meridians M<i>_<j> and
// S<i>_<j>_<k>.
inline std::optional<CurveClass> builtin_curve(const Surface& S, const std::string& name)
{
    if (name.size() >= 4 && (name[0] == 'M' || name[0] == 'S')) {
        std::vector<int> ix;
        std::stringstream ss(name.substr(1));
        for (std::string part; std::getline(ss, part, '_');) {
            if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit) || part.size() > 3) return std::nullopt;
            ix.push_back(std::stoi(part));
        }
        auto in = [&](int x) { return x >= 1 && x <= S.genus(); };
        if (name[0] == 'M' && ix.size() == 2 && in(ix[0]) && in(ix[1]) && ix[0] != ix[1])
            return meridian_pair(S, ix[0], ix[1]);
        if (name[0] == 'S' && ix.size() == 3 && in(ix[0]) && in(ix[1]) && in(ix[2]) && ix[0] != ix[1] &&
            ix[2] != ix[0] && ix[2] != ix[1])
            return meridian_slide(S, ix[0], ix[1], ix[2]);
        return std::nullopt;
    }
    struct K {
        const char* p;
        StdKind k;
    };
    static const K kinds[] = {{"Petal", StdKind::Petal}, {"Group", StdKind::Group}, {"P", StdKind::Petal},
                              {"G", StdKind::Group},     {"A", StdKind::A},         {"B", StdKind::B}};
    for (auto& k : kinds) {
        std::string p = k.p;
        if (name.rfind(p, 0) != 0) continue;
        std::string rest = name.substr(p.size());
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) continue;
        int i = std::stoi(rest);
        return S.std_curve(k.k, i);
    }
    return std::nullopt;
}

inline CurveClass resolve_curve(const Surface& S, const CurveTable* t, const std::string& name)
{
    if (t)
        if (auto c = t->find(name)) return *c;
    if (auto c = builtin_curve(S, name)) return *c;
    fail(ErrorKind::parse, "unknown curve '" + name + "'");
}

// ------------------------------------------------------------------ map files
//   twist <curve-name> <exponent>

struct MapSpec {
    std::vector<std::pair<std::string, int>> steps;
    bool operator==(const MapSpec& o) const { return steps == o.steps; }
};

inline std::string serialize_map(const MapSpec& m)
{
    std::string s;
    for (auto& [n, e] : m.steps) s += "twist " + n + " " + std::to_string(e) + "\n";
    return s;
}

inline MapSpec parse_map(const std::string& text)
{
    MapSpec m;
    std::istringstream is(text);
    int ln = 0;
    for (std::string line; std::getline(is, line);) {
        ++ln;
        auto tk = detail::tokens(line);
        if (tk.empty()) continue;
        auto where = "line " + std::to_string(ln) + ": ";
        if (tk.size() != 3 || tk[0] != "twist") fail(ErrorKind::parse, where + "expected 'twist <curve> <exponent>'");
        if (!detail::valid_name(tk[1])) fail(ErrorKind::parse, where + "bad curve name");
        int64_t e = detail::to_int(tk[2], ln);
        if (e == 0) fail(ErrorKind::parse, where + "exponent must be nonzero");
        if (e > 1000 || e < -1000) fail(ErrorKind::parse, where + "exponent out of range");
        m.steps.push_back({tk[1], (int)e});
    }
    return m;
}

inline MCGMap resolve_map(const Surface& S, const CurveTable* t, const MapSpec& m)
{
    MCGMap out;
    for (auto& [n, e] : m.steps) out.word.push_back({resolve_curve(S, t, n), e});
    return out;
}

// ------------------------------------------------------------------ reports

struct Failure {
    std::string id, expected, got;
    bool operator==(const Failure&) const = default;
};

struct VerificationReport {
    std::string suite;
    int genus = 0;
    uint64_t seed = 0;
    int64_t instances = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;
    int64_t elapsed_ms = -1; // -1: not recorded
    bool operator==(const VerificationReport&) const = default;

    void check(bool ok, const std::string& id, const std::string& expected, const std::string& got)
    {
        ++instances;
        if (!ok) failures.push_back({id, expected, got});
    }
};

namespace detail {
inline std::string clean(std::string s)
{
    for (char& c : s)
        if (c == '\n' || c == '|') c = ' ';
    return s;
}
} // namespace detail

inline std::string serialize_report(const VerificationReport& r)
{
    std::ostringstream os;
    os << "suite " << r.suite << "\n";
    os << "genus " << r.genus << "\n";
    os << "seed " << r.seed << "\n";
    os << "instances " << r.instances << "\n";
    for (auto& n : r.notes) os << "note " << detail::clean(n) << "\n";
    for (auto& f : r.failures)
        os << "failure " << detail::clean(f.id) << " | " << detail::clean(f.expected) << " | " << detail::clean(f.got)
           << "\n";
    if (r.elapsed_ms >= 0) os << "elapsed_ms " << r.elapsed_ms << "\n";
    os << "result " << (r.failures.empty() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

inline VerificationReport parse_report(const std::string& text)
{
    VerificationReport r;
    std::istringstream is(text);
    int ln = 0;
    auto trim = [](std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };
    for (std::string line; std::getline(is, line);) {
        ++ln;
        if (line.empty()) continue;
        auto sp = line.find(' ');
        std::string key = line.substr(0, sp), val = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (key == "suite") r.suite = val;
        else if (key == "genus") r.genus = (int)detail::to_int(val, ln);
        else if (key == "seed") r.seed = (uint64_t)detail::to_int(val, ln);
        else if (key == "instances") r.instances = detail::to_int(val, ln);
        else if (key == "note") r.notes.push_back(val);
        else if (key == "elapsed_ms") r.elapsed_ms = detail::to_int(val, ln);
        else if (key == "failure") {
            auto a = val.find(" | "), b = val.find(" | ", a + 3);
            if (a == std::string::npos || b == std::string::npos)
                fail(ErrorKind::parse, "line " + std::to_string(ln) + ": bad failure record");
            r.failures.push_back({trim(val.substr(0, a)), trim(val.substr(a + 3, b - a - 3)), trim(val.substr(b + 3))});
        } else if (key == "result") {
        } else
            fail(ErrorKind::parse, "line " + std::to_string(ln) + ": unknown report field '" + key + "'");
    }
    return r;
}

} // namespace mlab
