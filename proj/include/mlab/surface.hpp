#pragma once

#include <string>
#include <vector>

#include "curve.hpp"
#include "model.hpp"
#include "words.hpp"

namespace mlab {

enum class StdKind { A, B, Petal, Group };

// One fixed genus: model, word solver and canonicalizer. Not copyable because
// the helpers refer back to the model.
class Surface {
public:
    explicit Surface(int g) : m_(build_model(g)), dehn_(m_.relator), canon_(m_) {}
    Surface(const Surface&) = delete;
    Surface& operator=(const Surface&) = delete;

    const SurfaceModel& model() const { return m_; }
    int genus() const { return m_.genus; }
    const DehnSolver& dehn() const { return dehn_; }

    CurveClass canonical(const Path& p) const { return canon_(p); }
    CurveClass from_weights(const Weights& w) const
    {
        auto comps = trace_components(m_, w);
        if (comps.size() != 1) fail(ErrorKind::precondition, "weights do not describe a connected curve");
        return canon_(comps[0].he);
    }
    CurveClass from_word(const Word& w) const { return canon_(path_from_word(m_, w)); }

    // a representative closed path of the class
    Path path(const CurveClass& c) const
    {
        auto comps = trace_components(m_, c.w);
        if (comps.size() != 1) fail(ErrorKind::precondition, "not a connected curve");
        return comps[0].he;
    }

    // handle block  b_i^-1 a_i b_i a_i^-1  inside the vertex word
    int block_start(int i) const
    {
        const Word& r = m_.relator;
        const int n = (int)r.size();
        for (int s = 0; s < n; ++s)
            if (r[s] == -2 * i && r[(s + 1) % n] == 2 * i - 1 && r[(s + 2) % n] == 2 * i &&
                r[(s + 3) % n] == -(2 * i - 1))
                return s;
        fail(ErrorKind::verification, "handle block not found");
    }

    Word std_word(StdKind kind, int i) const
    {
        const int g = genus();
        const Word& r = m_.relator;
        const int n = (int)r.size();
        switch (kind) {
        case StdKind::A:
        case StdKind::B:
            if (i < 1 || i > g) fail(ErrorKind::precondition, "index out of range");
            return Word{kind == StdKind::A ? 2 * i - 1 : 2 * i};
        case StdKind::Petal: {
            if (i < 1 || i > g) fail(ErrorKind::precondition, "index out of range");
            int s = block_start(i);
            return Word{r[s], r[(s + 1) % n], r[(s + 2) % n], r[(s + 3) % n]};
        }
        case StdKind::Group: {
            if (i < 2 || i > g - 2) fail(ErrorKind::precondition, "Group(k) needs 2 <= k <= g-2");
            // blocks appear as handle k, k-1, ..., 1 along the vertex word
            int s = block_start(i);
            Word w;
            for (int q = 0; q < 4 * i; ++q) w.push_back(r[(s + q) % n]);
            return w;
        }
        }
        return {};
    }

    CurveClass std_curve(StdKind kind, int i) const { return from_word(std_word(kind, i)); }

    std::vector<int64_t> homology(const Path& p) const
    {
        std::vector<int64_t> h(2 * genus(), 0);
        for (int e : p)
            if (int l = m_.letter(e)) h[std::abs(l) - 1] += l > 0 ? 1 : -1;
        return h;
    }
    std::vector<int64_t> homology(const CurveClass& c) const { return homology(path(c)); }

    bool is_essential(const Path& p) const
    {
        Path r = reduce_path(p);
        return !r.empty() && !dehn_.is_trivial(path_word(m_, r));
    }

    // image in the free group of the handlebody: b-letters die, a_i -> x_i
    Word hb_word(const Path& p) const
    {
        Word w;
        for (int x : path_word(m_, p))
            if (std::abs(x) % 2 == 1) w.push_back(x > 0 ? (x + 1) / 2 : -((-x + 1) / 2));
        return conj_rep(w);
    }
    Word hb_word(const CurveClass& c) const { return hb_word(path(c)); }
    bool is_meridian(const CurveClass& c) const { return hb_word(c).empty(); }

private:
    SurfaceModel m_;
    DehnSolver dehn_;
    Canonicalizer canon_;
};

inline std::string std_name(StdKind k, int i)
{
    const char* n[] = {"A", "B", "Petal", "Group"};
    return std::string(n[(int)k]) + "(" + std::to_string(i) + ")";
}

} // namespace mlab
