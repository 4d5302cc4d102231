#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "model.hpp"

namespace mlab {

// Letters are nonzero ints; -x is the inverse of x.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w)
{
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

inline Word cyclic_reduce(const Word& w)
{
    Word r = free_reduce(w);
    size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + i, r.begin() + j);
}

inline Word inverse(const Word& w)
{
    Word r(w.rbegin(), w.rend());
    for (int& x : r) x = -x;
    return r;
}

// lexicographically least rotation
inline Word least_rotation(const Word& w)
{
    const int n = (int)w.size();
    int best = 0;
    for (int s = 1; s < n; ++s) {
        for (int k = 0; k < n; ++k) {
            int a = w[(s + k) % n], b = w[(best + k) % n];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    Word r(n);
    for (int i = 0; i < n; ++i) r[i] = w[(best + i) % n];
    return r;
}

// Conjugacy representative: cyclically reduced, least rotation.
inline Word conj_rep(const Word& w) { return least_rotation(cyclic_reduce(w)); }

inline std::string word_to_string(const Word& w, char base = 'x')
{
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += base;
        s += std::to_string(std::abs(w[i]));
        if (w[i] < 0) s += "^-1";
    }
    return s;
}

// Word problem in a one-relator group whose symmetrized relator has pieces of
// length one, so Dehn's algorithm decides triviality.
class DehnSolver {
public:
    explicit DehnSolver(const Word& relator) : r_(relator), n_((int)relator.size())
    {
        Word ri = inverse(r_);
        for (int s = 0; s < 2; ++s) {
            const Word& w = s ? ri : r_;
            for (int i = 0; i < n_; ++i) {
                auto key = std::make_pair(w[i], w[(i + 1) % n_]);
                if (pos_.count(key)) fail(ErrorKind::verification, "relator is not small-cancellation");
                pos_[key] = {s, i};
            }
        }
        rinv_ = ri;
    }

    bool is_trivial(const Word& w) const { return reduce(w).empty(); }

    // Dehn reduction to a cyclic normal form (empty iff trivial)
    Word reduce(const Word& input) const
    {
        Word w = cyclic_reduce(input);
        bool changed = true;
        while (changed && !w.empty()) {
            changed = false;
            const int m = (int)w.size();
            for (int p = 0; p < m && !changed; ++p) {
                auto it = pos_.find({w[p], w[(p + 1) % m]});
                if (it == pos_.end()) continue;
                const Word& rel = it->second.first ? rinv_ : r_;
                int off = it->second.second;
                int len = 0;
                while (len < n_ && len < m && w[(p + len) % m] == rel[(off + len) % n_]) ++len;
                if (2 * len <= n_) continue;
                // w[p..p+len) = rel[off..off+len) ; replace by inverse of the rest of rel
                Word out;
                out.reserve(m - len + n_ - len);
                for (int k = n_ - 1; k >= len; --k) out.push_back(-rel[(off + k) % n_]);
                for (int k = len; k < m; ++k) out.push_back(w[(p + k) % m]);
                w = cyclic_reduce(out);
                changed = true;
            }
        }
        return w;
    }

    const Word& relator() const { return r_; }

private:
    Word r_, rinv_;
    int n_;
    std::map<std::pair<int, int>, std::pair<int, int>> pos_;
};

} // namespace mlab
