#include "rsse/shiftreg.hpp"

#include <cassert>
#include <stdexcept>

namespace rsse {

namespace {

void trim(Word& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
}

}  // namespace

ConnectionPoly synthesize(const Field& f, const std::vector<Word>& seqs,
                          size_t* op_count) {
    size_t ops = 0;
    std::vector<const Word*> s;
    for (const Word& seq : seqs)
        if (!seq.empty()) s.push_back(&seq);
    if (s.empty()) return {Word{1}, 0};
    for (size_t h = 1; h < s.size(); ++h)
        if (s[h]->size() > s[h - 1]->size())
            throw std::invalid_argument("shiftreg: lengths must be non-increasing");

    const size_t l = s.size();
    const int m = static_cast<int>(s[0]->size());

    int t = 0;
    Word lambda{1};
    // Per-sequence history: register length, discrepancy, polynomial, and
    // position of the last length change. Shorter sequences get the
    // right-alignment offset m - m_h as their starting position.
    std::vector<int> th(l, 0), Mh(l), mh(l);
    std::vector<Elem> dh(l, 1);
    std::vector<Word> Lh(l);
    for (size_t h = 0; h < l; ++h) {
        mh[h] = static_cast<int>(s[h]->size());
        Mh[h] = m - mh[h];
    }

    for (int M = 1; M <= m; ++M) {
        for (size_t h = 0; h < l; ++h) {
            if (M - t <= m - mh[h]) continue;  // not enough history yet
            const Word& seq = *s[h];
            const int idx = M - (m - mh[h]) - 1;  // position within sequence h
            Elem d = seq[idx];
            for (int j = 1; j <= t && j < static_cast<int>(lambda.size()); ++j) {
                d ^= f.mul(lambda[j], seq[idx - j]);
                ++ops;
            }
            if (d == 0) continue;

            const Elem scale = f.div(d, dh[h]);
            const int shift = M - Mh[h];
            auto apply = [&](Word& dst) {
                if (Lh[h].empty()) return;  // subtracting the zero polynomial
                size_t need = Lh[h].size() + shift;
                if (dst.size() < need) dst.resize(need, 0);
                for (size_t j = 0; j < Lh[h].size(); ++j) {
                    dst[j + shift] ^= f.mul(scale, Lh[h][j]);
                    ++ops;
                }
            };

            if (M - t <= Mh[h] - th[h]) {
                apply(lambda);
            } else {
                int t_old = t;
                Word lambda_old = lambda;
                apply(lambda);
                t = M - (Mh[h] - th[h]);
                th[h] = t_old;
                Lh[h] = std::move(lambda_old);
                dh[h] = d;
                Mh[h] = M;
            }
            assert(lambda[0] == 1);
        }
    }
    trim(lambda);
    assert(degree(lambda) <= t);
    if (op_count) *op_count += ops;
    return {std::move(lambda), static_cast<unsigned>(t)};
}

ConnectionPoly berlekamp_massey(const Field& f, const Word& seq) {
    Word c{1}, b{1};
    unsigned L = 0;
    int shift = 1;
    Elem bd = 1;  // discrepancy at the last length change
    for (size_t i = 0; i < seq.size(); ++i) {
        Elem d = seq[i];
        for (unsigned j = 1; j <= L && j <= i && j < c.size(); ++j)
            d ^= f.mul(c[j], seq[i - j]);
        if (d == 0) {
            ++shift;
            continue;
        }
        const Elem scale = f.div(d, bd);
        if (2 * L > i) {
            if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
            for (size_t j = 0; j < b.size(); ++j)
                c[j + shift] ^= f.mul(scale, b[j]);
            ++shift;
        } else {
            Word tmp = c;
            if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
            for (size_t j = 0; j < b.size(); ++j)
                c[j + shift] ^= f.mul(scale, b[j]);
            L = static_cast<unsigned>(i + 1) - L;
            b = std::move(tmp);
            bd = d;
            shift = 1;
        }
    }
    trim(c);
    return {std::move(c), L};
}

bool satisfies_recursions(const Field& f, const std::vector<Word>& seqs,
                          unsigned t, const Word& lambda) {
    if (lambda.empty() || lambda[0] != 1) return false;
    if (degree(lambda) > static_cast<int>(t)) return false;
    for (const Word& seq : seqs) {
        for (size_t j = t; j < seq.size(); ++j) {
            Elem v = seq[j];
            for (unsigned h = 1; h <= t && h < lambda.size(); ++h)
                v ^= f.mul(lambda[h], seq[j - h]);
            if (v != 0) return false;
        }
    }
    return true;
}

}  // namespace rsse
