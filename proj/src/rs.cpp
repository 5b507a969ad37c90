#include "rsse/rs.hpp"

#include <stdexcept>

namespace rsse {

RsCode::RsCode(Field f, unsigned n_, unsigned k_)
    : field(std::move(f)), n(n_), k(k_) {
    if ((field.q() - 1) % n != 0)
        throw std::invalid_argument("rs: n does not divide q-1");
    if (k < 1 || k >= n)
        throw std::invalid_argument("rs: need 1 <= k < n");
    alpha = field.root_of_unity(n);
    d = n - k + 1;
    tau = (n - k) / 2;
}

Word encode(const RsCode& code, const Word& info) {
    if (degree(info) >= static_cast<int>(code.k))
        throw std::invalid_argument("rs: information word too long");
    Word spectrum(info);
    spectrum.resize(code.n, 0);
    return idft(code.field, spectrum, code.alpha, code.n);
}

bool is_codeword(const RsCode& code, const Word& c) {
    if (c.size() != code.n) return false;
    Word tail = dft_tail(code.field, c, code.alpha, code.n, code.k);
    for (Elem s : tail)
        if (s != 0) return false;
    return true;
}

Word power_word(const Field& f, const Word& y, unsigned i) {
    if (i < 1) throw std::invalid_argument("rs: power exponent must be >= 1");
    Word r(y.size());
    for (size_t j = 0; j < y.size(); ++j)
        r[j] = f.pow(y[j], i);
    return r;
}

SyndromeSet syndromes(const RsCode& code, const Word& y, unsigned l) {
    if (l < 1 || l * (code.k - 1) + 1 > code.n)
        throw std::invalid_argument("rs: l(k-1)+1 <= n violated");
    if (y.size() != code.n)
        throw std::invalid_argument("rs: word length mismatch");
    SyndromeSet s;
    s.reserve(l);
    for (unsigned i = 1; i <= l; ++i) {
        Word row = (i == 1) ? y : power_word(code.field, y, i);
        s.push_back(dft_tail(code.field, row, code.alpha, code.n,
                             i * (code.k - 1) + 1));
    }
    return s;
}

mpz_class weight_distribution(const RsCode& code, unsigned w) {
    if (w > code.n) throw std::invalid_argument("rs: w > n");
    if (w == 0) return 1;
    if (w < code.d) return 0;
    mpz_class sum = 0;
    mpz_class qz = code.field.q();
    for (unsigned j = 0; j <= w - code.d; ++j) {
        mpz_class term;
        mpz_bin_uiui(term.get_mpz_t(), w - 1, j);
        mpz_class qp;
        mpz_pow_ui(qp.get_mpz_t(), qz.get_mpz_t(), w - code.d - j);
        term *= qp;
        if (j % 2) sum -= term; else sum += term;
    }
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), code.n, w);
    return binom * (code.field.q() - 1) * sum;
}

}  // namespace rsse
