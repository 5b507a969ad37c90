#pragma once

#include <gmpxx.h>

#include "rsse/dft.hpp"
#include "rsse/word.hpp"

namespace rsse {

// RS(q; n, k) defined by its codeword spectra: information sits in the k
// low spectral coefficients, the n-k rightmost are zero.
struct RsCode {
    Field field;
    unsigned n;
    unsigned k;
    Elem alpha;      // element of order n
    unsigned d;      // n - k + 1
    unsigned tau;    // floor((n-k)/2)

    RsCode(Field f, unsigned n_, unsigned k_);
};

// Evaluation-style encoder: c = F^{-1}(C), deg(C) < k.
Word encode(const RsCode& code, const Word& info);

bool is_codeword(const RsCode& code, const Word& c);

// Coefficientwise i-th power, the virtual-extension row builder.
Word power_word(const Field& f, const Word& y, unsigned i);

// The l syndrome sequences: sequence i (1-based) holds coefficients
// i(k-1)+1 .. n-1 of dft(power_word(y, i)), length n - i(k-1) - 1.
using SyndromeSet = std::vector<Word>;
SyndromeSet syndromes(const RsCode& code, const Word& y, unsigned l);

// MDS weight enumerator:
// A_w = C(n,w)(q-1) sum_{j=0}^{w-d} (-1)^j C(w-1,j) q^{w-d-j} for w >= d.
mpz_class weight_distribution(const RsCode& code, unsigned w);

}  // namespace rsse
