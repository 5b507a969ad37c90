#pragma once

#include "rsse/word.hpp"

namespace rsse {

// Forward transform: P_i = p(alpha^i), i = 0..n-1. Requires
// order(alpha) == n and deg(p) <= n-1.
Word dft(const Field& f, const Word& p, Elem alpha, unsigned n);

// Inverse transform: p_i = n^{-1} P(alpha^{-i}). Over characteristic 2
// n^{-1} = 1 since n | q-1 is odd.
Word idft(const Field& f, const Word& P, Elem alpha, unsigned n);

// Coefficients lo..n-1 of dft(p) only; the syndrome extractor's hot path.
Word dft_tail(const Field& f, const Word& p, Elem alpha, unsigned n, unsigned lo);

}  // namespace rsse
