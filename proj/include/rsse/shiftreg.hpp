#pragma once

#include "rsse/word.hpp"

namespace rsse {

// Connection polynomial of a linear feedback shift register: Lambda_0 = 1,
// deg(Lambda) <= t.
struct ConnectionPoly {
    Word lambda;
    unsigned t = 0;
};

// Multi-sequence shift-register synthesis for sequences of varying length.
// Sequences must have non-increasing lengths; shorter sequences are
// right-aligned against the longest one. Returns the shortest register
// (t, Lambda) generating every sequence over its full checkable range.
// For a single sequence this coincides with Berlekamp-Massey. op_count,
// when given, accumulates the number of field multiplications performed.
ConnectionPoly synthesize(const Field& f, const std::vector<Word>& seqs,
                          size_t* op_count = nullptr);

// Classical single-sequence Berlekamp-Massey.
ConnectionPoly berlekamp_massey(const Field& f, const Word& seq);

// True iff S_j = -sum_{h=1}^t Lambda_h S_{j-h} holds for j = t..m_i-1 in
// every sequence.
bool satisfies_recursions(const Field& f, const std::vector<Word>& seqs,
                          unsigned t, const Word& lambda);

}  // namespace rsse
