#pragma once

#include <string>
#include <vector>

#include "lm/piecewise_map.hpp"
#include "lm/word.hpp"

namespace lm {

// Word-length lower-bound invariants of a map f:
//   D = largest breakpoint denominator in lowest terms (1 when B(f) is empty),
//   M = largest |entry| over the normalized component matrices,
//   C = max(D, M).
// Half the natural log of C bounds the word length from below; the exact
// value is kept as C itself and only rendered to decimal on demand.
struct ComplexityReport {
    Int D;
    Int M;
    Int C;

    // 0.5 * ln(C) at `digits` significant digits.
    std::string half_log_c(int digits = 30) const;

    std::string to_json() const;
};

ComplexityReport complexity(const PiecewiseMap& f);

// ln(e^2) bracketing: 7389056/10^6 < e^2 < 7389057/10^6. Both checks below
// are pure integer comparisons, no floating point.
//
// True when n >= 0.5 * ln(C), verified via (7389056/10^6)^n >= C which
// implies e^(2n) >= C.
bool verifies_half_log_bound(unsigned long word_length, const Int& C);

// True when C <= 6^n.
bool verifies_six_power_bound(unsigned long word_length, const Int& C);

// One exactly-evaluated inequality: holds iff lhs <= rhs.
struct BoundCheck {
    std::string name;
    Int lhs;
    Int rhs;
    bool holds() const { return lhs <= rhs; }
};

struct LemmaReport {
    std::vector<BoundCheck> bounds;
    bool breakpoints_contained = false;  // B(fs) inside B(f) from f^-1(B(s))
    bool all_hold() const;
    std::string str() const;
};

// Exactly evaluates, for f and a standard generator letter s (one of
// a b c with exponent +-1):
//   M(fs) <= 2 M(f) M(s),
//   D(fs) <= 4 max(D(f), M(f)),
//   M(fs) <= 6 M(f),
//   C(fs) <= 6 C(f),
//   B(fs) contained in B(f) union f^-1(B(s)),
// and, for every breakpoint p'/q' of s, the pullback denominator bound
// q <= 2 M(f) max(|p'|, q') where p/q = f^-1(p'/q').
// A failed inequality is returned as a falsification, never thrown.
LemmaReport check_estimation_lemmas(const PiecewiseMap& f, const GroupWord& s);

// B(fg) inside B(f) union f^-1(B(g)), for arbitrary g.
bool breakpoints_contained_in_pullback(const PiecewiseMap& f, const PiecewiseMap& g);

}  // namespace lm
