#pragma once

#include <string>
#include <vector>

#include "lm/complexity.hpp"
#include "lm/piecewise_map.hpp"
#include "lm/word.hpp"

namespace lm {

// The affine map u -> 2^e u + q with q in Z[1/2]. Composition in the order
// "apply rhs first" makes word evaluation a faithful homomorphism, so this
// is the normal-form oracle for the presentation <x, t | t x t^-1 = x^2>
// via x -> u + 1, t -> 2u.
struct AffineRep {
    long e = 0;
    Rational q = 0;

    static AffineRep identity() { return {}; }
    static AffineRep of_x(long exp) { return {0, Rational(exp)}; }
    static AffineRep of_t(long exp) { return {exp, 0}; }

    friend AffineRep compose(const AffineRep& lhs, const AffineRep& rhs);

    friend bool operator==(const AffineRep& f, const AffineRep& g) {
        return f.e == g.e && f.q == g.q;
    }

    std::string str() const { return std::to_string(e) + "|" + to_string(q); }
};

AffineRep affine_of_word(const GroupWord& w);

// t^-m x^N t^n with m, n >= 0; when both m and n are positive N is odd,
// and N = 0 forces min(m, n) = 0 (pure t-powers keep one exponent).
struct BSNormalForm {
    unsigned long m = 0;
    Int N = 0;
    unsigned long n = 0;

    bool is_identity() const { return m == 0 && N == 0 && n == 0; }
    GroupWord word() const;
    std::string str() const;

    friend bool operator==(const BSNormalForm& f, const BSNormalForm& g) {
        return f.m == g.m && f.N == g.N && f.n == g.n;
    }
};

BSNormalForm normal_form_of(const AffineRep& rep);
BSNormalForm bs_normal_form(const GroupWord& w);

// Substitutes t -> g1, x -> g2 and evaluates letters left to right.
PiecewiseMap embed_bs(const GroupWord& w);

// The relator orientation that maps to the identity under embed_bs with
// the left-to-right application order; pinned by a regression test.
GroupWord bs_relator();

// Exact comparison of g1^n, g1^-n, g2^N against their closed forms:
// on [0, 1/2]:            g1^n  = 2^n t / (2(2^n - 1) t + 1)
// on [1/2, 1]:            g1^-n = ((2^(n+1)-1) t + (1-2^n)) / ((2^(n+1)-2) t + (2-2^n))
// on [0, 1/(N+2)]:        g2^N  = t / (1 - N t)
// on [1/(N+2), 1/(N+1)]:  g2^N  = ((N+3) t - 1) / ((N+4) t - 1)
struct IterateReport {
    unsigned long checked = 0;
    std::vector<std::string> failures;
    bool all_match() const { return failures.empty(); }
};

IterateReport check_iterates(unsigned n_max, unsigned N_max);

// Exact data for the element g1^-m g2^N g1^n (composed right to left, the
// order in which the closed forms above concatenate).
struct Certificate {
    bool t_power_path = false;  // N = 0: falls back to the g1-power bound
    Rational witness;           // 1/(N 2^n + 2), or (|N| 2^n + 1)/(|N| 2^n + 2) for N < 0
    Int d_floor;                // |N| 2^n + 2
    bool witness_is_breakpoint = false;
    bool d_bound_holds = false;      // D(g) >= d_floor
    bool power_bound_holds = false;  // N = 0 path: C(g1^k) >= 2^|k|
    ComplexityReport fwd;
    ComplexityReport inv;

    bool holds() const {
        return t_power_path ? power_bound_holds : (witness_is_breakpoint && d_bound_holds);
    }
};

PiecewiseMap bs_power_map(long m, const Int& N, long n);
Certificate breakpoint_certificate(unsigned long m, const Int& N, unsigned long n);

struct UndistortionRow {
    unsigned long m;
    Int N;
    unsigned long n;
    Int D, M, C;
    Int D_inv, M_inv, C_inv;
    bool chain_holds;  // (C C_inv)^3 >= N^2 e^(2(m+n)), via upper bracketing of e^2
    std::string lhs_quarter_log_sum;  // (ln C + ln C_inv)/4, 30 significant digits
    std::string rhs_sixth_sum;        // (ln|N| + m + n)/6
};

// One row per grid point; the comparison is exact-integer (e^2 bracketed
// above by 7389057/10^6), the log columns are presentation only.
UndistortionRow undistortion_row(unsigned long m, const Int& N, unsigned long n);

struct BSBallEntry {
    GroupWord word;  // a geodesic word over {x, t}
    AffineRep rep;
    unsigned radius;
};

// Breadth-first ball over {x^+-1, t^+-1} with affine canonical forms.
std::vector<BSBallEntry> bs_ball(unsigned radius);

}  // namespace lm
