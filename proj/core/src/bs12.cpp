#include "lm/bs12.hpp"

#include <algorithm>
#include <unordered_map>

#include "lm/errors.hpp"
#include "lm/format.hpp"
#include "lm/generators.hpp"

namespace lm {

AffineRep compose(const AffineRep& lhs, const AffineRep& rhs) {
    // (lhs o rhs)(u) = 2^(e1+e2) u + 2^e1 q2 + q1.
    Rational scaled = rhs.q;
    if (lhs.e >= 0)
        scaled *= Rational(pow2(static_cast<unsigned long>(lhs.e)));
    else
        scaled /= Rational(pow2(static_cast<unsigned long>(-lhs.e)));
    scaled.canonicalize();
    Rational q = scaled + lhs.q;
    q.canonicalize();
    return {lhs.e + rhs.e, q};
}

AffineRep affine_of_word(const GroupWord& w) {
    if (w.alphabet() != Alphabet::BS && w.alphabet() != Alphabet::Any)
        throw ConstructionError("affine_of_word: expected a word over {x, t}");
    AffineRep rep;
    for (const Letter& l : w.letters())
        rep = compose(rep, l.sym.base == 'x' ? AffineRep::of_x(l.exp) : AffineRep::of_t(l.exp));
    return rep;
}

GroupWord BSNormalForm::word() const {
    GroupWord w;
    if (m > 0) w.append(sym_bs_t(), -static_cast<long>(m));
    if (N != 0) {
        if (!N.fits_slong_p())
            throw ConstructionError("normal form: x-exponent too large for a word literal");
        w.append(sym_bs_x(), N.get_si());
    }
    if (n > 0) w.append(sym_bs_t(), static_cast<long>(n));
    return w;
}

std::string BSNormalForm::str() const {
    return "(" + std::to_string(m) + ", " + N.get_str() + ", " + std::to_string(n) + ")";
}

BSNormalForm normal_form_of(const AffineRep& rep) {
    // Denominator of q must be a power of two.
    const Int den = rep.q.get_den();
    unsigned long den_exp = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    if (pow2(den_exp) != den)
        throw ConstructionError("affine map is not dyadic: q = " + to_string(rep.q));

    // Smallest m >= 0 with q 2^m integral and n = e + m >= 0.
    unsigned long m = den_exp;
    if (rep.e < 0 && static_cast<unsigned long>(-rep.e) > m)
        m = static_cast<unsigned long>(-rep.e);

    BSNormalForm nf;
    nf.m = m;
    nf.N = rep.q.get_num() * pow2(m - den_exp);
    nf.n = static_cast<unsigned long>(rep.e + static_cast<long>(m));
    return nf;
}

BSNormalForm bs_normal_form(const GroupWord& w) { return normal_form_of(affine_of_word(w)); }

PiecewiseMap embed_bs(const GroupWord& w) {
    if (w.alphabet() != Alphabet::BS && w.alphabet() != Alphabet::Any)
        throw ConstructionError("embed_bs: expected a word over {x, t}");
    PiecewiseMap acc;
    for (const Letter& l : w.letters())
        acc = compose(acc, power(l.sym.base == 'x' ? g2_map() : g1_map(), l.exp));
    return acc;
}

GroupWord bs_relator() { return parse_word("t x t^-1 x^-2"); }

namespace {

ProjMat g1_pos_formula(unsigned long n) {
    return ProjMat(pow2(n), 0, 2 * (pow2(n) - 1), 1);
}

ProjMat g1_neg_formula(unsigned long n) {
    return ProjMat(pow2(n + 1) - 1, 1 - pow2(n), pow2(n + 1) - 2, 2 - pow2(n));
}

}  // namespace

IterateReport check_iterates(unsigned n_max, unsigned N_max) {
    if (n_max < 1 || N_max < 1)
        throw ConstructionError("check_iterates: bounds must be >= 1");
    IterateReport rep;
    const Rational half = rational(1, 2);
    for (unsigned long n = 1; n <= n_max; ++n) {
        const PiecewiseMap fwd = power(g1_map(), static_cast<long>(n));
        if (fwd.mat_on(rational(0), half) != g1_pos_formula(n))
            rep.failures.push_back("g1^" + std::to_string(n) + " on [0,1/2]");
        const PiecewiseMap bwd = power(g1_map(), -static_cast<long>(n));
        if (bwd.mat_on(half, rational(1)) != g1_neg_formula(n))
            rep.failures.push_back("g1^-" + std::to_string(n) + " on [1/2,1]");
        rep.checked += 2;
    }
    for (unsigned long N = 1; N <= N_max; ++N) {
        const PiecewiseMap pw = power(g2_map(), static_cast<long>(N));
        const Rational lo = rational(1, static_cast<long>(N) + 2);
        const Rational hi = rational(1, static_cast<long>(N) + 1);
        if (pw.mat_on(rational(0), lo) != ProjMat(1, 0, -Int(N), 1))
            rep.failures.push_back("g2^" + std::to_string(N) + " on [0,1/(N+2)]");
        if (pw.mat_on(lo, hi) != ProjMat(Int(N) + 3, -1, Int(N) + 4, -1))
            rep.failures.push_back("g2^" + std::to_string(N) + " on [1/(N+2),1/(N+1)]");
        rep.checked += 2;
    }
    return rep;
}

PiecewiseMap bs_power_map(long m, const Int& N, long n) {
    if (!N.fits_slong_p()) throw ConstructionError("bs_power_map: |N| too large");
    // g1^-m o g2^N o g1^n as functions: g1^n acts first.
    PiecewiseMap g = compose(power(g1_map(), n), power(g2_map(), N.get_si()));
    return compose(g, power(g1_map(), -m));
}

Certificate breakpoint_certificate(unsigned long m, const Int& N, unsigned long n) {
    Certificate cert;
    if (N == 0) {
        // Pure t-power: g1^(n-m); the bound C(g1^k) >= 2^|k| stands in.
        cert.t_power_path = true;
        long k = static_cast<long>(n) - static_cast<long>(m);
        const PiecewiseMap g = power(g1_map(), k);
        cert.fwd = complexity(g);
        cert.inv = complexity(invert(g));
        cert.power_bound_holds =
            cert.fwd.C >= pow2(static_cast<unsigned long>(k < 0 ? -k : k));
        return cert;
    }

    const Int mag = abs(N) * pow2(n) + 2;
    cert.d_floor = mag;
    cert.witness = N > 0 ? rational(1, mag) : rational(mag - 1, mag);

    const PiecewiseMap g = bs_power_map(static_cast<long>(m), N, static_cast<long>(n));
    const std::vector<Rational>& bps = g.breakpoints();
    cert.witness_is_breakpoint = std::binary_search(bps.begin(), bps.end(), cert.witness);
    cert.fwd = complexity(g);
    cert.inv = complexity(invert(g));
    cert.d_bound_holds = cert.fwd.D >= cert.d_floor;
    return cert;
}

UndistortionRow undistortion_row(unsigned long m, const Int& N, unsigned long n) {
    if (N == 0) throw ConstructionError("undistortion_row: N must be nonzero");
    const PiecewiseMap g = bs_power_map(static_cast<long>(m), N, static_cast<long>(n));
    const ComplexityReport fwd = complexity(g);
    const ComplexityReport inv = complexity(invert(g));

    UndistortionRow row{m, N, n, fwd.D, fwd.M, fwd.C, inv.D, inv.M, inv.C, false, "", ""};
    // (C C')^3 >= N^2 e^(2(m+n)); e^2 < 7389057/10^6 makes the right side
    // checkable in integers.
    const Int lhs = ipow(fwd.C * inv.C, 3) * ipow(Int(10), 6 * (m + n));
    const Int rhs = N * N * ipow(Int(7389057), m + n);
    row.chain_holds = lhs >= rhs;
    row.lhs_quarter_log_sum = quarter_log_sum_decimal(fwd.C, inv.C);
    row.rhs_sixth_sum = sixth_log_plus_decimal(abs(N), m + n);
    return row;
}

std::vector<BSBallEntry> bs_ball(unsigned radius) {
    std::vector<BSBallEntry> out;
    std::unordered_map<std::string, unsigned> seen;
    out.push_back({GroupWord{}, AffineRep::identity(), 0});
    seen.emplace(AffineRep::identity().str(), 0);

    struct Gen {
        Symbol sym;
        long exp;
    };
    const Gen gens[4] = {{sym_bs_x(), 1}, {sym_bs_x(), -1}, {sym_bs_t(), 1}, {sym_bs_t(), -1}};

    std::size_t frontier_begin = 0;
    for (unsigned r = 1; r <= radius; ++r) {
        const std::size_t frontier_end = out.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const Gen& gen : gens) {
                AffineRep rep = compose(
                    out[i].rep,
                    gen.sym.base == 'x' ? AffineRep::of_x(gen.exp) : AffineRep::of_t(gen.exp));
                if (!seen.emplace(rep.str(), r).second) continue;
                GroupWord w = out[i].word;
                w.append(gen.sym, gen.exp);
                out.push_back({std::move(w), std::move(rep), r});
            }
        }
        frontier_begin = frontier_end;
    }
    return out;
}

}  // namespace lm
