#include "lm/complexity.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lm/errors.hpp"
#include "lm/format.hpp"
#include "lm/generators.hpp"

namespace lm {

ComplexityReport complexity(const PiecewiseMap& f) {
    ComplexityReport r;
    r.D = 1;
    for (const Rational& s : f.breakpoints())
        if (s.get_den() > r.D) r.D = s.get_den();
    r.M = 0;
    for (const ProjMat& m : f.mats()) r.M = std::max(r.M, m.max_abs_entry());
    r.C = std::max(r.D, r.M);
    return r;
}

std::string ComplexityReport::half_log_c(int digits) const {
    return half_log_decimal(C, digits);
}

std::string ComplexityReport::to_json() const {
    nlohmann::json j;
    j["D"] = to_string(D);
    j["M"] = to_string(M);
    j["C"] = to_string(C);
    return j.dump();
}

bool verifies_half_log_bound(unsigned long word_length, const Int& C) {
    // (7389056 / 10^6)^n >= C, i.e. 7389056^n >= C * 10^(6n).
    Int lhs = ipow(Int(7389056), word_length);
    Int rhs = C * ipow(Int(10), 6 * word_length);
    return lhs >= rhs;
}

bool verifies_six_power_bound(unsigned long word_length, const Int& C) {
    return C <= ipow(Int(6), word_length);
}

bool LemmaReport::all_hold() const {
    if (!breakpoints_contained) return false;
    for (const BoundCheck& b : bounds)
        if (!b.holds()) return false;
    return true;
}

std::string LemmaReport::str() const {
    std::ostringstream os;
    for (const BoundCheck& b : bounds)
        os << b.name << ": " << b.lhs.get_str() << (b.holds() ? " <= " : " > ")
           << b.rhs.get_str() << "\n";
    os << "breakpoint containment: " << (breakpoints_contained ? "holds" : "FAILS") << "\n";
    return os.str();
}

bool breakpoints_contained_in_pullback(const PiecewiseMap& f, const PiecewiseMap& g) {
    std::vector<Rational> allowed = f.breakpoints();
    for (const Rational& q : g.breakpoints()) allowed.push_back(f.eval_inverse(q));
    std::sort(allowed.begin(), allowed.end());
    const PiecewiseMap fg = compose(f, g);
    for (const Rational& s : fg.breakpoints())
        if (!std::binary_search(allowed.begin(), allowed.end(), s)) return false;
    return true;
}

LemmaReport check_estimation_lemmas(const PiecewiseMap& f, const GroupWord& s) {
    if (s.length() != 1 || s.alphabet() != Alphabet::RModel)
        throw ConstructionError("check_estimation_lemmas: s must be a single signed generator");
    const PiecewiseMap sm = eval_r(s);
    const PiecewiseMap fs = compose(f, sm);

    const ComplexityReport cf = complexity(f);
    const ComplexityReport cs = complexity(sm);
    const ComplexityReport cfs = complexity(fs);

    LemmaReport rep;
    rep.bounds.push_back({"M(fs) <= 2 M(f) M(s)", cfs.M, 2 * cf.M * cs.M});
    rep.bounds.push_back({"D(fs) <= 4 C(f)", cfs.D, 4 * cf.C});
    rep.bounds.push_back({"M(fs) <= 6 M(f)", cfs.M, 6 * cf.M});
    rep.bounds.push_back({"C(fs) <= 6 C(f)", cfs.C, 6 * cf.C});
    rep.breakpoints_contained = breakpoints_contained_in_pullback(f, sm);

    // Pullback denominator bound for each breakpoint of s.
    for (const Rational& bp : sm.breakpoints()) {
        const Rational x = f.eval_inverse(bp);
        Int bound = 2 * cf.M * std::max(Int(abs(bp.get_num())), Int(bp.get_den()));
        rep.bounds.push_back(
            {"den(f^-1(" + to_string(bp) + ")) <= 2 M(f) max(|p'|, q')", x.get_den(), bound});
    }
    return rep;
}

}  // namespace lm
