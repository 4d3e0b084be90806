#pragma once

#include <string>
#include <vector>

#include "lm/proj_mat.hpp"
#include "lm/rational.hpp"

namespace lm {

// An increasing piecewise fractional-linear homeomorphism of the real line
// with integer-matrix pieces, asymptotic to integer translations at both
// ends. Canonical form: matrices normalized, every breakpoint genuine
// (adjacent matrices distinct). Two maps are equal as homeomorphisms iff
// their canonical forms are identical, which makes equality decidable.
//
// Values are immutable after construction and freely shareable.
class PiecewiseMap {
  public:
    // Identity map: no breakpoints, single identity piece.
    PiecewiseMap();

    // Validates and canonicalizes. `mats` has breakpoints.size() + 1
    // entries, left to right; mats.front() covers (-inf, s_1] and
    // mats.back() covers [s_n, +inf). Throws ConstructionError naming the
    // offending breakpoint or component when the input is discontinuous,
    // non-increasing, has a pole inside a component, or does not end in
    // integer translations.
    PiecewiseMap(std::vector<Rational> breakpoints, std::vector<ProjMat> mats);

    static PiecewiseMap identity() { return PiecewiseMap(); }

    const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<ProjMat>& mats() const noexcept { return mats_; }
    bool is_identity() const { return breakpoints_.empty() && mats_[0].is_identity(); }

    // Piece covering t (closure; at a breakpoint both sides agree).
    const ProjMat& mat_at(const Rational& t) const;

    Rational eval(const Rational& t) const { return mat_at(t).apply(t); }
    Rational eval_inverse(const Rational& y) const;

    // The single matrix representing the map on [lo, hi]. Throws
    // ConstructionError if a breakpoint lies strictly inside (lo, hi).
    const ProjMat& mat_on(const Rational& lo, const Rational& hi) const;

    friend bool operator==(const PiecewiseMap& f, const PiecewiseMap& g) {
        return f.breakpoints_ == g.breakpoints_ && f.mats_ == g.mats_;
    }
    friend bool operator!=(const PiecewiseMap& f, const PiecewiseMap& g) { return !(f == g); }

    // Deterministic canonical serialization; doubles as a hash key.
    std::string str() const;

    std::string to_json() const;
    static PiecewiseMap from_json(const std::string& text);

  private:
    struct raw_tag {};
    PiecewiseMap(raw_tag, std::vector<Rational> breakpoints, std::vector<ProjMat> mats);
    void prune_spurious();
    void validate() const;

    std::vector<Rational> breakpoints_;
    std::vector<ProjMat> mats_;

    friend PiecewiseMap compose(const PiecewiseMap&, const PiecewiseMap&);
    friend PiecewiseMap invert(const PiecewiseMap&);
};

// Product fg, meaning "apply f first, then g" (so as a function, g o f).
PiecewiseMap compose(const PiecewiseMap& f, const PiecewiseMap& g);

PiecewiseMap invert(const PiecewiseMap& f);

// f^e by square-and-multiply; e may be negative.
PiecewiseMap power(const PiecewiseMap& f, long e);

inline bool equals(const PiecewiseMap& f, const PiecewiseMap& g) { return f == g; }

inline const std::vector<Rational>& breakpoints(const PiecewiseMap& f) {
    return f.breakpoints();
}

}  // namespace lm
