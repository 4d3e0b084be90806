#pragma once

#include <array>
#include <string>

#include "lm/rational.hpp"

namespace lm {

// The unique integer representative of a fractional-linear map
// t -> (a t + b) / (c t + d): entries coprime as a 4-tuple, and either
// a > 0, or a = 0 and b > 0. Orientation-preserving maps have det > 0.
class ProjMat {
  public:
    // Normalizes on construction. Throws ConstructionError if ad - bc = 0.
    ProjMat(Int a, Int b, Int c, Int d);

    // Identity map t -> t.
    ProjMat() : ProjMat(1, 0, 0, 1) {}

    // Translation t -> t + k.
    static ProjMat translation(const Int& k) { return ProjMat(1, k, 0, 1); }

    const Int& a() const noexcept { return a_; }
    const Int& b() const noexcept { return b_; }
    const Int& c() const noexcept { return c_; }
    const Int& d() const noexcept { return d_; }

    Int det() const { return a_ * d_ - b_ * c_; }
    Int max_abs_entry() const;

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
    bool is_translation() const { return a_ == 1 && c_ == 0 && d_ == 1; }

    // Image of t. Throws ConstructionError on a pole (c t + d = 0).
    Rational apply(const Rational& t) const;

    // Preimage of y. Throws ConstructionError when y is the horizon a/c.
    Rational apply_inverse(const Rational& y) const;

    // Poles only matter for c != 0; pole() is then -d/c.
    bool has_pole() const noexcept { return c_ != 0; }
    Rational pole() const { return rational(-d_, c_); }

    ProjMat inverse() const { return ProjMat(d_, -b_, -c_, a_); }

    friend ProjMat operator*(const ProjMat& lhs, const ProjMat& rhs) {
        return ProjMat(lhs.a_ * rhs.a_ + lhs.b_ * rhs.c_, lhs.a_ * rhs.b_ + lhs.b_ * rhs.d_,
                       lhs.c_ * rhs.a_ + lhs.d_ * rhs.c_, lhs.c_ * rhs.b_ + lhs.d_ * rhs.d_);
    }

    friend bool operator==(const ProjMat& x, const ProjMat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const ProjMat& x, const ProjMat& y) { return !(x == y); }

    std::array<Int, 4> entries() const { return {a_, b_, c_, d_}; }
    std::string str() const;

  private:
    Int a_, b_, c_, d_;
};

}  // namespace lm
