#include "lm/proj_mat.hpp"

#include "lm/errors.hpp"

namespace lm {

ProjMat::ProjMat(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ == 0)
        throw ConstructionError("singular matrix [" + a_.get_str() + "," + b_.get_str() + "," +
                                c_.get_str() + "," + d_.get_str() + "]");
    Int g = gcd(gcd(abs(a_), abs(b_)), gcd(abs(c_), abs(d_)));
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
        d_ /= g;
    }
    if (a_ < 0 || (a_ == 0 && b_ < 0)) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

Int ProjMat::max_abs_entry() const {
    Int m = abs(a_);
    if (abs(b_) > m) m = abs(b_);
    if (abs(c_) > m) m = abs(c_);
    if (abs(d_) > m) m = abs(d_);
    return m;
}

Rational ProjMat::apply(const Rational& t) const {
    Rational den = c_ * t + d_;
    if (den == 0)
        throw ConstructionError("pole of " + str() + " at t = " + to_string(t));
    Rational num = a_ * t + b_;
    Rational r = num / den;
    r.canonicalize();
    return r;
}

Rational ProjMat::apply_inverse(const Rational& y) const {
    Rational den = -c_ * y + a_;
    if (den == 0)
        throw ConstructionError("horizon of " + str() + " at y = " + to_string(y));
    Rational num = d_ * y - b_;
    Rational r = num / den;
    r.canonicalize();
    return r;
}

std::string ProjMat::str() const {
    return "[" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," + d_.get_str() + "]";
}

}  // namespace lm
