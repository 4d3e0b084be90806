#include "lm/piecewise_map.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lm/errors.hpp"

namespace lm {

PiecewiseMap::PiecewiseMap() : mats_(1) {}

PiecewiseMap::PiecewiseMap(raw_tag, std::vector<Rational> breakpoints, std::vector<ProjMat> mats)
    : breakpoints_(std::move(breakpoints)), mats_(std::move(mats)) {
    prune_spurious();
}

PiecewiseMap::PiecewiseMap(std::vector<Rational> breakpoints, std::vector<ProjMat> mats)
    : breakpoints_(std::move(breakpoints)), mats_(std::move(mats)) {
    if (mats_.size() != breakpoints_.size() + 1)
        throw ConstructionError("piecewise map: need breakpoints.size()+1 matrices, got " +
                                std::to_string(mats_.size()) + " for " +
                                std::to_string(breakpoints_.size()) + " breakpoints");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i - 1] < breakpoints_[i]))
            throw ConstructionError("piecewise map: breakpoints not strictly increasing at index " +
                                    std::to_string(i) + " (" + to_string(breakpoints_[i]) + ")");
    prune_spurious();
    validate();
}

void PiecewiseMap::prune_spurious() {
    std::size_t w = 0;  // write index into breakpoints_
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (mats_[w] == mats_[i + 1]) continue;  // merge cells i and i+1
        breakpoints_[w] = breakpoints_[i];
        mats_[w + 1] = mats_[i + 1];
        ++w;
    }
    breakpoints_.resize(w);
    mats_.resize(w + 1);
}

void PiecewiseMap::validate() const {
    if (!mats_.front().is_translation())
        throw ConstructionError("piecewise map: leftmost component is not an integer translation: " +
                                mats_.front().str());
    if (!mats_.back().is_translation())
        throw ConstructionError("piecewise map: rightmost component is not an integer translation: " +
                                mats_.back().str());
    for (std::size_t i = 0; i < mats_.size(); ++i) {
        const ProjMat& m = mats_[i];
        if (m.det() <= 0)
            throw ConstructionError("piecewise map: component " + std::to_string(i) +
                                    " is not increasing: " + m.str());
        if (m.has_pole()) {
            // Interior components are closed bounded intervals; a pole on
            // the closure breaks monotonicity there.
            const Rational p = m.pole();
            const Rational& lo = breakpoints_[i - 1];
            const Rational& hi = breakpoints_[i];
            if (p >= lo && p <= hi)
                throw ConstructionError("piecewise map: pole " + to_string(p) + " of " + m.str() +
                                        " inside component [" + to_string(lo) + ", " +
                                        to_string(hi) + "]");
        }
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        const Rational& s = breakpoints_[i];
        if (mats_[i].apply(s) != mats_[i + 1].apply(s))
            throw ConstructionError("piecewise map: discontinuous at breakpoint " + to_string(s));
    }
}

const ProjMat& PiecewiseMap::mat_at(const Rational& t) const {
    std::size_t idx =
        std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t) - breakpoints_.begin();
    return mats_[idx];
}

Rational PiecewiseMap::eval_inverse(const Rational& y) const {
    // f is increasing, so locate the component by comparing y with the
    // images of the breakpoints.
    std::size_t idx = 0;
    while (idx < breakpoints_.size() && mats_[idx + 1].apply(breakpoints_[idx]) < y) ++idx;
    return mats_[idx].apply_inverse(y);
}

const ProjMat& PiecewiseMap::mat_on(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) throw ConstructionError("mat_on: empty interval");
    for (const Rational& s : breakpoints_)
        if (lo < s && s < hi)
            throw ConstructionError("mat_on: breakpoint " + to_string(s) + " inside (" +
                                    to_string(lo) + ", " + to_string(hi) + ")");
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    return mat_at(mid);
}

PiecewiseMap compose(const PiecewiseMap& f, const PiecewiseMap& g) {
    // Candidate breakpoints: B(f) together with the pullback of B(g).
    std::vector<Rational> cand = f.breakpoints();
    for (const Rational& q : g.breakpoints()) cand.push_back(f.eval_inverse(q));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // One sample point in the interior of each cell picks out the pair of
    // components whose matrices multiply to the piece of g o f there.
    std::vector<ProjMat> mats;
    mats.reserve(cand.size() + 1);
    for (std::size_t i = 0; i <= cand.size(); ++i) {
        Rational sample;
        if (cand.empty())
            sample = 0;
        else if (i == 0)
            sample = cand.front() - 1;
        else if (i == cand.size())
            sample = cand.back() + 1;
        else {
            sample = (cand[i - 1] + cand[i]) / 2;
            sample.canonicalize();
        }
        const ProjMat& mf = f.mat_at(sample);
        const ProjMat& mg = g.mat_at(mf.apply(sample));
        mats.push_back(mg * mf);
    }

    PiecewiseMap result(PiecewiseMap::raw_tag{}, std::move(cand), std::move(mats));
#ifndef NDEBUG
    result.validate();
#endif
    return result;
}

PiecewiseMap invert(const PiecewiseMap& f) {
    std::vector<Rational> bps;
    bps.reserve(f.breakpoints().size());
    for (const Rational& s : f.breakpoints()) bps.push_back(f.eval(s));
    std::vector<ProjMat> mats;
    mats.reserve(f.mats().size());
    for (const ProjMat& m : f.mats()) mats.push_back(m.inverse());
    PiecewiseMap result(PiecewiseMap::raw_tag{}, std::move(bps), std::move(mats));
#ifndef NDEBUG
    result.validate();
#endif
    return result;
}

PiecewiseMap power(const PiecewiseMap& f, long e) {
    if (e < 0) return power(invert(f), -e);
    PiecewiseMap acc;
    PiecewiseMap base = f;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = compose(acc, base);
        k >>= 1;
        if (k > 0) base = compose(base, base);
    }
    return acc;
}

std::string PiecewiseMap::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < breakpoints_.size(); ++i)
        os << (i ? "," : "") << to_string(breakpoints_[i]);
    os << "|";
    for (std::size_t i = 0; i < mats_.size(); ++i) os << (i ? "," : "") << mats_[i].str();
    os << "}";
    return os.str();
}

std::string PiecewiseMap::to_json() const {
    nlohmann::json j;
    j["breakpoints"] = nlohmann::json::array();
    for (const Rational& s : breakpoints_) j["breakpoints"].push_back(to_string(s));
    j["mats"] = nlohmann::json::array();
    for (const ProjMat& m : mats_)
        j["mats"].push_back({to_string(m.a()), to_string(m.b()), to_string(m.c()), to_string(m.d())});
    return j.dump();
}

PiecewiseMap PiecewiseMap::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("map JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("mats"))
        throw ParseError("map JSON: need object with 'breakpoints' and 'mats'", 0);
    std::vector<Rational> bps;
    for (const auto& s : j["breakpoints"]) bps.push_back(rational_from_string(s.get<std::string>()));
    std::vector<ProjMat> mats;
    for (const auto& m : j["mats"]) {
        if (!m.is_array() || m.size() != 4) throw ParseError("map JSON: matrix needs 4 entries", 0);
        mats.emplace_back(int_from_string(m[0].get<std::string>()),
                          int_from_string(m[1].get<std::string>()),
                          int_from_string(m[2].get<std::string>()),
                          int_from_string(m[3].get<std::string>()));
    }
    return PiecewiseMap(std::move(bps), std::move(mats));
}

}  // namespace lm
