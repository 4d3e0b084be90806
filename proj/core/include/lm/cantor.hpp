#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lm/word.hpp"

namespace lm {

// An eventually periodic binary sequence u v v v ... in canonical form:
// the period is primitive (not a proper power) and the preperiod is
// shortest (its last bit never matches the period's last bit). Canonical
// forms are unique, so equality is plain field comparison.
class EpSeq {
  public:
    // Canonicalizes. Throws ConstructionError on non-binary characters or
    // an empty period.
    EpSeq(std::string preperiod, std::string period);

    // Text form "pre(per)", e.g. "01(10)" or "(0)".
    static EpSeq parse(std::string_view text);
    std::string str() const { return pre_ + "(" + per_ + ")"; }

    const std::string& preperiod() const noexcept { return pre_; }
    const std::string& period() const noexcept { return per_; }

    char bit(std::size_t i) const {
        return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
    }
    std::string prefix(std::size_t k) const;
    bool starts_with(std::string_view w) const;

    // Sequence with the first k bits removed / with w prepended.
    EpSeq drop(std::size_t k) const;
    EpSeq prepend(std::string_view w) const;

    friend bool operator==(const EpSeq& s, const EpSeq& t) {
        return s.pre_ == t.pre_ && s.per_ == t.per_;
    }
    friend bool operator!=(const EpSeq& s, const EpSeq& t) { return !(s == t); }
    friend bool operator<(const EpSeq& s, const EpSeq& t) {
        return s.pre_ != t.pre_ ? s.pre_ < t.pre_ : s.per_ < t.per_;
    }

  private:
    std::string pre_;
    std::string per_;
};

// An order-preserving prefix-exchange homeomorphism: rows pair the leaves
// of one finite binary tree with the leaves of another, in lexicographic
// order on both sides.
struct PrefixTable {
    std::vector<std::pair<std::string, std::string>> rows;

    // Checks both prefix sets are complete antichains of equal size and the
    // ranges are lexicographically increasing along sorted domains. Throws
    // ConstructionError otherwise.
    void validate() const;

    EpSeq apply(const EpSeq& s) const;

    std::string to_json() const;
    static PrefixTable from_json(const std::string& text);
};

const PrefixTable& x0_table();
const PrefixTable& x1_table();

// y^k evaluated exactly: the transducer state over an eventually periodic
// input is (pending sign, offset in period), which must cycle, so the
// output is detected eventually periodic.
EpSeq apply_y(long k, const EpSeq& s);

// y_s^k: rewrites the tail of points in the cylinder s, fixes the rest.
EpSeq apply_y_at(std::string_view address, long k, const EpSeq& s);

// Applies a Cantor-model word letter by letter, left to right.
EpSeq apply_word(const GroupWord& w, const EpSeq& s);

// Outcome of feeding a finite prefix of the input through a word: either
// the image of the cylinder resolves as "output prefix plus y^residual
// pending at the tail", or some case split needs bits beyond the prefix.
struct PartialEval {
    bool resolved = false;
    std::string out;     // meaningful when resolved
    long residual = 0;   // y-exponent pending at the tail; 0 means none
};

PartialEval partial_eval(const GroupWord& w, std::string_view prefix);

struct NotInF {
    std::string witness;  // cylinder on which a nonzero residual persists
};
struct DepthExceeded {
    std::vector<std::string> frontier;  // unresolved prefixes at max_depth
};
using TableResult = std::variant<PrefixTable, NotInF, DepthExceeded>;

// Refines the domain tree until every leaf resolves with zero residual
// (the word is a prefix-exchange map and the table is returned), or some
// leaf resolves with a nonzero residual (which persists under refinement,
// so the word is not one: NotInF), or max_depth stops the refinement.
TableResult to_prefix_table(const GroupWord& w, unsigned max_depth);

// The word family y_010^n (x0 x1^2 x0^-1 x1^-1 x0 x1^-1 x0^-1) y_0111^-n
// y_010^-n y_011^n, whose reduced tree pair grows a 2^n-caret spine while
// the conjugator substitution keeps its generator length linear in n.
struct DistortionWitness {
    GroupWord cantor_word;
    GroupWord r_word;             // substituted word over {a, b, c}
    unsigned long cantor_letters; // 8 + 4n
    unsigned long r_letters;      // length of r_word, <= 30 + 4n
    unsigned long word_bound;     // 30 + 4n
};

// Throws ConstructionError for n = 0.
DistortionWitness build_a_n(unsigned n);

// The reduced pair of a_n keeps 2^n carets along one spine, so its table
// has rows of depth 2^n + 3; the default cap covers that plus headroom.
inline unsigned default_table_depth_for_a_n(unsigned n) {
    return (n < 26 ? (1u << n) : 1u << 26) + 16;
}

}  // namespace lm
