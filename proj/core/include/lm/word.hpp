#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lm/rational.hpp"

namespace lm {

enum class Alphabet {
    Any,     // empty word, valid over every alphabet
    RModel,  // a, b, c
    Cantor,  // x0, x1, y_s for finite binary s
    BS,      // x, t
};

std::string to_string(Alphabet a);

// A generator symbol. `base` is one of a b c x y t; `sub` is the subscript:
// "0"/"1" for the prefix maps x0/x1, a binary address for y_s (empty means
// y itself), and empty otherwise.
struct Symbol {
    char base = 'a';
    std::string sub;

    Alphabet alphabet() const;
    std::string str() const;

    friend bool operator==(const Symbol& s, const Symbol& t) {
        return s.base == t.base && s.sub == t.sub;
    }
    friend bool operator!=(const Symbol& s, const Symbol& t) { return !(s == t); }
};

inline Symbol sym_a() { return {'a', {}}; }
inline Symbol sym_b() { return {'b', {}}; }
inline Symbol sym_c() { return {'c', {}}; }
inline Symbol sym_x0() { return {'x', "0"}; }
inline Symbol sym_x1() { return {'x', "1"}; }
inline Symbol sym_y(std::string address = {}) { return {'y', std::move(address)}; }
inline Symbol sym_bs_x() { return {'x', {}}; }
inline Symbol sym_bs_t() { return {'t', {}}; }

struct Letter {
    Symbol sym;
    long exp = 1;  // nonzero
};

// A word over one generator alphabet, kept run-reduced: adjacent letters
// always carry distinct symbols and no letter has exponent zero. The word
// metric counts generator instances, so length() = sum of |exp|.
class GroupWord {
  public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Alphabet alphabet() const noexcept { return alphabet_; }
    bool empty() const noexcept { return letters_.empty(); }

    // Sum of |exponent| over letters.
    unsigned long length() const;

    GroupWord& append(const Symbol& s, long exp);
    GroupWord& append(const GroupWord& w);

    GroupWord inverse() const;
    GroupWord pow(long e) const;

    std::string str() const;

    friend bool operator==(const GroupWord& u, const GroupWord& v) {
        if (u.letters_.size() != v.letters_.size()) return false;
        for (std::size_t i = 0; i < u.letters_.size(); ++i)
            if (u.letters_[i].sym != v.letters_[i].sym || u.letters_[i].exp != v.letters_[i].exp)
                return false;
        return true;
    }

  private:
    std::vector<Letter> letters_;
    Alphabet alphabet_ = Alphabet::Any;
};

GroupWord concat(const GroupWord& u, const GroupWord& v);

// Parses the whitespace-separated word grammar: tokens a b c x0 x1
// y_<binary> x t with an optional ^<integer> exponent; uppercase A B C are
// the inverses of a b c. Throws ParseError (position-tagged) on unknown
// symbols, malformed or zero exponents, bad subscripts, or when the text
// mixes alphabets. `expected` restricts the alphabet when not Any.
GroupWord parse_word(std::string_view text, Alphabet expected = Alphabet::Any);

// a -> x0, b -> x1, c -> y_10.
GroupWord to_cantor_word(const GroupWord& w);

// x0 -> a, x1 -> b, and y_s -> u c u^-1 for the addresses 10, 010, 0111,
// 011 whose conjugating prefixes u over {a, b} are known. Throws
// ConstructionError for other addresses.
GroupWord to_r_model_word(const GroupWord& w);

}  // namespace lm
