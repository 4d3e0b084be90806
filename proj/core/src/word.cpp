#include "lm/word.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "lm/errors.hpp"

namespace lm {

std::string to_string(Alphabet a) {
    switch (a) {
        case Alphabet::Any: return "any";
        case Alphabet::RModel: return "R";
        case Alphabet::Cantor: return "cantor";
        case Alphabet::BS: return "BS";
    }
    return "?";
}

Alphabet Symbol::alphabet() const {
    switch (base) {
        case 'a':
        case 'b':
        case 'c': return Alphabet::RModel;
        case 'y': return Alphabet::Cantor;
        case 'x': return sub.empty() ? Alphabet::BS : Alphabet::Cantor;
        case 't': return Alphabet::BS;
    }
    return Alphabet::Any;
}

std::string Symbol::str() const {
    if (base == 'x' && !sub.empty()) return std::string("x") + sub;
    if (base == 'y' && !sub.empty()) return "y_" + sub;
    return std::string(1, base);
}

GroupWord::GroupWord(std::vector<Letter> letters) {
    for (const Letter& l : letters) append(l.sym, l.exp);
}

static Alphabet join_alphabets(Alphabet a, Alphabet b) {
    if (a == Alphabet::Any) return b;
    if (b == Alphabet::Any || a == b) return a;
    throw ParseError("word mixes alphabets " + to_string(a) + " and " + to_string(b), 0);
}

GroupWord& GroupWord::append(const Symbol& s, long exp) {
    if (exp == 0) throw ParseError("zero exponent for '" + s.str() + "'", 0);
    alphabet_ = join_alphabets(alphabet_, s.alphabet());
    if (!letters_.empty() && letters_.back().sym == s) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return *this;
    }
    letters_.push_back({s, exp});
    return *this;
}

GroupWord& GroupWord::append(const GroupWord& w) {
    for (const Letter& l : w.letters_) append(l.sym, l.exp);
    return *this;
}

unsigned long GroupWord::length() const {
    unsigned long n = 0;
    for (const Letter& l : letters_) n += static_cast<unsigned long>(l.exp < 0 ? -l.exp : l.exp);
    return n;
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->sym, -it->exp);
    return w;
}

GroupWord GroupWord::pow(long e) const {
    const GroupWord& base = *this;
    GroupWord w;
    long reps = e < 0 ? -e : e;
    for (long i = 0; i < reps; ++i) w.append(e < 0 ? base.inverse() : base);
    return w;
}

std::string GroupWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ' ';
        os << letters_[i].sym.str();
        if (letters_[i].exp != 1) os << '^' << letters_[i].exp;
    }
    return os.str();
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
    GroupWord w = u;
    w.append(v);
    return w;
}

namespace {

bool is_binary(std::string_view s) {
    for (char ch : s)
        if (ch != '0' && ch != '1') return false;
    return true;
}

// One token = symbol[^exponent]; returns the parsed letter.
Letter parse_token(std::string_view tok, std::size_t pos) {
    std::string_view sym_text = tok;
    long exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
        sym_text = tok.substr(0, caret);
        std::string exp_text(tok.substr(caret + 1));
        if (exp_text.empty()) throw ParseError("missing exponent after '^'", pos + caret);
        char* end = nullptr;
        errno = 0;
        exp = std::strtol(exp_text.c_str(), &end, 10);
        if (errno != 0 || end == exp_text.c_str() || *end != '\0')
            throw ParseError("malformed exponent '" + exp_text + "'", pos + caret + 1);
        if (exp == 0) throw ParseError("zero exponent", pos + caret + 1);
    }
    if (sym_text.empty()) throw ParseError("empty symbol", pos);

    char head = sym_text[0];
    std::string_view rest = sym_text.substr(1);
    if (head >= 'A' && head <= 'C') {  // uppercase inverse shorthand
        if (!rest.empty()) throw ParseError("unknown symbol '" + std::string(sym_text) + "'", pos);
        return {{static_cast<char>(head - 'A' + 'a'), {}}, -exp};
    }
    switch (head) {
        case 'a':
        case 'b':
        case 'c':
        case 't':
            if (!rest.empty())
                throw ParseError("unknown symbol '" + std::string(sym_text) + "'", pos);
            return {{head, {}}, exp};
        case 'x': {
            if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);  // accept x_0 for x0
            if (rest.empty()) return {sym_bs_x(), exp};
            if (rest != "0" && rest != "1")
                throw ParseError("unknown symbol '" + std::string(sym_text) + "'", pos);
            return {{'x', std::string(rest)}, exp};
        }
        case 'y': {
            if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
            if (!is_binary(rest))
                throw ParseError("bad subscript in '" + std::string(sym_text) +
                                     "': want a binary word",
                                 pos);
            return {sym_y(std::string(rest)), exp};
        }
        default: throw ParseError("unknown symbol '" + std::string(sym_text) + "'", pos);
    }
}

}  // namespace

GroupWord parse_word(std::string_view text, Alphabet expected) {
    GroupWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        Letter l = parse_token(text.substr(start, i - start), start);
        if (expected != Alphabet::Any && l.sym.alphabet() != expected)
            throw ParseError("symbol '" + l.sym.str() + "' is not in the " + to_string(expected) +
                                 " alphabet",
                             start);
        w.append(l.sym, l.exp);
    }
    return w;
}

GroupWord to_cantor_word(const GroupWord& w) {
    if (w.alphabet() != Alphabet::RModel && w.alphabet() != Alphabet::Any)
        throw ConstructionError("to_cantor_word: expected a word over {a, b, c}");
    GroupWord out;
    for (const Letter& l : w.letters()) {
        switch (l.sym.base) {
            case 'a': out.append(sym_x0(), l.exp); break;
            case 'b': out.append(sym_x1(), l.exp); break;
            case 'c': out.append(sym_y("10"), l.exp); break;
        }
    }
    return out;
}

namespace {

// Conjugating prefixes u with y_s = u c u^-1 (letters applied left to
// right), derived from the relations carrying y_10 to deeper addresses.
GroupWord conjugator_for(const std::string& address) {
    GroupWord u;
    if (address == "10") return u;
    if (address == "010") {
        u.append(sym_a(), 1).append(sym_b(), 1);
        return u;
    }
    if (address == "011") {
        u.append(sym_a(), 1).append(sym_b(), 1).append(sym_a(), -1);
        return u;
    }
    if (address == "0111") {
        u.append(sym_a(), 1).append(sym_b(), 1).append(sym_a(), -1).append(sym_b(), 1).append(
            sym_a(), -1);
        return u;
    }
    throw ConstructionError("to_r_model_word: no conjugator known for y_" + address);
}

}  // namespace

GroupWord to_r_model_word(const GroupWord& w) {
    if (w.alphabet() != Alphabet::Cantor && w.alphabet() != Alphabet::Any)
        throw ConstructionError("to_r_model_word: expected a Cantor-model word");
    GroupWord out;
    for (const Letter& l : w.letters()) {
        if (l.sym.base == 'x') {
            out.append(l.sym.sub == "0" ? sym_a() : sym_b(), l.exp);
            continue;
        }
        GroupWord u = conjugator_for(l.sym.sub);
        out.append(u);
        out.append(sym_c(), l.exp);
        out.append(u.inverse());
    }
    return out;
}

}  // namespace lm
