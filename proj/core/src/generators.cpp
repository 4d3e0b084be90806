#include "lm/generators.hpp"

#include "lm/errors.hpp"

namespace lm {

const PiecewiseMap& gen_a() {
    static const PiecewiseMap m({}, {ProjMat::translation(1)});
    return m;
}

const PiecewiseMap& gen_b() {
    static const PiecewiseMap m({rational(0), rational(1, 2), rational(1)},
                                {ProjMat(), ProjMat(1, 0, -1, 1), ProjMat(3, -1, 1, 0),
                                 ProjMat::translation(1)});
    return m;
}

const PiecewiseMap& gen_c() {
    static const PiecewiseMap m({rational(0), rational(1)},
                                {ProjMat(), ProjMat(2, 0, 1, 1), ProjMat()});
    return m;
}

const PiecewiseMap& generator_map(const Symbol& s) {
    switch (s.base) {
        case 'a': return gen_a();
        case 'b': return gen_b();
        case 'c': return gen_c();
    }
    throw ConstructionError("generator_map: '" + s.str() + "' has no map on the line");
}

PiecewiseMap eval_r(const GroupWord& w) {
    if (w.alphabet() != Alphabet::RModel && w.alphabet() != Alphabet::Any)
        throw ConstructionError("eval_r: expected a word over {a, b, c}");
    PiecewiseMap acc;
    for (const Letter& l : w.letters())
        acc = compose(acc, power(generator_map(l.sym), l.exp));
    return acc;
}

std::vector<GroupWord> r_model_letter_words() {
    std::vector<GroupWord> out;
    for (Symbol s : {sym_a(), sym_b(), sym_c()})
        for (long e : {1L, -1L}) {
            GroupWord w;
            w.append(s, e);
            out.push_back(w);
        }
    return out;
}

GroupWord g1_word() { return parse_word("b c a^-1 c^-1 a b^-1"); }
GroupWord g2_word() { return parse_word("b b a^-1 b^-1 a b^-1"); }

const PiecewiseMap& g1_map() {
    static const PiecewiseMap m = eval_r(g1_word());
    return m;
}

const PiecewiseMap& g2_map() {
    static const PiecewiseMap m = eval_r(g2_word());
    return m;
}

GroupWord random_r_word(std::mt19937_64& rng, unsigned len) {
    static const Symbol symbols[3] = {sym_a(), sym_b(), sym_c()};
    GroupWord w;
    for (unsigned i = 0; i < len; ++i) {
        // Plain modulo keeps the draw identical across standard libraries.
        unsigned k = static_cast<unsigned>(rng() % 6);
        w.append(symbols[k / 2], k % 2 == 0 ? 1 : -1);
    }
    return w;
}

}  // namespace lm
