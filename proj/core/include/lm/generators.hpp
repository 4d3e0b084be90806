#pragma once

#include <random>

#include "lm/piecewise_map.hpp"
#include "lm/word.hpp"

namespace lm {

// The three generating homeomorphisms: a(t) = t + 1; b supported on [0, 1]
// with pieces t/(1-t) and (3t-1)/t (then t + 1 beyond); c supported on
// [0, 1] with the single piece 2t/(1+t).
const PiecewiseMap& gen_a();
const PiecewiseMap& gen_b();
const PiecewiseMap& gen_c();

const PiecewiseMap& generator_map(const Symbol& s);

// Evaluates a word over {a, b, c} by applying its letters left to right
// (the product uv means "apply u first"), so eval_r(concat(u, v)) =
// compose(eval_r(u), eval_r(v)).
PiecewiseMap eval_r(const GroupWord& w);

// The six signed generator letters of the standard generating set.
std::vector<GroupWord> r_model_letter_words();

// bc a^-1 c^-1 a b^-1 and bb a^-1 b^-1 a b^-1, the generators of the
// embedded Baumslag-Solitar copy.
GroupWord g1_word();
GroupWord g2_word();

const PiecewiseMap& g1_map();
const PiecewiseMap& g2_map();

// Uniform random word: `len` letters drawn uniformly from the six signed
// generators with exponent +-1 (run-reduction may shorten it). Used by the
// property suites; all randomness flows through a caller-seeded mt19937_64
// so runs are reproducible.
GroupWord random_r_word(std::mt19937_64& rng, unsigned len);

}  // namespace lm
