#pragma once

// Umbrella header. Exact arithmetic for the Lodha-Moore group in both of
// its standard realizations, plus the word-length machinery built on it.

#include <lm/ball.hpp>
#include <lm/bs12.hpp>
#include <lm/cantor.hpp>
#include <lm/complexity.hpp>
#include <lm/errors.hpp>
#include <lm/format.hpp>
#include <lm/generators.hpp>
#include <lm/piecewise_map.hpp>
#include <lm/proj_mat.hpp>
#include <lm/rational.hpp>
#include <lm/thompson.hpp>
#include <lm/word.hpp>
