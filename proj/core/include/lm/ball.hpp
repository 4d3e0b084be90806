#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "lm/piecewise_map.hpp"
#include "lm/word.hpp"

namespace lm {

struct BallEntry {
    PiecewiseMap element;
    unsigned radius;   // exact word length over the six signed generators
    GroupWord word;    // one geodesic word realizing it
};

struct Ball {
    std::vector<BallEntry> elements;                    // sorted by (radius, canonical form)
    std::unordered_map<std::string, unsigned> lengths;  // canonical form -> exact word length

    std::vector<std::size_t> sphere_sizes() const;  // index r -> #elements at distance r
};

struct BallCaps {
    unsigned max_radius = 6;
    // Radii past max_radius are admitted only when the free-group cost
    // estimate stays within this budget (the CLI wires LM_MAX_CELLS here).
    unsigned long long max_cells = 50'000;
};

// Free-group upper bound 1 + 6 (5^r - 1) / 4 on the ball cardinality.
Int ball_cost_estimate(unsigned radius);

// Breadth-first enumeration of the radius-`radius` ball over the standard
// generating set, with canonical serialized forms as hash keys. Balls are
// nested and every element is assigned its exact word length. Throws
// CapError (with the cost estimate) when the caps refuse the radius.
Ball enumerate_ball(unsigned radius, const BallCaps& caps = {});

}  // namespace lm
