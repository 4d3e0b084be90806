#include "lm/ball.hpp"

#include <algorithm>

#include "lm/errors.hpp"
#include "lm/generators.hpp"

namespace lm {

Int ball_cost_estimate(unsigned radius) {
    if (radius == 0) return 1;
    return 1 + 6 * (ipow(Int(5), radius) - 1) / 4;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
    std::vector<std::size_t> sizes;
    for (const BallEntry& e : elements) {
        if (e.radius >= sizes.size()) sizes.resize(e.radius + 1, 0);
        ++sizes[e.radius];
    }
    return sizes;
}

Ball enumerate_ball(unsigned radius, const BallCaps& caps) {
    const Int estimate = ball_cost_estimate(radius);
    if (radius > caps.max_radius && estimate > Int(static_cast<unsigned long>(caps.max_cells)))
        throw CapError("ball radius " + std::to_string(radius) + " exceeds cap " +
                           std::to_string(caps.max_radius) + "; estimated cost " +
                           estimate.get_str() + " elements",
                       estimate.get_str());

    Ball ball;
    ball.elements.push_back({PiecewiseMap::identity(), 0, GroupWord{}});
    ball.lengths.emplace(PiecewiseMap::identity().str(), 0);

    const std::vector<GroupWord> letters = r_model_letter_words();
    std::vector<PiecewiseMap> letter_maps;
    for (const GroupWord& w : letters) letter_maps.push_back(eval_r(w));

    std::size_t frontier_begin = 0;
    for (unsigned r = 1; r <= radius; ++r) {
        const std::size_t frontier_end = ball.elements.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (std::size_t k = 0; k < letters.size(); ++k) {
                PiecewiseMap next = compose(ball.elements[i].element, letter_maps[k]);
                std::string key = next.str();
                if (ball.lengths.emplace(key, r).second)
                    ball.elements.push_back(
                        {std::move(next), r, concat(ball.elements[i].word, letters[k])});
            }
        }
        frontier_begin = frontier_end;
    }

    std::sort(ball.elements.begin(), ball.elements.end(),
              [](const BallEntry& x, const BallEntry& y) {
                  if (x.radius != y.radius) return x.radius < y.radius;
                  return x.element.str() < y.element.str();
              });
    return ball;
}

}  // namespace lm
