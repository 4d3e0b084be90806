#include <benchmark/benchmark.h>

#include <random>

#include <lm/lm.hpp>

namespace {

void bm_word_eval(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<lm::GroupWord> words;
    for (int i = 0; i < 64; ++i)
        words.push_back(lm::random_r_word(rng, static_cast<unsigned>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lm::eval_r(words[i]));
        i = (i + 1) % words.size();
    }
}
BENCHMARK(bm_word_eval)->Arg(6)->Arg(10)->Arg(14);

void bm_g2_power(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lm::power(lm::g2_map(), state.range(0)));
}
BENCHMARK(bm_g2_power)->Arg(5)->Arg(20)->Arg(50);

void bm_ball(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lm::enumerate_ball(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(bm_ball)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_an_table(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const lm::GroupWord w = lm::build_a_n(n).cantor_word;
    for (auto _ : state)
        benchmark::DoNotOptimize(lm::to_prefix_table(w, lm::default_table_depth_for_a_n(n)));
}
BENCHMARK(bm_an_table)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

void bm_tree_multiply(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto random_tree = [&rng](auto&& self, std::size_t carets) -> lm::BinTree {
        if (carets == 0) return lm::BinTree::leaf();
        std::size_t left = rng() % carets;
        return lm::BinTree::caret(self(self, left), self(self, carets - 1 - left));
    };
    const std::size_t carets = static_cast<std::size_t>(state.range(0));
    lm::TreePair p(random_tree(random_tree, carets), random_tree(random_tree, carets));
    lm::TreePair q(random_tree(random_tree, carets), random_tree(random_tree, carets));
    for (auto _ : state) benchmark::DoNotOptimize(lm::multiply(p, q));
}
BENCHMARK(bm_tree_multiply)->Arg(8)->Arg(64)->Arg(512);

void bm_transducer(benchmark::State& state) {
    const lm::EpSeq point("0110", "100101");
    const long k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(lm::apply_y(k, point));
}
BENCHMARK(bm_transducer)->Arg(1)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
