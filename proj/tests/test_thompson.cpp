#include <doctest.h>

#include <random>

#include <lm/errors.hpp>
#include <lm/thompson.hpp>

#include "oracles.hpp"

using namespace lm;

namespace {

BinTree random_tree(std::mt19937_64& rng, std::size_t carets) {
    if (carets == 0) return BinTree::leaf();
    std::size_t left = rng() % carets;
    return BinTree::caret(random_tree(rng, left), random_tree(rng, carets - 1 - left));
}

TreePair random_reduced_pair(std::mt19937_64& rng, std::size_t carets) {
    TreePair p(random_tree(rng, carets), random_tree(rng, carets));
    return reduce(p);
}

}  // namespace

TEST_SUITE("thompson") {

TEST_CASE("tree text form round-trips") {
    CHECK(BinTree::leaf().str() == "()");
    BinTree t = BinTree::caret(BinTree::caret(BinTree::leaf(), BinTree::leaf()), BinTree::leaf());
    CHECK(t.str() == "((()())())");
    CHECK(BinTree::parse(t.str()) == t);
    CHECK(t.caret_count() == 2);
    CHECK(t.leaf_paths() == std::vector<std::string>{"00", "01", "1"});
    CHECK(BinTree::from_leaf_paths(t.leaf_paths()) == t);
    CHECK_THROWS_AS(BinTree::parse("(()"), ParseError);
    CHECK_THROWS_AS(BinTree::from_leaf_paths({"0", "00"}), ConstructionError);
}

TEST_CASE("identical trees reduce to the trivial pair") {
    std::mt19937_64 rng(11);
    BinTree t = random_tree(rng, 6);
    TreePair p(t, t);
    CHECK(reduce(p) == TreePair::identity());
    CHECK(caret_count(p) == 0);
}

TEST_CASE("expansion then reduction returns the original") {
    // expand the first generator pair at leaf 2 (attach a caret both sides)
    TreePair x0 = x0_pair();
    std::vector<BinTree> dom_subs(x0.domain.leaf_count(), BinTree::leaf());
    std::vector<BinTree> ran_subs(x0.range.leaf_count(), BinTree::leaf());
    dom_subs[1] = BinTree::caret(BinTree::leaf(), BinTree::leaf());
    ran_subs[1] = dom_subs[1];
    TreePair expanded(x0.domain.graft(dom_subs), x0.range.graft(ran_subs));
    CHECK(expanded != x0);
    CHECK(!is_reduced(expanded));
    CHECK(reduce(expanded) == x0);
    CHECK(reduce(reduce(expanded)) == x0);  // idempotent
}

TEST_CASE("the eight-letter word multiplies to a four-caret pair") {
    // Two independent routes agree on the count; the five-caret pair
    // belongs to the full conjugated product (see the cantor suite).
    GroupWord w = parse_word("x0 x1^2 x0^-1 x1^-1 x0 x1^-1 x0^-1");
    TreePair p = word_to_pair(w);
    CHECK(is_reduced(p));
    CHECK(caret_count(p) == 4);
    TableResult viaBits = to_prefix_table(w, 32);
    REQUIRE(std::holds_alternative<PrefixTable>(viaBits));
    CHECK(reduce(from_prefix_table(std::get<PrefixTable>(viaBits))) == p);
}

TEST_CASE("generator times inverse is the identity pair") {
    CHECK(multiply(x0_pair(), inverse(x0_pair())) == TreePair::identity());
    CHECK(multiply(inverse(x1_pair()), x1_pair()) == TreePair::identity());
}

TEST_CASE("product against the table-composition oracle") {
    TreePair prod = multiply(x0_pair(), x1_pair());
    CHECK(caret_count(prod) == 3);
    PrefixTable expect = oracle::compose_tables(x0_table(), x1_table());
    CHECK(to_prefix_table(prod).rows == to_prefix_table(reduce(from_prefix_table(expect))).rows);
}

TEST_CASE("presentation relators multiply to the identity") {
    GroupWord u = parse_word("x0 x1^-1");
    for (const char* conj : {"x0^-1 x1 x0", "x0^-2 x1 x0^2"}) {
        GroupWord v = parse_word(conj);
        GroupWord comm = concat(concat(u, v), concat(u.inverse(), v.inverse()));
        CHECK(word_to_pair(comm) == TreePair::identity());
    }
}

TEST_CASE("caret metric of the generators") {
    CHECK(caret_count(TreePair::identity()) == 0);
    CHECK(caret_count(x0_pair()) == 2);
    CHECK(caret_count(x1_pair()) == 3);
    CHECK(to_prefix_table(x1_pair()).rows ==
          std::vector<std::pair<std::string, std::string>>{
              {"0", "0"}, {"100", "10"}, {"101", "110"}, {"11", "111"}});
}

TEST_CASE("table conversions are mutually inverse") {
    CHECK(from_prefix_table(to_prefix_table(x0_pair())) == x0_pair());
    CHECK(to_prefix_table(TreePair::identity()).rows ==
          std::vector<std::pair<std::string, std::string>>{{"", ""}});
    PrefixTable bad{{{"00", "0"}, {"01", "11"}, {"1", "10"}}};  // order-violating
    CHECK_THROWS_AS(from_prefix_table(bad), ConstructionError);
}

TEST_CASE("round-trip on random reduced pairs") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 1000; ++it) {
        TreePair p = random_reduced_pair(rng, 1 + rng() % 12);
        CHECK(from_prefix_table(to_prefix_table(p)) == p);
    }
}

TEST_CASE("group laws on random pairs, exactly") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 1000; ++it) {
        TreePair p = random_reduced_pair(rng, 1 + rng() % 8);
        TreePair q = random_reduced_pair(rng, 1 + rng() % 8);
        TreePair r = random_reduced_pair(rng, 1 + rng() % 8);
        CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
        CHECK(multiply(p, inverse(p)) == TreePair::identity());
        CHECK(is_reduced(multiply(p, q)));
        CHECK(caret_count(p) == caret_count(inverse(p)));
    }
}

TEST_CASE("multiplication matches table composition on random pairs") {
    std::mt19937_64 rng(271828);
    for (int it = 0; it < 1000; ++it) {
        TreePair p = random_reduced_pair(rng, 1 + rng() % 8);
        TreePair q = random_reduced_pair(rng, 1 + rng() % 8);
        PrefixTable via_tables =
            oracle::compose_tables(to_prefix_table(p), to_prefix_table(q));
        CHECK(multiply(p, q) == reduce(from_prefix_table(via_tables)));
    }
}

TEST_CASE("caret growth of the conjugated family outruns its letter count") {
    // N(a_n) = 2^n + 3 against the 30 + 4n generator bound: the ratio
    // exceeds 2^n / (35 n), compared as exact rationals.
    for (unsigned n = 1; n <= 12; ++n) {
        DistortionWitness w = build_a_n(n);
        TableResult r = to_prefix_table(w.cantor_word, default_table_depth_for_a_n(n));
        REQUIRE(std::holds_alternative<PrefixTable>(r));
        std::size_t carets = caret_count(reduce(from_prefix_table(std::get<PrefixTable>(r))));
        Rational ratio = rational(Int(static_cast<unsigned long>(carets)), Int(w.word_bound));
        Rational floor = rational(pow2(n), Int(35ul * n));
        CHECK(ratio > floor);
    }
}

TEST_CASE("pair json round-trip") {
    TreePair p = multiply(x0_pair(), x1_pair());
    CHECK(TreePair::from_json(p.to_json()) == p);
}

TEST_CASE("word evaluation rejects other alphabets") {
    CHECK_THROWS_AS(word_to_pair(parse_word("y_10")), ConstructionError);
    CHECK_THROWS_AS(word_to_pair(parse_word("a")), ConstructionError);
}

}  // TEST_SUITE
