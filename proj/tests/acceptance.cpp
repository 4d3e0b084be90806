// Acceptance suite: one all-or-nothing check per numbered criterion, every
// comparison in exact arithmetic (zero tolerance). Prints one line per
// criterion; the exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <lm/lm.hpp>

#include "oracles.hpp"

using namespace lm;

namespace {

int g_failures = 0;

void run(int idx, const char* name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%s%.2fs)\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : (detail + ", ").c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

PiecewiseMap map_of(const char* text) { return eval_r(parse_word(text)); }

bool criterion_1(std::string& detail) {
    bool ok = true;
    ok &= map_of("a") == PiecewiseMap({}, {ProjMat::translation(1)});
    ok &= map_of("a^-1") == PiecewiseMap({}, {ProjMat::translation(-1)});
    ok &= map_of("b") ==
          PiecewiseMap({rational(0), rational(1, 2), rational(1)},
                       {ProjMat(), ProjMat(1, 0, -1, 1), ProjMat(3, -1, 1, 0),
                        ProjMat::translation(1)});
    ok &= map_of("b^-1") ==
          PiecewiseMap({rational(0), rational(1), rational(2)},
                       {ProjMat(), ProjMat(1, 0, 1, 1), ProjMat(0, 1, -1, 3),
                        ProjMat::translation(-1)});
    ok &= map_of("c") ==
          PiecewiseMap({rational(0), rational(1)}, {ProjMat(), ProjMat(2, 0, 1, 1), ProjMat()});
    ok &= map_of("c^-1") ==
          PiecewiseMap({rational(0), rational(1)}, {ProjMat(), ProjMat(1, 0, -1, 2), ProjMat()});
    ok &= map_of("b c a^-1 c^-1 a b^-1") ==
          PiecewiseMap({rational(0), rational(1, 2), rational(1)},
                       {ProjMat(), ProjMat(2, 0, 2, 1), ProjMat(0, 1, -2, 3), ProjMat()});
    ok &= map_of("b b a^-1 b^-1 a b^-1") ==
          PiecewiseMap({rational(0), rational(1, 3), rational(1, 2), rational(1)},
                       {ProjMat(), ProjMat(1, 0, -1, 1), ProjMat(4, -1, 5, -1),
                        ProjMat(0, 1, -1, 2), ProjMat()});
    detail = "8 displayed tables";
    return ok;
}

bool criterion_2(std::string& detail) {
    IterateReport rep = check_iterates(20, 20);
    detail = std::to_string(rep.checked) + " component comparisons";
    return rep.all_match();
}

bool criterion_3(std::string& detail) {
    std::mt19937_64 rng(314159);
    const auto letters = r_model_letter_words();
    const unsigned trials = 10000;
    for (unsigned it = 0; it < trials; ++it) {
        PiecewiseMap f = eval_r(random_r_word(rng, 1 + rng() % 14));
        if (!check_estimation_lemmas(f, letters[rng() % 6]).all_hold()) {
            detail = "falsified at trial " + std::to_string(it);
            return false;
        }
    }
    detail = std::to_string(trials) + " random (f, s) pairs";
    return true;
}

bool criterion_4(std::string& detail) {
    Ball ball = enumerate_ball(5);
    if (ball.elements.size() != 4449) {
        detail = "cardinality " + std::to_string(ball.elements.size()) + " != 4449";
        return false;
    }
    for (const BallEntry& e : ball.elements) {
        const Int C = complexity(e.element).C;
        if (!verifies_six_power_bound(e.radius, C) || !verifies_half_log_bound(e.radius, C)) {
            detail = "bound failed at radius " + std::to_string(e.radius);
            return false;
        }
    }
    detail = "4449 elements, both integer bounds";
    return true;
}

bool criterion_5(std::string& detail) {
    unsigned certificates = 0;
    for (unsigned long m = 0; m <= 6; ++m)
        for (unsigned long n = 0; n <= 6; ++n)
            for (long N = -10; N <= 10; ++N) {
                if (N == 0) continue;
                Certificate c = breakpoint_certificate(m, Int(N), n);
                if (!c.witness_is_breakpoint || !c.d_bound_holds) {
                    std::ostringstream os;
                    os << "witness failed at (" << m << ", " << N << ", " << n << ")";
                    detail = os.str();
                    return false;
                }
                ++certificates;
            }
    for (long k = -20; k <= 20; ++k) {
        if (complexity(power(g1_map(), k)).C < pow2(k < 0 ? -k : k)) {
            detail = "power bound failed at k = " + std::to_string(k);
            return false;
        }
    }
    detail = std::to_string(certificates) + " certificates + 41 power bounds";
    return true;
}

bool criterion_6(std::string& detail) {
    unsigned rows = 0;
    for (unsigned long m = 0; m <= 6; ++m)
        for (unsigned long n = 0; n <= 6; ++n)
            for (long N = -10; N <= 10; ++N) {
                if (N == 0) continue;
                if (!undistortion_row(m, Int(N), n).chain_holds) {
                    std::ostringstream os;
                    os << "chain failed at (" << m << ", " << N << ", " << n << ")";
                    detail = os.str();
                    return false;
                }
                ++rows;
            }
    detail = std::to_string(rows) + " rows, exact bracketing";
    return true;
}

bool criterion_7(std::string& detail) {
    // Breadth-first over words of length <= 8, checking on every edge that
    // words reaching the same affine element give the same map.
    struct Node {
        GroupWord word;
        AffineRep rep;
        PiecewiseMap map;
    };
    std::vector<Node> nodes{{GroupWord{}, AffineRep::identity(), PiecewiseMap::identity()}};
    std::map<std::string, std::size_t> index{{AffineRep::identity().str(), 0}};
    const struct {
        Symbol sym;
        long exp;
    } gens[4] = {{sym_bs_x(), 1}, {sym_bs_x(), -1}, {sym_bs_t(), 1}, {sym_bs_t(), -1}};

    std::size_t frontier_begin = 0;
    unsigned edges = 0;
    for (unsigned r = 1; r <= 8; ++r) {
        const std::size_t frontier_end = nodes.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const auto& gen : gens) {
                AffineRep rep = compose(nodes[i].rep, gen.sym.base == 'x'
                                                          ? AffineRep::of_x(gen.exp)
                                                          : AffineRep::of_t(gen.exp));
                PiecewiseMap map =
                    compose(nodes[i].map, power(gen.sym.base == 'x' ? g2_map() : g1_map(), gen.exp));
                ++edges;
                auto [it, fresh] = index.emplace(rep.str(), nodes.size());
                if (fresh) {
                    GroupWord w = nodes[i].word;
                    w.append(gen.sym, gen.exp);
                    nodes.push_back({std::move(w), std::move(rep), std::move(map)});
                } else if (nodes[it->second].map != map) {
                    detail = "two words for one element embed differently";
                    return false;
                }
            }
        }
        frontier_begin = frontier_end;
    }

    if (!embed_bs(bs_relator()).is_identity()) {
        detail = "relator does not embed to the identity";
        return false;
    }

    std::set<std::string> maps_seen;
    std::set<std::string> nfs_seen;
    for (const Node& node : nodes) {
        BSNormalForm nf = normal_form_of(node.rep);
        if (affine_of_word(nf.word()) != node.rep) {
            detail = "normal-form word changes the affine element";
            return false;
        }
        if (embed_bs(nf.word()) != node.map) {
            detail = "normal form embeds differently at " + nf.str();
            return false;
        }
        if ((nf.m > 0 && nf.n > 0 && nf.N % 2 == 0) || (nf.N == 0 && nf.m > 0 && nf.n > 0)) {
            detail = "non-canonical normal form " + nf.str();
            return false;
        }
        if (!maps_seen.insert(node.map.str()).second || !nfs_seen.insert(nf.str()).second) {
            detail = "two elements collide";
            return false;
        }
    }
    detail = std::to_string(nodes.size()) + " elements, " + std::to_string(edges) + " edges";
    return true;
}

bool criterion_8(std::string& detail) {
    const auto corpus = oracle::eval_corpus(200, 0xc0de);
    const struct {
        const char* address;
        const char* conjugator;
    } rels[3] = {{"010", "x0 x1"},
                 {"0111", "x0 x1 x0^-1 x1 x0^-1"},
                 {"011", "x0 x1 x0^-1"}};
    for (const auto& rel : rels) {
        GroupWord u = parse_word(rel.conjugator);
        GroupWord conj = concat(concat(u, parse_word("y_10")), u.inverse());
        GroupWord direct;
        direct.append(sym_y(rel.address), 1);
        for (const EpSeq& s : corpus)
            if (apply_word(conj, s) != apply_word(direct, s)) {
                detail = std::string("conjugation relation failed for y_") + rel.address;
                return false;
            }
    }

    for (unsigned n = 1; n <= 12; ++n) {
        DistortionWitness w = build_a_n(n);
        TableResult r = to_prefix_table(w.cantor_word, default_table_depth_for_a_n(n));
        if (!std::holds_alternative<PrefixTable>(r)) {
            detail = "a_" + std::to_string(n) + " did not resolve to a table";
            return false;
        }
        TreePair pair = reduce(from_prefix_table(std::get<PrefixTable>(r)));
        if (Int(static_cast<unsigned long>(caret_count(pair))) != pow2(n) + 3) {
            detail = "a_" + std::to_string(n) + " has " + std::to_string(caret_count(pair)) +
                     " carets";
            return false;
        }
        if (w.word_bound != 30 + 4ul * n || w.r_letters > w.word_bound ||
            w.cantor_letters != 8 + 4ul * n) {
            detail = "word-length bookkeeping failed at n = " + std::to_string(n);
            return false;
        }
    }
    detail = "n = 1..12, caret counts 2^n+3, bounds 30+4n";
    return true;
}

bool criterion_9(std::string& detail) {
    const auto corpus = oracle::eval_corpus(200, 0xc0de);
    std::mt19937_64 rng(662607);
    unsigned trivial = 0;
    const unsigned trials = 1000;
    for (unsigned it = 0; it < trials; ++it) {
        GroupWord w = random_r_word(rng, 1 + rng() % 12);
        const bool is_id = eval_r(w).is_identity();
        const GroupWord t = to_cantor_word(w);
        bool fixes_all = true;
        for (const EpSeq& s : corpus)
            if (apply_word(t, s) != s) {
                fixes_all = false;
                break;
            }
        // moved point => nontrivial on the line; trivial => fixes everything
        if (!fixes_all && is_id) {
            detail = "trivial word moved a corpus point: " + w.str();
            return false;
        }
        if (fixes_all && !is_id) {
            detail = "nontrivial word fixed the whole corpus: " + w.str();
            return false;
        }
        trivial += is_id;
    }
    detail = std::to_string(trials) + " words, " + std::to_string(trivial) + " trivial";
    return true;
}

bool criterion_10(std::string& detail) {
    GroupWord u = parse_word("x0 x1^-1");
    for (const char* conj : {"x0^-1 x1 x0", "x0^-2 x1 x0^2"}) {
        GroupWord v = parse_word(conj);
        GroupWord comm = concat(concat(u, v), concat(u.inverse(), v.inverse()));
        if (word_to_pair(comm) != TreePair::identity()) {
            detail = std::string("relator [x0 x1^-1, ") + conj + "] is not the identity";
            return false;
        }
    }

    std::mt19937_64 rng(777216);
    auto random_tree = [&rng](auto&& self, std::size_t carets) -> BinTree {
        if (carets == 0) return BinTree::leaf();
        std::size_t left = rng() % carets;
        return BinTree::caret(self(self, left), self(self, carets - 1 - left));
    };
    for (int it = 0; it < 1000; ++it) {
        std::size_t carets = 1 + rng() % 12;
        TreePair p = reduce(TreePair(random_tree(random_tree, carets),
                                     random_tree(random_tree, carets)));
        if (from_prefix_table(to_prefix_table(p)) != p) {
            detail = "table round-trip failed at trial " + std::to_string(it);
            return false;
        }
        std::size_t q_carets = 1 + rng() % 8;
        TreePair q = reduce(TreePair(random_tree(random_tree, q_carets),
                                     random_tree(random_tree, q_carets)));
        PrefixTable oracle_product =
            oracle::compose_tables(to_prefix_table(p), to_prefix_table(q));
        if (multiply(p, q) != reduce(from_prefix_table(oracle_product))) {
            detail = "product disagreed with the table oracle at trial " + std::to_string(it);
            return false;
        }
    }
    detail = "2 relators + 1000 round-trips + 1000 oracle products";
    return true;
}

}  // namespace

int main() {
    run(1, "generator fidelity", criterion_1);
    run(2, "iterate formulas, n and N up to 20", criterion_2);
    run(3, "estimation bound suite", criterion_3);
    run(4, "radius-5 ball vs the half-log bound", criterion_4);
    run(5, "breakpoint certificates", criterion_5);
    run(6, "undistortion inequality chain", criterion_6);
    run(7, "Baumslag-Solitar soundness on the radius-8 ball", criterion_7);
    run(8, "F-distortion family a_n", criterion_8);
    run(9, "cross-model consistency", criterion_9);
    run(10, "tree-pair algebra", criterion_10);
    if (g_failures == 0) std::printf("all criteria passed\n");
    return g_failures;
}
