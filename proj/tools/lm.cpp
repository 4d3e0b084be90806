// lm: exact computations in the Lodha-Moore group from the command line.
//
// Exit codes: 0 success, 2 usage or parse error, 3 resource cap exceeded,
// 4 mathematical assertion failed (should never happen).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <lm/lm.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitAssert = 4;

std::optional<unsigned long long> max_cells_env() {
    if (const char* env = std::getenv("LM_MAX_CELLS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw lm::ParseError("LM_MAX_CELLS must be a positive integer", 0);
    }
    return std::nullopt;
}

unsigned long long max_cells() { return max_cells_env().value_or(1'000'000); }

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw lm::ParseError("range '" + text + "': want lo..hi", 0);
    try {
        Range r{std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
        if (r.lo > r.hi) throw lm::ParseError("range '" + text + "': lo > hi", 0);
        return r;
    } catch (const std::logic_error&) {
        throw lm::ParseError("range '" + text + "': malformed endpoint", 0);
    }
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << payload;
}

int cmd_eval(const std::string& model, const std::string& word_text,
             const std::optional<std::string>& point, const std::string& out_path) {
    if (model == "R") {
        lm::GroupWord w = lm::parse_word(word_text, lm::Alphabet::RModel);
        write_output(out_path, lm::eval_r(w).to_json() + "\n");
        return kExitOk;
    }
    if (model == "cantor") {
        lm::GroupWord w = lm::parse_word(word_text, lm::Alphabet::Cantor);
        if (!point) {
            std::cerr << "lm: eval --model cantor needs --point\n";
            return kExitUsage;
        }
        lm::EpSeq s = lm::EpSeq::parse(*point);
        write_output(out_path, lm::apply_word(w, s).str() + "\n");
        return kExitOk;
    }
    std::cerr << "lm: unknown model '" << model << "' (want R or cantor)\n";
    return kExitUsage;
}

int cmd_invariants(const std::string& word_text, const std::string& format,
                   const std::string& out_path) {
    lm::GroupWord w = lm::parse_word(word_text, lm::Alphabet::RModel);
    lm::ComplexityReport rep = lm::complexity(lm::eval_r(w));
    std::ostringstream os;
    if (format == "json") {
        os << rep.to_json() << "\n";
    } else if (format == "csv") {
        os << "D,M,C,half_log_C\n"
           << rep.D.get_str() << "," << rep.M.get_str() << "," << rep.C.get_str() << ","
           << rep.half_log_c() << "\n";
    } else {
        os << "D = " << rep.D.get_str() << "\nM = " << rep.M.get_str()
           << "\nC = " << rep.C.get_str() << "\nhalf_log_C = " << rep.half_log_c() << "\n";
    }
    write_output(out_path, os.str());
    return kExitOk;
}

int cmd_ball(unsigned radius, const std::string& alphabet, bool list_elements,
             const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (alphabet == "g0") {
        lm::BallCaps caps;
        if (auto cells = max_cells_env()) caps.max_cells = *cells;
        lm::Ball ball = lm::enumerate_ball(radius, caps);
        if (format == "json") {
            os << "{\"radius\":" << radius << ",\"total\":" << ball.elements.size()
               << ",\"spheres\":[";
            auto sizes = ball.sphere_sizes();
            for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
            os << "]}\n";
        } else {
            os << "length,count\n";
            auto sizes = ball.sphere_sizes();
            for (std::size_t i = 0; i < sizes.size(); ++i) os << i << "," << sizes[i] << "\n";
        }
        if (list_elements)
            for (const lm::BallEntry& e : ball.elements)
                os << e.radius << "\t" << e.word.str() << "\t" << e.element.to_json() << "\n";
    } else if (alphabet == "bs") {
        auto ball = lm::bs_ball(radius);
        std::vector<std::size_t> sizes(radius + 1, 0);
        for (const auto& e : ball) ++sizes[e.radius];
        if (format == "json") {
            os << "{\"radius\":" << radius << ",\"total\":" << ball.size() << ",\"spheres\":[";
            for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
            os << "]}\n";
        } else {
            os << "length,count\n";
            for (std::size_t i = 0; i < sizes.size(); ++i) os << i << "," << sizes[i] << "\n";
        }
        if (list_elements)
            for (const auto& e : ball)
                os << e.radius << "\t" << e.word.str() << "\t" << e.rep.str() << "\n";
    } else {
        std::cerr << "lm: unknown alphabet '" << alphabet << "' (want g0 or bs)\n";
        return kExitUsage;
    }
    write_output(out_path, os.str());
    return kExitOk;
}

int cmd_bs_grid(const std::string& m_range, const std::string& n_range,
                const std::string& N_range, const std::string& out_path, bool gnuplot) {
    Range mr = parse_range(m_range);
    Range nr = parse_range(n_range);
    Range Nr = parse_range(N_range);
    if (mr.lo < 0 || nr.lo < 0) {
        std::cerr << "lm: m and n must be nonnegative\n";
        return kExitUsage;
    }
    unsigned long long cells = 0;
    for (long N = Nr.lo; N <= Nr.hi; ++N)
        if (N != 0) cells += (mr.hi - mr.lo + 1) * (nr.hi - nr.lo + 1);
    if (cells == 0) {
        std::cerr << "lm: empty grid (N = 0 rows are excluded)\n";
        return kExitUsage;
    }
    if (cells > max_cells()) {
        std::cerr << "lm: grid has " << cells << " cells, cap is " << max_cells()
                  << " (set LM_MAX_CELLS to raise)\n";
        return kExitCap;
    }

    std::ostringstream os;
    os << "m,N,n,D,M,C,D_inv,M_inv,C_inv,lhs_quarter_log_sum,rhs_sixth_sum\n";
    for (long m = mr.lo; m <= mr.hi; ++m) {
        for (long N = Nr.lo; N <= Nr.hi; ++N) {
            if (N == 0) continue;
            for (long n = nr.lo; n <= nr.hi; ++n) {
                lm::UndistortionRow row = lm::undistortion_row(m, lm::Int(N), n);
                lm::Certificate cert = lm::breakpoint_certificate(m, lm::Int(N), n);
                if (!row.chain_holds || !cert.holds()) {
                    std::cerr << "lm: certificate failed at (" << m << ", " << N << ", " << n
                              << ")\n";
                    return kExitAssert;
                }
                os << row.m << "," << row.N.get_str() << "," << row.n << ","
                   << row.D.get_str() << "," << row.M.get_str() << "," << row.C.get_str() << ","
                   << row.D_inv.get_str() << "," << row.M_inv.get_str() << ","
                   << row.C_inv.get_str() << "," << row.lhs_quarter_log_sum << ","
                   << row.rhs_sixth_sum << "\n";
            }
        }
    }
    write_output(out_path, os.str());
    if (gnuplot && !out_path.empty()) {
        std::ofstream gp(out_path + ".gp");
        gp << "set datafile separator ','\n"
           << "set key autotitle columnhead\n"
           << "set xlabel 'row'\nset ylabel 'bound'\n"
           << "plot '" << out_path << "' using 0:10 with lines title 'quarter log sum', \\\n"
           << "     '" << out_path << "' using 0:11 with lines title 'sixth sum'\n";
    }
    return kExitOk;
}

int cmd_f_distortion(unsigned n_max, const std::string& out_path, bool gnuplot) {
    if (n_max < 1) {
        std::cerr << "lm: --n-max must be >= 1\n";
        return kExitUsage;
    }
    // Default cap is 12; the table of a_n carries about 2^n + 4 rows, so a
    // raised LM_MAX_CELLS budget admits larger n.
    if (n_max > 12) {
        auto cells = max_cells_env();
        if (!cells || n_max >= 63 || (1ull << n_max) > *cells) {
            std::cerr << "lm: n-max " << n_max << " needs about "
                      << (1ull << std::min(n_max, 62u)) << " cells, cap is "
                      << (cells ? std::to_string(*cells) : std::string("12 (default)"))
                      << " (set LM_MAX_CELLS to raise)\n";
            return kExitCap;
        }
    }

    std::ostringstream os;
    os << "n,carets,word_bound,ratio\n";
    for (unsigned n = 1; n <= n_max; ++n) {
        lm::DistortionWitness w = lm::build_a_n(n);
        lm::TableResult r =
            lm::to_prefix_table(w.cantor_word, lm::default_table_depth_for_a_n(n));
        if (std::holds_alternative<lm::DepthExceeded>(r)) {
            std::cerr << "lm: refinement depth cap hit at n = " << n << "\n";
            return kExitCap;
        }
        if (std::holds_alternative<lm::NotInF>(r)) {
            std::cerr << "lm: a_" << n << " failed the residual cancellation test\n";
            return kExitAssert;
        }
        lm::TreePair pair = lm::reduce(lm::from_prefix_table(std::get<lm::PrefixTable>(r)));
        lm::Int carets(static_cast<unsigned long>(lm::caret_count(pair)));
        if (carets != lm::pow2(n) + 3 || w.r_letters > w.word_bound) {
            std::cerr << "lm: distortion assertion failed at n = " << n << " (carets "
                      << carets.get_str() << ")\n";
            return kExitAssert;
        }
        lm::Rational ratio = lm::rational(carets, lm::Int(w.word_bound));
        os << n << "," << carets.get_str() << "," << w.word_bound << ","
           << lm::ratio_decimal(ratio) << "\n";
    }
    write_output(out_path, os.str());
    if (gnuplot && !out_path.empty()) {
        std::ofstream gp(out_path + ".gp");
        gp << "set datafile separator ','\n"
           << "set key autotitle columnhead\n"
           << "set logscale y\nset xlabel 'n'\nset ylabel 'carets / word bound'\n"
           << "plot '" << out_path << "' using 1:4 with linespoints title 'distortion ratio'\n";
    }
    return kExitOk;
}

int cmd_cross_check(unsigned count, unsigned len, std::uint64_t seed,
                    const std::string& out_path) {
    std::mt19937_64 rng(seed);
    auto corpus = [] {
        std::vector<lm::EpSeq> pts;
        std::mt19937_64 gen(0xc0de);
        while (pts.size() < 200) {
            std::string pre, per;
            for (std::size_t i = 0, n = gen() % 7; i < n; ++i) pre.push_back(gen() % 2 ? '1' : '0');
            for (std::size_t i = 0, n = 1 + gen() % 5; i < n; ++i)
                per.push_back(gen() % 2 ? '1' : '0');
            lm::EpSeq s(pre, per);
            bool dup = false;
            for (const lm::EpSeq& t : pts) dup = dup || t == s;
            if (!dup) pts.push_back(s);
        }
        return pts;
    }();

    unsigned trivial = 0;
    for (unsigned it = 0; it < count; ++it) {
        lm::GroupWord w = lm::random_r_word(rng, 1 + rng() % len);
        bool is_id = lm::eval_r(w).is_identity();
        lm::GroupWord t = lm::to_cantor_word(w);
        bool fixes_all = true;
        for (const lm::EpSeq& s : corpus)
            if (lm::apply_word(t, s) != s) {
                fixes_all = false;
                break;
            }
        if (is_id != fixes_all) {
            std::cerr << "lm: cross-model discrepancy on '" << w.str() << "'\n";
            return kExitAssert;
        }
        trivial += is_id;
    }
    std::ostringstream os;
    os << "checked " << count << " words (max length " << len << ", seed " << seed << "): "
       << trivial << " trivial, all consistent\n";
    write_output(out_path, os.str());
    return kExitOk;
}

int cmd_check_lemmas(unsigned count, unsigned len, std::uint64_t seed,
                     const std::string& out_path) {
    std::mt19937_64 rng(seed);
    const auto letters = lm::r_model_letter_words();
    for (unsigned it = 0; it < count; ++it) {
        lm::PiecewiseMap f = lm::eval_r(lm::random_r_word(rng, 1 + rng() % len));
        lm::LemmaReport rep = lm::check_estimation_lemmas(f, letters[rng() % 6]);
        if (!rep.all_hold()) {
            std::cerr << "lm: estimation bound falsified:\n" << rep.str();
            return kExitAssert;
        }
    }
    std::ostringstream os;
    os << "checked " << count << " (f, s) pairs (max word length " << len << ", seed " << seed
       << "): all bounds hold\n";
    write_output(out_path, os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the Lodha-Moore group"};
    app.require_subcommand(1);

    std::string word_text, model = "R", format = "csv", out_path;
    std::optional<std::string> point;
    unsigned radius = 3, n_max = 12, count = 1000, len = 12;
    std::string alphabet = "g0", m_range = "0..4", n_range = "0..4", N_range = "-8..8";
    std::uint64_t seed = 20250811;
    bool list_elements = false, gnuplot = false;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a word");
    eval->add_option("word", word_text, "word over the chosen alphabet")->required();
    eval->add_option("--model", model, "R or cantor")->capture_default_str();
    eval->add_option("--point", point, "evaluation point pre(period), cantor model");
    eval->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* inv = app.add_subcommand("invariants", "complexity invariants of a word");
    inv->add_option("word", word_text)->required();
    inv->add_option("--format", format, "csv, json or text")->capture_default_str();
    inv->add_option("--out", out_path);

    CLI::App* ball = app.add_subcommand("ball", "enumerate a word-metric ball");
    ball->add_option("--radius", radius)->capture_default_str();
    ball->add_option("--alphabet", alphabet, "g0 or bs")->capture_default_str();
    ball->add_flag("--elements", list_elements, "list one line per element");
    ball->add_option("--format", format)->capture_default_str();
    ball->add_option("--out", out_path);

    CLI::App* grid = app.add_subcommand("bs-grid", "undistortion certificate grid");
    grid->add_option("--m", m_range, "m range lo..hi")->capture_default_str();
    grid->add_option("--n", n_range, "n range lo..hi")->capture_default_str();
    grid->add_option("--N", N_range, "N range lo..hi (0 rows skipped)")->capture_default_str();
    grid->add_option("--out", out_path);
    grid->add_flag("--gnuplot", gnuplot, "also write a companion .gp script");

    CLI::App* fdist = app.add_subcommand("f-distortion", "caret growth of the a_n family");
    fdist->add_option("--n-max", n_max)->capture_default_str();
    fdist->add_option("--out", out_path);
    fdist->add_flag("--gnuplot", gnuplot);

    CLI::App* cross = app.add_subcommand("cross-check", "line model vs Cantor model");
    cross->add_option("--count", count)->capture_default_str();
    cross->add_option("--len", len)->capture_default_str();
    cross->add_option("--seed", seed)->capture_default_str();
    cross->add_option("--out", out_path);

    CLI::App* lemmas = app.add_subcommand("check-lemmas", "estimation bounds on random words");
    lemmas->add_option("--count", count)->default_val(10000u);
    lemmas->add_option("--len", len)->default_val(14u);
    lemmas->add_option("--seed", seed)->capture_default_str();
    lemmas->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(model, word_text, point, out_path);
        if (inv->parsed()) return cmd_invariants(word_text, format, out_path);
        if (ball->parsed()) return cmd_ball(radius, alphabet, list_elements, format, out_path);
        if (grid->parsed()) return cmd_bs_grid(m_range, n_range, N_range, out_path, gnuplot);
        if (fdist->parsed()) return cmd_f_distortion(n_max, out_path, gnuplot);
        if (cross->parsed()) return cmd_cross_check(count, len, seed, out_path);
        if (lemmas->parsed()) return cmd_check_lemmas(count, len, seed, out_path);
    } catch (const lm::ParseError& e) {
        std::cerr << "lm: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lm::CapError& e) {
        std::cerr << "lm: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "lm: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
