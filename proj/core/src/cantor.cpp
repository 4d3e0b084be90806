#include "lm/cantor.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "lm/errors.hpp"

namespace lm {

namespace {

void require_binary(std::string_view w, const char* what) {
    for (char ch : w)
        if (ch != '0' && ch != '1')
            throw ConstructionError(std::string(what) + ": non-binary character");
}

// Shortest word whose power equals `w`.
std::string primitive_root(const std::string& w) {
    for (std::size_t d = 1; d <= w.size(); ++d) {
        if (w.size() % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < w.size() && ok; ++i) ok = (w[i] == w[i % d]);
        if (ok) return w.substr(0, d);
    }
    return w;
}

}  // namespace

EpSeq::EpSeq(std::string preperiod, std::string period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
    require_binary(pre_, "EpSeq preperiod");
    require_binary(per_, "EpSeq period");
    if (per_.empty()) throw ConstructionError("EpSeq: empty period");
    per_ = primitive_root(per_);
    // Absorb matching trailing bits: u (v) = u' (v') with v' the right
    // rotation of v, whenever u ends in v's last bit.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        per_ = per_.back() + per_.substr(0, per_.size() - 1);
        pre_.pop_back();
    }
}

EpSeq EpSeq::parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close != text.size() - 1 ||
        close <= open)
        throw ParseError("EpSeq: want 'pre(period)'", 0);
    try {
        return EpSeq(std::string(text.substr(0, open)),
                     std::string(text.substr(open + 1, close - open - 1)));
    } catch (const ConstructionError& e) {
        throw ParseError(e.what(), open);
    }
}

std::string EpSeq::prefix(std::size_t k) const {
    std::string out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(bit(i));
    return out;
}

bool EpSeq::starts_with(std::string_view w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (bit(i) != w[i]) return false;
    return true;
}

EpSeq EpSeq::drop(std::size_t k) const {
    if (k <= pre_.size()) return EpSeq(pre_.substr(k), per_);
    std::size_t j = (k - pre_.size()) % per_.size();
    return EpSeq("", per_.substr(j) + per_.substr(0, j));
}

EpSeq EpSeq::prepend(std::string_view w) const { return EpSeq(std::string(w) + pre_, per_); }

void PrefixTable::validate() const {
    if (rows.empty()) throw ConstructionError("prefix table: no rows");
    auto check_antichain = [](std::vector<std::string> leaves, const char* side) {
        std::sort(leaves.begin(), leaves.end());
        std::size_t max_len = 0;
        for (const std::string& l : leaves) {
            require_binary(l, "prefix table");
            max_len = std::max(max_len, l.size());
        }
        for (std::size_t i = 1; i < leaves.size(); ++i) {
            if (leaves[i - 1] == leaves[i])
                throw ConstructionError(std::string("prefix table: duplicate ") + side + " prefix '" +
                                        leaves[i] + "'");
            if (leaves[i].compare(0, leaves[i - 1].size(), leaves[i - 1]) == 0)
                throw ConstructionError(std::string("prefix table: ") + side + " prefix '" +
                                        leaves[i - 1] + "' is a prefix of '" + leaves[i] + "'");
        }
        Int kraft = 0;
        for (const std::string& l : leaves) kraft += pow2(max_len - l.size());
        if (kraft != pow2(max_len))
            throw ConstructionError(std::string("prefix table: ") + side +
                                    " prefixes do not cover the whole Cantor set");
    };

    std::vector<std::pair<std::string, std::string>> sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> doms, rans;
    for (auto& [d, r] : sorted) {
        doms.push_back(d);
        rans.push_back(r);
    }
    check_antichain(doms, "domain");
    check_antichain(rans, "range");
    for (std::size_t i = 1; i < rans.size(); ++i)
        if (!(rans[i - 1] < rans[i]))
            throw ConstructionError("prefix table: not order-preserving at row " +
                                    std::to_string(i));
}

EpSeq PrefixTable::apply(const EpSeq& s) const {
    for (const auto& [dom, ran] : rows)
        if (s.starts_with(dom)) return s.drop(dom.size()).prepend(ran);
    throw ConstructionError("prefix table: no row matches " + s.str());
}

std::string PrefixTable::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [d, r] : rows) j.push_back({d, r});
    return j.dump();
}

PrefixTable PrefixTable::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("table JSON: ") + e.what(), e.byte);
    }
    PrefixTable t;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 2)
            throw ParseError("table JSON: each row is [\"domain\",\"range\"]", 0);
        t.rows.emplace_back(row[0].get<std::string>(), row[1].get<std::string>());
    }
    t.validate();
    return t;
}

const PrefixTable& x0_table() {
    static const PrefixTable t{{{"00", "0"}, {"01", "10"}, {"1", "11"}}};
    return t;
}

const PrefixTable& x1_table() {
    static const PrefixTable t{{{"0", "0"}, {"100", "10"}, {"101", "110"}, {"11", "111"}}};
    return t;
}

namespace {

const PrefixTable& x0_inv_table() {
    static const PrefixTable t{{{"0", "00"}, {"10", "01"}, {"11", "1"}}};
    return t;
}

const PrefixTable& x1_inv_table() {
    static const PrefixTable t{{{"0", "0"}, {"10", "100"}, {"110", "101"}, {"111", "11"}}};
    return t;
}

const PrefixTable& prefix_map_for(const Symbol& s, bool inverse) {
    if (s.sub == "0") return inverse ? x0_inv_table() : x0_table();
    return inverse ? x1_inv_table() : x1_table();
}

// One application of y^sign to an eventually periodic sequence. Consumes
// 1-2 input bits per step, emits 1-2 output bits; the pair (sign, offset
// within the input period) determines all future steps, so the first
// repeated pair delimits the output period.
EpSeq apply_y_signed(int sign, const EpSeq& s) {
    const std::size_t pre_len = s.preperiod().size();
    const std::size_t per_len = s.period().size();
    std::map<std::pair<int, std::size_t>, std::size_t> seen;  // state -> emitted length
    std::string emitted;
    std::size_t pos = 0;
    for (;;) {
        if (pos >= pre_len) {
            std::pair<int, std::size_t> state{sign, (pos - pre_len) % per_len};
            auto [it, fresh] = seen.emplace(state, emitted.size());
            if (!fresh)
                return EpSeq(emitted.substr(0, it->second), emitted.substr(it->second));
        }
        if (sign > 0) {
            if (s.bit(pos) == '1') {
                emitted += "11";
                pos += 1;
            } else if (s.bit(pos + 1) == '0') {
                emitted += "0";
                pos += 2;
            } else {
                emitted += "10";
                sign = -1;
                pos += 2;
            }
        } else {
            if (s.bit(pos) == '0') {
                emitted += "00";
                pos += 1;
            } else if (s.bit(pos + 1) == '0') {
                emitted += "01";
                sign = +1;
                pos += 2;
            } else {
                emitted += "1";
                pos += 2;
            }
        }
    }
}

}  // namespace

EpSeq apply_y(long k, const EpSeq& s) {
    EpSeq out = s;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out = apply_y_signed(k < 0 ? -1 : +1, out);
    return out;
}

EpSeq apply_y_at(std::string_view address, long k, const EpSeq& s) {
    if (!s.starts_with(address)) return s;
    return apply_y(k, s.drop(address.size())).prepend(address);
}

EpSeq apply_word(const GroupWord& w, const EpSeq& s) {
    if (w.alphabet() != Alphabet::Cantor && w.alphabet() != Alphabet::Any)
        throw ConstructionError("apply_word: expected a Cantor-model word");
    EpSeq cur = s;
    for (const Letter& l : w.letters()) {
        if (l.sym.base == 'y') {
            cur = apply_y_at(l.sym.sub, l.exp, cur);
            continue;
        }
        const PrefixTable& table = prefix_map_for(l.sym, l.exp < 0);
        for (long i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) cur = table.apply(cur);
    }
    return cur;
}

namespace {

// Symbolic image of an input cylinder: alternating runs of known bits and
// pending y-applications, outermost first, implicitly followed by the
// unknown input tail. A pending application cannot emit past the last
// known bit, so cancellations that a strict left-to-right bit push would
// miss (a later y^-1 undoing an earlier y across a ragged seam) are
// handled algebraically instead: a y run eagerly over known bits, and
// directly adjacent inverse pairs annihilate.
struct Segment {
    int sign;          // 0: literal bits; +1/-1: one pending y^sign
    std::string bits;  // used when sign == 0
};

using Stream = std::vector<Segment>;

// Rewrites to normal form: bits merged, every pending y pushed as far
// inward as full gulps allow (emitting in front of itself), adjacent
// inverse pairs removed. After this, everything decidable from the known
// bits has been decided.
void normalize(Stream& segs) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].sign == 0) {
                if (segs[i].bits.empty()) {
                    segs.erase(segs.begin() + i);
                    changed = true;
                    break;
                }
                if (i + 1 < segs.size() && segs[i + 1].sign == 0) {
                    segs[i].bits += segs[i + 1].bits;
                    segs.erase(segs.begin() + i + 1);
                    changed = true;
                    break;
                }
                continue;
            }
            if (i + 1 >= segs.size()) continue;
            if (segs[i + 1].sign == -segs[i].sign) {  // y^s y^-s = id
                segs.erase(segs.begin() + i, segs.begin() + i + 2);
                changed = true;
                break;
            }
            if (segs[i + 1].sign != 0) continue;

            // Run y^sign over the known bits in full gulps.
            int sign = segs[i].sign;
            const std::string& in = segs[i + 1].bits;
            std::string emitted;
            std::size_t j = 0;
            while (j < in.size()) {
                if (sign > 0) {
                    if (in[j] == '1') {
                        emitted += "11";
                        j += 1;
                    } else if (j + 1 >= in.size()) {
                        break;  // dangling half gulp
                    } else if (in[j + 1] == '0') {
                        emitted += "0";
                        j += 2;
                    } else {
                        emitted += "10";
                        sign = -sign;
                        j += 2;
                    }
                } else {
                    if (in[j] == '0') {
                        emitted += "00";
                        j += 1;
                    } else if (j + 1 >= in.size()) {
                        break;
                    } else if (in[j + 1] == '0') {
                        emitted += "01";
                        sign = -sign;
                        j += 2;
                    } else {
                        emitted += "1";
                        j += 2;
                    }
                }
            }
            if (emitted.empty()) continue;
            std::string dangling = in.substr(j);
            segs[i + 1].bits = std::move(dangling);
            Segment run{sign, {}};
            segs[i] = Segment{0, std::move(emitted)};
            segs.insert(segs.begin() + i + 1, std::move(run));
            changed = true;
            break;
        }
    }
}

// Known output bits available at the front of a normalized stream.
std::string_view front_bits(const Stream& segs) {
    if (!segs.empty() && segs[0].sign == 0) return segs[0].bits;
    return {};
}

void consume_front(Stream& segs, std::size_t k) { segs[0].bits.erase(0, k); }

// Applies one prefix-exchange table. False = needs more input bits.
bool step_table(const PrefixTable& table, Stream& segs) {
    std::string_view avail = front_bits(segs);
    for (const auto& [dom, ran] : table.rows) {
        if (avail.size() >= dom.size()) {
            if (avail.compare(0, dom.size(), dom) == 0) {
                consume_front(segs, dom.size());
                segs.insert(segs.begin(), Segment{0, ran});
                normalize(segs);
                return true;
            }
        } else if (dom.compare(0, avail.size(), avail) == 0) {
            return false;
        }
    }
    throw ConstructionError("prefix table rows do not cover the image");
}

// Applies y_address^(sign * reps). False = needs more input bits.
bool step_y(const std::string& address, int sign, long reps, Stream& segs) {
    std::string_view avail = front_bits(segs);
    const std::size_t overlap = std::min(avail.size(), address.size());
    if (avail.compare(0, overlap, address, 0, overlap) != 0) return true;  // outside cylinder
    if (avail.size() < address.size()) return false;  // membership undecided
    if (!address.empty()) consume_front(segs, address.size());
    for (long r = 0; r < reps; ++r) segs.insert(segs.begin(), Segment{sign, {}});
    if (!address.empty()) segs.insert(segs.begin(), Segment{0, address});
    normalize(segs);
    return true;
}

}  // namespace

PartialEval partial_eval(const GroupWord& w, std::string_view prefix) {
    if (w.alphabet() != Alphabet::Cantor && w.alphabet() != Alphabet::Any)
        throw ConstructionError("partial_eval: expected a Cantor-model word");
    require_binary(prefix, "partial_eval prefix");
    Stream segs{Segment{0, std::string(prefix)}};
    for (const Letter& l : w.letters()) {
        bool ok;
        if (l.sym.base == 'y')
            ok = step_y(l.sym.sub, l.exp < 0 ? -1 : +1, l.exp < 0 ? -l.exp : l.exp, segs);
        else {
            ok = true;
            const PrefixTable& table = prefix_map_for(l.sym, l.exp < 0);
            for (long r = 0; ok && r < (l.exp < 0 ? -l.exp : l.exp); ++r)
                ok = step_table(table, segs);
        }
        if (!ok) return {};
    }

    // Resolved iff the stream is known bits followed by a pure y-power
    // acting on the untouched tail (the power may be empty).
    PartialEval result;
    std::size_t i = 0;
    if (i < segs.size() && segs[i].sign == 0) result.out = segs[i++].bits;
    for (; i < segs.size(); ++i) {
        if (segs[i].sign == 0) return {};  // half-consumed bits block resolution
        result.residual += segs[i].sign;
    }
    result.resolved = true;
    return result;
}

TableResult to_prefix_table(const GroupWord& w, unsigned max_depth) {
    if (max_depth < 1) throw ConstructionError("to_prefix_table: max_depth must be >= 1");
    PrefixTable table;
    std::vector<std::string> blocked;
    std::vector<std::string> stack{""};
    while (!stack.empty()) {
        std::string p = std::move(stack.back());
        stack.pop_back();
        PartialEval r = partial_eval(w, p);
        if (r.resolved) {
            if (r.residual != 0) return NotInF{p};
            table.rows.emplace_back(std::move(p), std::move(r.out));
            continue;
        }
        if (p.size() >= max_depth) {
            blocked.push_back(std::move(p));
            continue;
        }
        stack.push_back(p + "1");  // left child pops first
        stack.push_back(p + "0");
    }
    if (!blocked.empty()) return DepthExceeded{std::move(blocked)};
    std::sort(table.rows.begin(), table.rows.end());
    table.validate();
    return table;
}

DistortionWitness build_a_n(unsigned n) {
    if (n == 0) throw ConstructionError("build_a_n: n must be >= 1");
    const long k = static_cast<long>(n);
    GroupWord w;
    w.append(sym_y("010"), k);
    w.append(sym_x0(), 1).append(sym_x1(), 2).append(sym_x0(), -1).append(sym_x1(), -1);
    w.append(sym_x0(), 1).append(sym_x1(), -1).append(sym_x0(), -1);
    w.append(sym_y("0111"), -k);
    w.append(sym_y("010"), -k);
    w.append(sym_y("011"), k);

    DistortionWitness out;
    out.cantor_word = w;
    out.r_word = to_r_model_word(w);
    out.cantor_letters = w.length();
    out.r_letters = out.r_word.length();
    out.word_bound = 30 + 4ul * n;
    return out;
}

}  // namespace lm
