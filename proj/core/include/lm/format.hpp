#pragma once

#include <string>

#include "lm/rational.hpp"

namespace lm {

// ln(n) rendered at `digits` significant digits. Exact integers in, decimal
// text out; used only for presentation, never inside an assertion.
std::string log_decimal(const Int& n, int digits = 30);

// 0.5 * ln(n), same contract.
std::string half_log_decimal(const Int& n, int digits = 30);

// (ln(u) + ln(v)) / 4.
std::string quarter_log_sum_decimal(const Int& u, const Int& v, int digits = 30);

// (ln(n) + k) / 6 for an integer offset k >= 0.
std::string sixth_log_plus_decimal(const Int& n, unsigned long k, int digits = 30);

// Exact rational rendered as decimal at `digits` significant digits
// (round half to even on the last digit).
std::string ratio_decimal(const Rational& q, int digits = 6);

}  // namespace lm
