#pragma once

#include <optional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "b23/symbol_table.hpp"

namespace b23 {

using BigInt = boost::multiprecision::cpp_int;

/// Exhaustive enumeration stays under a few seconds up to 3^14 strings.
inline constexpr int brute_force_cap = 14;

/// Largest n for which the closed form stays below 2^53, so rounding the
/// double value recovers the exact integer.
inline constexpr int closed_form_exact_cap = 35;

/// Number of length-n trit strings with no adjacent (1,2) pair, counted by
/// enumerating all 3^n strings. Throws std::domain_error outside
/// 1..brute_force_cap.
BigInt count_no12_bruteforce(int n);

/// Same count via the linear recurrence s(n) = 3 s(n-1) - s(n-2) with
/// s(1) = 3, s(2) = 8, in exact integers. Requires n >= 1.
BigInt count_no12_recurrence(int n);

struct ClosedForm {
    double value;    // (phi^(2n+2) - phi^-(2n+2)) / sqrt(5)
    BigInt nearest;  // value rounded to the nearest integer
    bool exact;      // n <= closed_form_exact_cap, where nearest is trustworthy
};

/// Golden-ratio closed form of the same count. Outside the exactness window
/// the value is still returned but flagged. Requires n >= 1.
ClosedForm count_no12_closed_form(int n);

/// Checks that the pair-free counts are the even-indexed terms of the
/// Fibonacci-like sequence g(1) = 2, g(2) = 3, g(k) = g(k-1) + g(k-2):
/// s(n) = g(2n) for all n in 1..n_max.
bool fibonacci_identity_check(int n_max);

/// Probability that a uniform random length-n trit string contains at least
/// one (1,2) pair: (3^n - s(n)) / 3^n, evaluated from exact integers.
/// Nondecreasing in n and tending to 1.
double p_at_least_one_12(int n);

/// Expected compressed-to-8-bit ratio for long text under the model where
/// space has probability 1/2 and each letter half its table frequency:
/// (4 * 100 + sum over letters of bits(letter) * freq(letter)) / (8 * 200).
double compression_ratio_bound(const FrequencyTable& freqs, const SymbolTable& table);

/// The three routes to s(n) side by side, plus p(n).
struct CountingReport {
    int n = 0;
    std::optional<BigInt> s_bruteforce;  // present only when n <= the cap
    BigInt s_recurrence;
    ClosedForm s_closed;
    double p_n = 0.0;
};

CountingReport make_counting_report(int n, int bruteforce_cap = brute_force_cap);

/// Aligned plain-text table with columns n, s_bruteforce, s_recurrence,
/// s_closed, p_n.
std::string format_report_table(std::span<const CountingReport> reports);

/// CSV with header n,s_bruteforce,s_recurrence,s_closed,p_n. The brute-force
/// cell is empty above the cap.
std::string format_report_csv(std::span<const CountingReport> reports);

}  // namespace b23
