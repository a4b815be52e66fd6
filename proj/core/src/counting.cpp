#include "b23/counting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace b23 {
namespace {

BigInt pow3(int n) {
    BigInt p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

/// num / den for exact integers with 0 <= num <= den, correctly rounded to
/// roughly 64 bits before the float conversion.
double exact_ratio(const BigInt& num, const BigInt& den) {
    BigInt scaled = (num << 64) / den;
    return std::ldexp(scaled.convert_to<double>(), -64);
}

std::string closed_cell(const ClosedForm& closed) {
    if (closed.exact) return closed.nearest.str();
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", closed.value);
    return buf;
}

std::string p_cell(double p) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", p);
    return buf;
}

}  // namespace

BigInt count_no12_bruteforce(int n) {
    if (n < 1 || n > brute_force_cap) {
        throw std::domain_error("brute force supports n in 1.." +
                                std::to_string(brute_force_cap));
    }
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    BigInt count = 0;
    for (;;) {
        bool has_pair = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (digits[i] == 1 && digits[i + 1] == 2) {
                has_pair = true;
                break;
            }
        }
        if (!has_pair) ++count;
        // base-3 odometer, least significant digit last
        int pos = n - 1;
        while (pos >= 0 && digits[pos] == 2) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
    }
    return count;
}

BigInt count_no12_recurrence(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    BigInt prev = 3, current = 8;  // s(1), s(2)
    if (n == 1) return prev;
    for (int k = 3; k <= n; ++k) {
        BigInt next = 3 * current - prev;
        prev = current;
        current = next;
    }
    return current;
}

ClosedForm count_no12_closed_form(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    // Evaluated in extended precision so the nearest integer is reliable
    // through the whole 2^53 window.
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    long double power = std::pow(phi, static_cast<long double>(2 * n + 2));
    long double value = (power - 1.0L / power) / std::sqrt(5.0L);

    ClosedForm result;
    result.value = static_cast<double>(value);
    result.exact = n <= closed_form_exact_cap;
    if (std::isfinite(value)) result.nearest = BigInt(std::round(value));
    return result;
}

bool fibonacci_identity_check(int n_max) {
    if (n_max < 1) throw std::domain_error("n_max must be >= 1");
    std::vector<BigInt> g(static_cast<std::size_t>(2 * n_max) + 1);
    g[1] = 2;
    if (n_max >= 1) g[2] = 3;
    for (std::size_t k = 3; k < g.size(); ++k) g[k] = g[k - 1] + g[k - 2];
    for (int n = 1; n <= n_max; ++n) {
        if (count_no12_recurrence(n) != g[static_cast<std::size_t>(2 * n)]) return false;
    }
    return true;
}

double p_at_least_one_12(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    BigInt total = pow3(n);
    BigInt pair_free = count_no12_recurrence(n);
    return exact_ratio(total - pair_free, total);
}

double compression_ratio_bound(const FrequencyTable& freqs, const SymbolTable& table) {
    // Space at probability 1/2, each letter at half its table frequency.
    // Weights are kept in percent of the letter table, so space weighs 100
    // and the denominator is 8 bits times the total weight of 200.
    double numerator = 4.0 * 100.0;
    for (const auto& [letter, frequency] : freqs.letters) {
        numerator += static_cast<double>(table.entry_for(letter).bits.size()) * frequency;
    }
    return numerator / (8.0 * 200.0);
}

CountingReport make_counting_report(int n, int bruteforce_cap) {
    CountingReport report;
    report.n = n;
    if (n >= 1 && n <= bruteforce_cap && n <= brute_force_cap) {
        report.s_bruteforce = count_no12_bruteforce(n);
    }
    report.s_recurrence = count_no12_recurrence(n);
    report.s_closed = count_no12_closed_form(n);
    report.p_n = p_at_least_one_12(n);
    return report;
}

std::string format_report_table(std::span<const CountingReport> reports) {
    constexpr std::size_t columns = 5;
    std::vector<std::array<std::string, columns>> rows;
    rows.push_back({"n", "s_bruteforce", "s_recurrence", "s_closed", "p_n"});
    for (const CountingReport& r : reports) {
        rows.push_back({std::to_string(r.n),
                        r.s_bruteforce ? r.s_bruteforce->str() : "-",
                        r.s_recurrence.str(), closed_cell(r.s_closed), p_cell(r.p_n)});
    }

    std::array<std::size_t, columns> widths{};
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < columns; ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < columns; ++c) {
            if (c > 0) out += "  ";
            out.append(widths[c] - row[c].size(), ' ');
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

std::string format_report_csv(std::span<const CountingReport> reports) {
    std::string out = "n,s_bruteforce,s_recurrence,s_closed,p_n\n";
    for (const CountingReport& r : reports) {
        out += std::to_string(r.n);
        out += ',';
        if (r.s_bruteforce) out += r.s_bruteforce->str();
        out += ',';
        out += r.s_recurrence.str();
        out += ',';
        out += closed_cell(r.s_closed);
        out += ',';
        out += p_cell(r.p_n);
        out += '\n';
    }
    return out;
}

}  // namespace b23
