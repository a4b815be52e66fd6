// Command-line front end for the b23 codec and analysis library.
//
// Exit codes: 0 on success, 1 for unusable input (unsupported characters,
// bad flags, I/O failures), 2 for malformed containers or payloads.

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "b23/codec.hpp"
#include "b23/counting.hpp"
#include "b23/montecarlo.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBadContainer = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

b23::TableMode parse_mode(const std::string& name) {
    if (name == "corrected") return b23::TableMode::corrected;
    if (name == "strict-paper") return b23::TableMode::strict_paper;
    throw std::runtime_error("bad --table-mode '" + name +
                             "': expected 'corrected' or 'strict-paper'");
}

std::pair<int, int> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    int first = 0, last = 0;
    if (dots == std::string::npos) {
        first = last = std::stoi(text);
    } else {
        first = std::stoi(text.substr(0, dots));
        last = std::stoi(text.substr(dots + 2));
    }
    if (first < 1 || last < first) {
        throw std::runtime_error("bad range '" + text + "': expected A..B with 1 <= A <= B");
    }
    return {first, last};
}

b23::TritDistribution parse_distribution(const std::string& spec, b23::TableMode mode) {
    std::size_t colon = spec.find(':');
    std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (kind == "iid") {
        std::array<double, 3> p{};
        std::istringstream values(arg);
        std::string token;
        for (double& probability : p) {
            if (!std::getline(values, token, ',')) {
                throw std::runtime_error("--dist iid wants three probabilities: iid:p0,p1,p2");
            }
            probability = std::stod(token);
        }
        return b23::TritDistribution::iid(p[0], p[1], p[2]);
    }
    if (kind == "markov") {
        std::ifstream in(arg);
        if (!in) throw std::runtime_error("cannot open markov file: " + arg);
        nlohmann::json doc = nlohmann::json::parse(in);
        std::array<double, 3> initial{};
        std::array<std::array<double, 3>, 3> transition{};
        for (std::size_t i = 0; i < 3; ++i) {
            initial[i] = doc.at("initial").at(i).get<double>();
            for (std::size_t j = 0; j < 3; ++j) {
                transition[i][j] = doc.at("transition").at(i).at(j).get<double>();
            }
        }
        return b23::TritDistribution::markov(transition, initial);
    }
    if (kind == "empirical") {
        return b23::TritDistribution::empirical(read_input(arg),
                                                b23::SymbolTable::for_mode(mode));
    }
    throw std::runtime_error("unknown distribution '" + spec +
                             "': expected iid:p0,p1,p2, markov:FILE or empirical:FILE");
}

std::string filter_bit_text(const std::string& text) {
    std::string bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') continue;
        bits += ch;
    }
    return bits;
}

std::string fixed(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

struct Options {
    std::string input;
    std::string output;
    std::string table_mode = "corrected";
    bool bits_text = false;
    std::string range;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    int mc_n = 0;
    std::string dist = "iid:0.3333333333333333,0.3333333333333333,0.3333333333333334";
    bool csv = false;
};

int run_encode(const Options& opt) {
    const b23::SymbolTable& table = b23::SymbolTable::for_mode(parse_mode(opt.table_mode));
    b23::Container container = b23::compress(read_input(opt.input), table);
    if (opt.bits_text) {
        write_output(opt.output, container.payload.to_string());
    } else {
        std::vector<std::uint8_t> bytes = container.serialize();
        write_output(opt.output, std::string(bytes.begin(), bytes.end()));
    }
    return 0;
}

int run_decode(const Options& opt) {
    std::string data = read_input(opt.input);
    if (opt.bits_text) {
        b23::Container container;
        container.table_mode = parse_mode(opt.table_mode);
        container.payload = b23::Bitstream::parse(filter_bit_text(data));
        write_output(opt.output, b23::decompress(container));
    } else {
        auto bytes = std::vector<std::uint8_t>(data.begin(), data.end());
        write_output(opt.output, b23::decompress(b23::Container::parse(bytes)));
    }
    return 0;
}

int run_stats(const Options& opt) {
    const b23::SymbolTable& table = b23::SymbolTable::for_mode(parse_mode(opt.table_mode));
    b23::CompressionStats s = b23::stats(read_input(opt.input), table);
    std::ostringstream out;
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.4f", s.ratio_vs_baseline);
    out << "input_chars: " << s.input_chars << "\n"
        << "b23_bits: " << s.b23_bits << "\n"
        << "a23_bits: " << s.a23_bits << "\n"
        << "baseline_bits: " << s.baseline_bits << "\n"
        << "ratio_vs_baseline: " << ratio << "\n"
        << "pairs_fused: " << s.pairs_fused << "\n"
        << "cross_boundary_pairs: " << s.cross_boundary_pairs << "\n";
    write_output(opt.output, out.str());
    return 0;
}

int run_table(const Options& opt) {
    write_output(opt.output, b23::SymbolTable::for_mode(parse_mode(opt.table_mode)).dump());
    return 0;
}

int run_analyze(const Options& opt) {
    auto [first, last] = parse_range(opt.range);
    std::vector<b23::CountingReport> reports;
    reports.reserve(static_cast<std::size_t>(last - first) + 1);
    for (int n = first; n <= last; ++n) reports.push_back(b23::make_counting_report(n));

    std::ostringstream out;
    if (opt.csv) {
        out << b23::format_report_csv(reports);
    } else {
        out << b23::format_report_table(reports);
        out << "compression ratio bound: "
            << fixed(b23::compression_ratio_bound(b23::FrequencyTable::english(),
                                                  b23::SymbolTable::corrected()))
            << "\n";
    }
    write_output(opt.output, out.str());
    return 0;
}

int run_mc(const Options& opt) {
    b23::TritDistribution dist = parse_distribution(opt.dist, parse_mode(opt.table_mode));
    b23::McSummary summary =
        b23::pair_frequency_monte_carlo(dist, opt.mc_n, opt.trials, opt.seed);
    std::ostringstream out;
    out << "n: " << summary.n << "\n"
        << "trials: " << summary.trials << "\n"
        << "seed: " << summary.seed << "\n"
        << "mean_pairs: " << fixed(summary.mean_pairs) << "\n"
        << "variance_pairs: " << fixed(summary.variance_pairs) << "\n"
        << "std_error: " << fixed(summary.std_error) << "\n"
        << "mean_bits_saved: " << fixed(summary.mean_bits_saved) << "\n"
        << "mean_adjacent_pairs: " << fixed(summary.mean_adjacent_pairs) << "\n";
    write_output(opt.output, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"b23 - ternary text codec and pair-counting analysis"};
    app.require_subcommand(1);

    Options opt;

    auto add_io = [&opt](CLI::App* cmd, bool with_input) {
        if (with_input) cmd->add_option("input", opt.input, "input file (default: stdin)");
        cmd->add_option("-o,--output", opt.output, "output file (default: stdout)");
    };
    auto add_mode = [&opt](CLI::App* cmd) {
        cmd->add_option("--table-mode", opt.table_mode,
                        "coding table variant: corrected|strict-paper")
            ->default_str("corrected");
    };

    CLI::App* encode = app.add_subcommand("encode", "compress text into a container");
    add_io(encode, true);
    add_mode(encode);
    encode->add_flag("--bits-text", opt.bits_text,
                     "write the payload as a '0'/'1' string instead of a container");

    CLI::App* decode = app.add_subcommand("decode", "decompress a container back to text");
    add_io(decode, true);
    add_mode(decode);
    decode->add_flag("--bits-text", opt.bits_text,
                     "read a '0'/'1' payload string (table mode taken from --table-mode)");

    CLI::App* stats = app.add_subcommand("stats", "report compression statistics for text");
    add_io(stats, true);
    add_mode(stats);

    CLI::App* table = app.add_subcommand("table", "dump the coding table");
    add_io(table, false);
    add_mode(table);

    CLI::App* analyze =
        app.add_subcommand("analyze", "pair-free counts, probabilities and the ratio bound");
    add_io(analyze, false);
    analyze->add_option("--n", opt.range, "range of string lengths, e.g. 1..20")->required();
    analyze->add_flag("--csv", opt.csv, "emit CSV instead of the aligned table");

    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo pair-frequency estimate");
    add_io(mc, false);
    add_mode(mc);
    mc->add_option("--n", opt.mc_n, "string length")->required()->check(CLI::PositiveNumber);
    mc->add_option("--trials", opt.trials, "number of sampled strings")->default_str("100000");
    mc->add_option("--seed", opt.seed, "random seed")->default_str("0");
    mc->add_option("--dist", opt.dist,
                   "iid:p0,p1,p2 | markov:FILE | empirical:FILE (default: uniform iid)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (encode->parsed()) return run_encode(opt);
        if (decode->parsed()) return run_decode(opt);
        if (stats->parsed()) return run_stats(opt);
        if (table->parsed()) return run_table(opt);
        if (analyze->parsed()) return run_analyze(opt);
        if (mc->parsed()) return run_mc(opt);
    } catch (const b23::ContainerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadContainer;
    } catch (const b23::DecodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadContainer;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
