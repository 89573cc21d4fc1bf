#include "torus_tunnels/cli.hpp"

#include "torus_tunnels/classification.hpp"
#include "torus_tunnels/middle_tunnel.hpp"
#include "torus_tunnels/record.hpp"
#include "torus_tunnels/semisimple_tunnel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace torus_tunnels::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 2;

enum class Format { text, json, csv };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    return Format::text;
}

enum class Command { middle_slopes, upper_slopes, lower_slopes, intermediates, binaries, classify };

struct PairOptions {
    std::vector<std::string> values;
    std::string format = "text";
    std::string batch;
};

CablingSequence sequence_for(Command cmd, const BigInt& p, const BigInt& q) {
    switch (cmd) {
        case Command::upper_slopes: return upper_sequence(p, q);
        case Command::lower_slopes: return lower_sequence(p, q);
        default: return middle_sequence(p, q);
    }
}

// Renders one pair. Throws on invalid input.
void emit_pair(Command cmd, Format format, const BigInt& p, const BigInt& q, std::ostream& out) {
    if (cmd == Command::classify) {
        const TunnelClassification c = classify(p, q);
        switch (format) {
            case Format::text: out << render_classification(c) << '\n'; break;
            case Format::json: out << classification_to_json(p, q, c).dump() << '\n'; break;
            case Format::csv: {
                const ClassificationSummary summary{c.case_label, c.distinct_count};
                // Rows are reported in the p > q orientation the classes refer to.
                const TorusKnotParams params = normalize_params(p, q, TunnelKind::middle);
                const BigInt& cp = params.canonical_p;
                const BigInt& cq = params.canonical_q;
                out << csv_row(make_record(p, q, middle_sequence(cp, cq), summary)) << '\n'
                    << csv_row(make_record(p, q, upper_sequence(cp, cq), summary)) << '\n'
                    << csv_row(make_record(p, q, lower_sequence(cp, cq), summary)) << '\n';
                break;
            }
        }
        return;
    }

    const CablingSequence seq = sequence_for(cmd, p, q);
    switch (format) {
        case Format::text:
            if (cmd == Command::intermediates)
                out << render_intermediates(seq.intermediates) << '\n';
            else if (cmd == Command::binaries)
                out << render_binaries(seq.binaries) << '\n';
            else
                out << render_slopes(seq.simple_slope, seq.slopes) << '\n';
            break;
        case Format::json: out << to_json(make_record(p, q, seq)).dump() << '\n'; break;
        case Format::csv: out << csv_row(make_record(p, q, seq)) << '\n'; break;
    }
}

int run_pair_command(Command cmd, const PairOptions& opts, std::ostream& out, std::ostream& err) {
    const Format format = parse_format(opts.format);
    if (opts.batch.empty() == opts.values.empty()) {
        err << "error: give either two integers p q or --batch FILE\n";
        return kExitError;
    }
    if (opts.batch.empty() && opts.values.size() != 2) {
        err << "error: expected two integers p q\n";
        return kExitError;
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> jobs;  // label, tokens
    if (opts.batch.empty()) {
        jobs.emplace_back("", opts.values);
    } else {
        std::ifstream in(opts.batch);
        if (!in) {
            err << "error: cannot open batch file '" << opts.batch << "'\n";
            return kExitError;
        }
        std::string line;
        for (int lineno = 1; std::getline(in, line); ++lineno) {
            std::istringstream tokens(line);
            std::vector<std::string> fields{std::istream_iterator<std::string>(tokens), {}};
            if (fields.empty()) continue;
            jobs.emplace_back("line " + std::to_string(lineno) + ": ", std::move(fields));
        }
    }

    if (format == Format::csv) out << csv_header() << '\n';
    int status = kExitOk;
    for (const auto& [label, fields] : jobs) {
        try {
            if (fields.size() != 2) throw std::invalid_argument("expected two integers p q");
            emit_pair(cmd, format, parse_bigint(fields[0]), parse_bigint(fields[1]), out);
        } catch (const std::invalid_argument& e) {
            err << "error: " << label << e.what() << '\n';
            status = kExitError;
        }
    }
    return status;
}

struct EnumerateOptions {
    long long max = 0;
    std::string tunnel = "all";
    std::string format = "text";
    unsigned jobs = 0;
};

// All records for the knots (p, q), 2 <= q < p, rendered in q order.
std::string enumerate_row(long long p, const std::vector<TunnelKind>& kinds, Format format) {
    std::ostringstream os;
    const BigInt bp = p;
    for (long long q = 2; q < p; ++q) {
        const BigInt bq = q;
        if (gcd(bp, bq) != 1) continue;
        const std::array<CablingSequence, 3> seqs{middle_sequence(bp, bq), upper_sequence(bp, bq),
                                                  lower_sequence(bp, bq)};
        const TunnelClassification c = classify_sequences(bp, bq, seqs[0], seqs[1], seqs[2]);
        const ClassificationSummary summary{c.case_label, c.distinct_count};
        for (TunnelKind kind : kinds) {
            const CablingSequence& seq = seqs[static_cast<std::size_t>(kind)];
            switch (format) {
                case Format::text:
                    os << format_pair(bp, bq) << ' ' << to_string(kind) << ": "
                       << render_slopes(seq.simple_slope, seq.slopes) << '\n';
                    break;
                case Format::json: os << to_json(make_record(bp, bq, seq, summary)).dump() << '\n'; break;
                case Format::csv: os << csv_row(make_record(bp, bq, seq, summary)) << '\n'; break;
            }
        }
    }
    return os.str();
}

int run_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.max < 2) {
        err << "error: --max must be at least 2\n";
        return kExitError;
    }
    std::vector<TunnelKind> kinds;
    if (opts.tunnel == "all")
        kinds = {TunnelKind::middle, TunnelKind::upper, TunnelKind::lower};
    else
        kinds = {parse_tunnel_kind(opts.tunnel)};
    const Format format = parse_format(opts.format);

    // One chunk per p; workers pull p values from a shared counter and the
    // chunks are written in p order afterwards.
    const long long first = 3;
    std::vector<std::string> chunks(static_cast<std::size_t>(std::max(0LL, opts.max - first + 1)));
    std::atomic<long long> next{first};
    const unsigned workers = std::max(1u, opts.jobs ? opts.jobs : std::thread::hardware_concurrency());
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (long long p = next++; p <= opts.max; p = next++)
                        chunks[static_cast<std::size_t>(p - first)] = enumerate_row(p, kinds, format);
                } catch (...) {
                    errors[w] = std::current_exception();
                    next = opts.max + 1;
                }
            });
        }
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    if (format == Format::csv) out << csv_header() << '\n';
    for (const std::string& chunk : chunks) out << chunk;
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cabling-sequence invariants of torus knot tunnels", "torus-tunnels"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json", "csv"};

    struct PairCommand {
        const char* name;
        const char* help;
        Command cmd;
    };
    const std::vector<PairCommand> pair_commands{
        {"middle-slopes", "Slope invariants of the middle tunnel", Command::middle_slopes},
        {"upper-slopes", "Slope invariants of the upper tunnel", Command::upper_slopes},
        {"lower-slopes", "Slope invariants of the lower tunnel", Command::lower_slopes},
        {"intermediates", "Intermediate torus knots of the middle tunnel", Command::intermediates},
        {"binaries", "Binary invariants of the middle tunnel", Command::binaries},
        {"classify", "Number of distinct tunnels and which coincide", Command::classify},
    };

    std::vector<PairOptions> pair_opts(pair_commands.size());
    std::vector<CLI::App*> pair_apps;
    for (std::size_t i = 0; i < pair_commands.size(); ++i) {
        CLI::App* sub = app.add_subcommand(pair_commands[i].name, pair_commands[i].help);
        sub->add_option("pq", pair_opts[i].values, "The torus knot K(p,q) as two integers")->expected(0, 2);
        sub->add_option("--format", pair_opts[i].format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--batch", pair_opts[i].batch, "File of 'p q' lines processed in order");
        pair_apps.push_back(sub);
    }

    EnumerateOptions enum_opts;
    CLI::App* enumerate = app.add_subcommand("enumerate", "Invariants for every knot 2 <= q < p <= max");
    enumerate->add_option("--max", enum_opts.max, "Largest p")->required();
    enumerate->add_option("--tunnel", enum_opts.tunnel, "middle, upper, lower or all")
        ->check(CLI::IsMember({"middle", "upper", "lower", "all"}));
    enumerate->add_option("--format", enum_opts.format, "Output format")->check(CLI::IsMember(formats));
    enumerate->add_option("--jobs", enum_opts.jobs, "Worker threads (default: hardware concurrency)");

    std::vector<std::string> argv_tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    }

    try {
        for (std::size_t i = 0; i < pair_apps.size(); ++i) {
            if (pair_apps[i]->parsed()) return run_pair_command(pair_commands[i].cmd, pair_opts[i], out, err);
        }
        return run_enumerate(enum_opts, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace torus_tunnels::cli
