#include "ktc/clique.hpp"
#include "ktc/colorers.hpp"
#include "ktc/generators.hpp"
#include "ktc/model.hpp"
#include "ktc/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

bool parse_int(std::string_view text, int& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto result = std::from_chars(first, last, out);
    return result.ec == std::errc() && result.ptr == last;
}

const CLI::Validator kRationalText{
    [](std::string& input) -> std::string {
        try {
            ktc::Rational::parse(input);
        } catch (const std::exception&) {
            return "'" + input + "' is not a rational number (use p or p/q)";
        }
        return {};
    },
    "RATIONAL"};

const CLI::Validator kXRangeText{
    [](std::string& input) -> std::string {
        int lo = 0;
        int hi = 0;
        const auto colon = input.find(':');
        if (colon == std::string::npos || !parse_int(std::string_view(input).substr(0, colon), lo) ||
            !parse_int(std::string_view(input).substr(colon + 1), hi)) {
            return "'" + input + "' is not a range (use LO:HI)";
        }
        if (lo < 3) return "ranges start at clique size 3";
        if (hi < lo) return "empty range '" + input + "'";
        if (hi > 5000) return "clique sizes above 5000 are not supported";
        return {};
    },
    "LO:HI"};

const CLI::Validator kAlgoListText{
    [](std::string& input) -> std::string {
        if (input.empty()) return std::string("empty algorithm list");
        for (const std::string& token : split(input, ',')) {
            if (!ktc::algo_from_token(token).has_value()) {
                return "unknown algorithm '" + token + "' (choose from kt, ff, opt)";
            }
        }
        return {};
    },
    "ALGOS"};

void write_trace(const std::string& path, const std::vector<ktc::TraceRecord>& trace) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace file: " + path);
    for (const ktc::TraceRecord& t : trace) {
        out << "{\"id\":" << t.id << ",\"level\":" << t.level << ",\"color\":" << t.color
            << ",\"witness_point\":\"" << t.witness_point.to_string() << "\",\"witness_size\":"
            << t.witness_size << "}\n";
    }
    if (!out) throw std::runtime_error("failed writing trace file: " + path);
}

void run_experiment(const std::string& range_text, const std::string& algos_text,
                    const std::string& out_path) {
    const auto colon = range_text.find(':');
    int lo = 0;
    int hi = 0;
    parse_int(std::string_view(range_text).substr(0, colon), lo);
    parse_int(std::string_view(range_text).substr(colon + 1), hi);

    bool want_kt = false;
    bool want_ff = false;
    bool want_opt = false;
    for (const std::string& token : split(algos_text, ',')) {
        switch (*ktc::algo_from_token(token)) {
            case ktc::Algo::kt: want_kt = true; break;
            case ktc::Algo::first_fit: want_ff = true; break;
            case ktc::Algo::offline_optimal: want_opt = true; break;
        }
    }

    std::ostringstream csv;
    csv << "x,n,omega,kt_colors,ff_colors,opt_colors,kt_bound,kt_tight\n";
    for (int x = lo; x <= hi; ++x) {
        const ktc::Instance instance = ktc::tight_unit_instance(x);
        const std::size_t w = ktc::omega(instance.intervals).size;
        auto run_checked = [&](ktc::Algo algo) {
            ktc::ColoringResult result = ktc::run(algo, instance);
            const ktc::VerificationReport report = ktc::check(instance, result);
            if (!report.all_ok()) {
                throw std::runtime_error("verification failed for " +
                                         std::string(ktc::algo_name(algo)) + " at x=" +
                                         std::to_string(x));
            }
            return result;
        };
        std::string kt_colors;
        std::string ff_colors;
        std::string opt_colors;
        std::string kt_bound;
        std::string kt_tight;
        if (want_kt) {
            const ktc::ColoringResult result = run_checked(ktc::Algo::kt);
            const long long bound = std::max<long long>(1, 3 * static_cast<long long>(w) - 3);
            kt_colors = std::to_string(result.distinct_colors);
            kt_bound = std::to_string(bound);
            kt_tight = result.distinct_colors == bound ? "1" : "0";
        }
        if (want_ff) {
            ff_colors = std::to_string(run_checked(ktc::Algo::first_fit).distinct_colors);
        }
        if (want_opt) {
            opt_colors = std::to_string(run_checked(ktc::Algo::offline_optimal).distinct_colors);
        }
        csv << x << ',' << instance.size() << ',' << w << ',' << kt_colors << ',' << ff_colors
            << ',' << opt_colors << ',' << kt_bound << ',' << kt_tight << '\n';
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write csv file: " + out_path);
        out << csv.str();
        if (!out) throw std::runtime_error("failed writing csv file: " + out_path);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online interval coloring: leveled and first-fit colorers, "
                 "tight adversarial sequences, result verification"};
    app.require_subcommand(1);

    // gen -----------------------------------------------------------------
    std::string gen_kind;
    int gen_x = 0;
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_span;
    std::string gen_max_len;
    std::string gen_out;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    gen_cmd->add_option("kind", gen_kind, "theorem2 | random-unit | random-general")
        ->required()
        ->check(CLI::IsMember({"theorem2", "random-unit", "random-general"}));
    CLI::Option* gen_x_opt = gen_cmd->add_option("--x", gen_x, "clique size of the tight sequence")
                                 ->check(CLI::Range(3, 5000));
    CLI::Option* gen_n_opt = gen_cmd->add_option("--n", gen_n, "number of intervals");
    CLI::Option* gen_seed_opt = gen_cmd->add_option("--seed", gen_seed, "rng seed (default 0)");
    CLI::Option* gen_span_opt =
        gen_cmd->add_option("--span", gen_span, "instances live in [0, span]")->check(kRationalText);
    CLI::Option* gen_max_len_opt =
        gen_cmd->add_option("--max-len", gen_max_len, "maximum interval length")->check(kRationalText);
    gen_cmd->add_option("-o,--out", gen_out, "instance file to write")->required();
    gen_cmd->callback([&]() {
        auto need = [&](const CLI::Option* opt, const char* name) {
            if (opt->count() == 0) {
                throw CLI::ValidationError(std::string(name) + " is required for kind '" +
                                           gen_kind + "'");
            }
        };
        auto forbid = [&](const CLI::Option* opt, const char* name) {
            if (opt->count() > 0) {
                throw CLI::ValidationError(std::string(name) + " does not apply to kind '" +
                                           gen_kind + "'");
            }
        };
        ktc::Instance instance;
        if (gen_kind == "theorem2") {
            need(gen_x_opt, "--x");
            forbid(gen_n_opt, "--n");
            forbid(gen_seed_opt, "--seed");
            forbid(gen_span_opt, "--span");
            forbid(gen_max_len_opt, "--max-len");
            instance = ktc::tight_unit_instance(gen_x);
        } else if (gen_kind == "random-unit") {
            need(gen_n_opt, "--n");
            need(gen_span_opt, "--span");
            forbid(gen_x_opt, "--x");
            forbid(gen_max_len_opt, "--max-len");
            instance = ktc::random_unit_instance(gen_n, gen_seed, ktc::Rational::parse(gen_span));
        } else {
            need(gen_n_opt, "--n");
            need(gen_span_opt, "--span");
            need(gen_max_len_opt, "--max-len");
            forbid(gen_x_opt, "--x");
            instance = ktc::random_general_instance(gen_n, gen_seed, ktc::Rational::parse(gen_span),
                                                    ktc::Rational::parse(gen_max_len));
        }
        ktc::save_instance(instance, gen_out);
        std::cout << "n=" << instance.size() << " omega=" << ktc::omega(instance.intervals).size
                  << "\n";
    });

    // run -----------------------------------------------------------------
    std::string run_algo;
    std::string run_in;
    std::string run_out;
    std::string run_trace;
    CLI::App* run_cmd = app.add_subcommand("run", "color an instance online (or offline for opt)");
    run_cmd->add_option("algo", run_algo, "kt | ff | opt")
        ->required()
        ->check(CLI::IsMember({"kt", "ff", "opt"}));
    run_cmd->add_option("-i,--instance", run_in, "instance file")->required();
    run_cmd->add_option("-o,--out", run_out, "result file to write");
    CLI::Option* trace_opt =
        run_cmd->add_option("--trace", run_trace, "per-arrival decision log, kt only");
    run_cmd->callback([&]() {
        const ktc::Algo algo = *ktc::algo_from_token(run_algo);
        if (trace_opt->count() > 0 && algo != ktc::Algo::kt) {
            throw CLI::ValidationError("--trace is only available for algo 'kt'");
        }
        const ktc::Instance instance = ktc::load_instance(run_in);
        std::vector<ktc::TraceRecord> trace;
        const ktc::ColoringResult result =
            ktc::run(algo, instance, trace_opt->count() > 0 ? &trace : nullptr);
        if (!run_out.empty()) ktc::save_result(result, run_out);
        if (trace_opt->count() > 0) write_trace(run_trace, trace);
        std::cout << result.distinct_colors << "\n";
    });

    // verify ----------------------------------------------------------------
    std::string verify_in;
    std::string verify_res;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a result file against its instance");
    verify_cmd->add_option("-i,--instance", verify_in, "instance file")->required();
    verify_cmd->add_option("-r,--result", verify_res, "result file")->required();
    verify_cmd->callback([&]() {
        const ktc::Instance instance = ktc::load_instance(verify_in);
        const ktc::ColoringResult result = ktc::load_result(verify_res);
        const ktc::VerificationReport report = ktc::check(instance, result);
        std::cout << ktc::render_report_json(report);
        if (!report.all_ok()) {
            throw std::runtime_error("verification failed, see the report above");
        }
    });

    // experiment -------------------------------------------------------------
    std::string exp_range;
    std::string exp_algos = "kt,ff,opt";
    std::string exp_out;
    CLI::App* exp_cmd =
        app.add_subcommand("experiment", "sweep the tight construction over clique sizes");
    exp_cmd->add_option("--x-range", exp_range, "clique sizes LO:HI (LO >= 3)")
        ->required()
        ->check(kXRangeText);
    exp_cmd->add_option("--algos", exp_algos, "comma-separated subset of kt,ff,opt")
        ->check(kAlgoListText);
    exp_cmd->add_option("-o,--out", exp_out, "csv file (default stdout)");
    exp_cmd->callback([&]() { run_experiment(exp_range, exp_algos, exp_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
