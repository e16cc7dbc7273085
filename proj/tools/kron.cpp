// Command line front end: batch access to the hook-by-rectangle Kronecker
// machinery with reproducible text/JSON output.
//
// Exit codes: 0 success, 1 internal disagreement or consistency failure,
// 2 usage/parse errors.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "kron/blasiak.hpp"
#include "kron/conversion.hpp"
#include "kron/oracle.hpp"
#include "kron/partition.hpp"
#include "kron/stability.hpp"
#include "kron/tableau.hpp"

#ifndef KRON_DEFAULT_FIXTURES_DIR
#define KRON_DEFAULT_FIXTURES_DIR "fixtures"
#endif

namespace {

using nlohmann::ordered_json;

struct cli_options {
    std::string format = "text";
    std::string fixtures = KRON_DEFAULT_FIXTURES_DIR;
    std::string cache_file;
    bool timing = false;
};

struct internal_failure {
    std::string message;
};

kron::character_cache& shared_cache() {
    static kron::character_cache cache;
    return cache;
}

void add_common(CLI::App* cmd, cli_options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--fixtures", opt.fixtures, "Directory of bundled fixtures");
    cmd->add_option("--cache", opt.cache_file,
                    "Character cache file, loaded on start and rewritten on exit");
    cmd->add_flag("--timing", opt.timing,
                  "Report real elapsed time (off by default so output is "
                  "byte-reproducible)");
}

class envelope {
  public:
    envelope(const cli_options& opt, std::string command)
        : opt_(opt), start_(std::chrono::steady_clock::now()) {
        body_["command"] = std::move(command);
        body_["inputs"] = ordered_json::object();
    }

    ordered_json& inputs() { return body_["inputs"]; }

    void finish(ordered_json result, const std::string& text) {
        body_["result"] = std::move(result);
        long long ms = 0;
        if (opt_.timing) {
            ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start_)
                     .count();
        }
        body_["elapsed_ms"] = ms;
        if (opt_.format == "json")
            std::cout << body_.dump(2) << '\n';
        else
            std::cout << text;
    }

  private:
    const cli_options& opt_;
    std::chrono::steady_clock::time_point start_;
    ordered_json body_;
};

std::string resolve_input(const std::string& path, const cli_options& opt) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    const fs::path in_fixtures = fs::path(opt.fixtures) / path;
    if (fs::exists(in_fixtures)) return in_fixtures.string();
    throw kron::query_error("cannot find input file '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw kron::query_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json tableau_json(const kron::colored_tableau& t) {
    ordered_json rows = ordered_json::array();
    std::istringstream lines(kron::format_tableau(t));
    std::string line;
    while (std::getline(lines, line)) rows.push_back(line);
    return rows;
}

// ---------------------------------------------------------------- coeff ----

int run_coeff(const cli_options& opt, const std::string& lambda_text, int d,
              const std::string& nu_text, bool with_oracle) {
    const kron::partition lambda = kron::partition::parse(lambda_text);
    const kron::partition nu = kron::partition::parse(nu_text);

    envelope env(opt, "coeff");
    env.inputs() = {{"lambda", lambda.str()},
                    {"d", d},
                    {"nu", nu.str()},
                    {"oracle", with_oracle}};

    const long long g = kron::hook_kronecker({lambda, d, nu});
    ordered_json result{{"g", g}};
    std::string text = std::to_string(g) + "\n";

    bool agree = true;
    if (with_oracle) {
        const kron::partition hook = kron::make_hook(lambda.sum(), d);
        const long long ref = kron::kronecker_oracle(lambda, hook, nu, shared_cache());
        agree = ref == g;
        result["oracle"] = ref;
        result["agree"] = agree;
        text = "blasiak: " + std::to_string(g) + "\noracle: " + std::to_string(ref) +
               "\n" + (agree ? "" : "MISMATCH\n");
    }
    env.finish(std::move(result), text);
    return agree ? 0 : 1;
}

// ------------------------------------------------------------ decompose ----

int run_decompose(const cli_options& opt, int m, int t, int d) {
    envelope env(opt, "decompose");
    env.inputs() = {{"m", m}, {"t", t}, {"d", d}};

    const kron::schur_expansion expansion = kron::decompose_hook_rect(m, t, d);
    const kron::partition hook = kron::make_hook(m * t, d);
    const kron::partition rect = kron::make_rectangle(m, t);

    long long lhs = 0;
    for (const auto& [nu, g] : expansion.terms)
        lhs += g * kron::dimension(nu, shared_cache());
    const long long rhs = kron::dimension(hook, shared_cache()) *
                          kron::dimension(rect, shared_cache());
    const bool ok = lhs == rhs;

    ordered_json terms = ordered_json::array();
    std::string text;
    for (const auto& [nu, g] : expansion.terms) {
        terms.push_back({{"nu", nu.str()}, {"g", g}});
        text += nu.str() + " : " + std::to_string(g) + "\n";
    }
    text += "dimension identity: " + std::to_string(lhs) +
            " == " + std::to_string(rhs) + (ok ? " ok" : " FAIL") + "\n";

    env.finish({{"lambda", rect.str()},
                {"hook", hook.str()},
                {"terms", terms},
                {"dimension_identity",
                 {{"lhs", lhs}, {"rhs", rhs}, {"ok", ok}}}},
               text);
    if (!ok) throw internal_failure{"dimension identity failed"};
    return 0;
}

// --------------------------------------------------------------- verify ----

ordered_json report_json(const kron::stability_report& report) {
    ordered_json pairs = ordered_json::array();
    for (const auto& pair : report.pairs) {
        pairs.push_back({{"nu", pair.nu.str()},
                         {"nu_tilde", pair.nu_tilde.str()},
                         {"g_t", pair.g_t},
                         {"g_t1", pair.g_t1}});
    }
    ordered_json unmatched = ordered_json::array();
    for (const auto& gamma : report.unmatched_in_lifted)
        unmatched.push_back(gamma.str());
    return {{"m", report.m},
            {"d", report.d},
            {"t", report.t},
            {"bound_satisfied", report.bound_satisfied},
            {"pairs", pairs},
            {"unmatched_in_lifted", unmatched},
            {"verdict", report.verdict}};
}

int run_verify(const cli_options& opt, int m, int d, int t_min, int t_max) {
    if (t_min < 1 || t_max < t_min)
        throw kron::query_error("need 1 <= t-min <= t-max");
    envelope env(opt, "verify");
    env.inputs() = {{"m", m}, {"d", d}, {"t_min", t_min}, {"t_max", t_max}};

    ordered_json reports = ordered_json::array();
    std::string text;
    bool theorem_violated = false;
    for (int t = t_min; t <= t_max; ++t) {
        if (d > m * t - 1) {
            text += "t=" + std::to_string(t) + " skipped (d > mt-1)\n";
            reports.push_back({{"m", m}, {"d", d}, {"t", t}, {"skipped", true}});
            continue;
        }
        const kron::stability_report report = kron::verify_stability(m, d, t);
        reports.push_back(report_json(report));
        text += "t=" + std::to_string(t) + " n=" + std::to_string(m * t) +
                " bound_satisfied=" + (report.bound_satisfied ? "true" : "false") +
                " verdict=" + report.verdict +
                " pairs=" + std::to_string(report.pairs.size()) +
                " mismatches=" + std::to_string(report.coefficient_mismatches.size()) +
                " unmatched=" + std::to_string(report.unmatched_in_lifted.size()) +
                "\n";
        for (const auto& pair : report.coefficient_mismatches)
            text += "  mismatch: " + pair.nu.str() + " -> " + pair.nu_tilde.str() +
                    " : " + std::to_string(pair.g_t) + " != " +
                    std::to_string(pair.g_t1) + "\n";
        for (const auto& gamma : report.unmatched_in_lifted)
            text += "  unmatched in lifted: " + gamma.str() + "\n";
        if (report.bound_satisfied && !report.stable()) theorem_violated = true;
    }
    env.finish(std::move(reports), text);
    if (theorem_violated)
        throw internal_failure{"stability failed above the bound t >= d+2"};
    return 0;
}

// -------------------------------------------------------------- convert ----

int run_convert(const cli_options& opt, const std::string& input,
                const std::string& to, bool trace) {
    const kron::order target =
        to == "natural" ? kron::order::natural : kron::order::small_bar;
    const kron::order source = target == kron::order::natural
                                   ? kron::order::small_bar
                                   : kron::order::natural;

    envelope env(opt, "convert");
    env.inputs() = {{"input", input}, {"to", to}, {"trace", trace}};

    const kron::colored_tableau parsed =
        kron::parse_tableau(read_file(resolve_input(input, opt)), source);
    const auto [converted, chain] = target == kron::order::natural
                                        ? kron::to_natural(parsed)
                                        : kron::to_small_bar(parsed);

    ordered_json result{{"tableau", tableau_json(converted)}};
    std::string text;
    if (trace) {
        text = kron::format_trace(chain);
        ordered_json steps = ordered_json::array();
        for (size_t i = 1; i < chain.snapshots.size(); ++i) {
            steps.push_back({{"step", i},
                             {"moved", chain.moved[i - 1].str()},
                             {"snapshot", tableau_json(chain.snapshots[i])}});
        }
        result["trace"] = steps;
    } else {
        text = kron::format_tableau(converted);
    }
    env.finish(std::move(result), text);
    return 0;
}

// ---------------------------------------------------------------- sweep ----

int run_sweep(const cli_options& opt, int n_max) {
    if (n_max < 0) throw kron::query_error("n-max must be nonnegative");
    envelope env(opt, "sweep");
    env.inputs() = {{"n_max", n_max}};

    long long cases = 0;
    std::string text;
    ordered_json mismatches = ordered_json::array();
    for (int n = 1; n <= n_max; ++n) {
        long long cases_n = 0;
        const std::vector<kron::partition> shapes = kron::partitions_of(n);
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            const int t = n / m;
            for (int d = 0; d <= n - 1; ++d) {
                const kron::schur_expansion got = kron::decompose_hook_rect(m, t, d);
                const kron::partition lambda = kron::make_rectangle(m, t);
                const kron::partition hook = kron::make_hook(n, d);
                for (const auto& nu : shapes) {
                    const long long want =
                        kron::kronecker_oracle(lambda, hook, nu, shared_cache());
                    ++cases_n;
                    if (got.coefficient(nu) != want) {
                        mismatches.push_back({{"m", m},
                                              {"t", t},
                                              {"d", d},
                                              {"nu", nu.str()},
                                              {"blasiak", got.coefficient(nu)},
                                              {"oracle", want}});
                        text += "MISMATCH m=" + std::to_string(m) +
                                " t=" + std::to_string(t) +
                                " d=" + std::to_string(d) + " nu=" + nu.str() +
                                ": blasiak=" + std::to_string(got.coefficient(nu)) +
                                " oracle=" + std::to_string(want) + "\n";
                    }
                }
            }
        }
        cases += cases_n;
        text += "n=" + std::to_string(n) + " cases=" + std::to_string(cases_n) + "\n";
    }
    text += "total cases=" + std::to_string(cases) +
            " mismatches=" + std::to_string(mismatches.size()) + "\n";
    env.finish({{"cases", cases}, {"mismatches", mismatches}}, text);
    if (!mismatches.empty())
        throw internal_failure{"enumerator disagrees with the character oracle"};
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kronecker coefficients g(rectangle, hook, nu): colored "
                 "tableau enumeration, character oracle, stability checks"};
    app.require_subcommand(1);
    cli_options opt;

    std::string lambda_text, nu_text, input_file, to_order = "natural";
    int d = 0, m = 1, t = 1, t_min = 1, t_max = 1, n_max = 10;
    bool with_oracle = false, trace = false;

    CLI::App* coeff = app.add_subcommand(
        "coeff", "One coefficient g(lambda, (n-d,1^d), nu) by tableau count");
    coeff->add_option("--lambda", lambda_text, "Content partition, e.g. 3,3,3")
        ->required();
    coeff->add_option("--d", d, "Hook leg length")->required();
    coeff->add_option("--nu", nu_text, "Shape partition")->required();
    coeff->add_flag("--oracle", with_oracle,
                    "Also evaluate the character oracle and compare");
    add_common(coeff, opt);

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Full expansion of hook times rectangle");
    decompose->add_option("--m", m, "Rectangle row length")->required();
    decompose->add_option("--t", t, "Rectangle row count")->required();
    decompose->add_option("--d", d, "Hook leg length")->required();
    add_common(decompose, opt);

    CLI::App* verify = app.add_subcommand(
        "verify", "Stability reports for a range of rectangle heights");
    verify->add_option("--m", m, "Rectangle row length")->required();
    verify->add_option("--d", d, "Hook leg length")->required();
    verify->add_option("--t-min", t_min, "First t")->required();
    verify->add_option("--t-max", t_max, "Last t")->required();
    add_common(verify, opt);

    CLI::App* convert = app.add_subcommand(
        "convert", "Convert a tableau between the two alphabet orders");
    convert->add_option("--input", input_file, "Tableau text file")->required();
    convert->add_option("--to", to_order, "Target order")
        ->check(CLI::IsMember({"natural", "small-bar"}));
    convert->add_flag("--trace", trace, "Print every slide step");
    add_common(convert, opt);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Compare enumerator and oracle on every rectangle/hook/shape");
    sweep->add_option("--n-max", n_max, "Largest n = mt to sweep");
    add_common(sweep, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (!opt.cache_file.empty()) shared_cache().load(opt.cache_file);
        int rc = 0;
        if (coeff->parsed())
            rc = run_coeff(opt, lambda_text, d, nu_text, with_oracle);
        else if (decompose->parsed())
            rc = run_decompose(opt, m, t, d);
        else if (verify->parsed())
            rc = run_verify(opt, m, d, t_min, t_max);
        else if (convert->parsed())
            rc = run_convert(opt, input_file, to_order, trace);
        else if (sweep->parsed())
            rc = run_sweep(opt, n_max);
        if (!opt.cache_file.empty()) shared_cache().save(opt.cache_file);
        return rc;
    } catch (const internal_failure& e) {
        std::cerr << "error: " << e.message << '\n';
        return 1;
    } catch (const kron::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const kron::conversion_error& e) {
        std::cerr << "conversion error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
