// oslcm: one-sided local crossing minimization toolkit
//
// Subcommands: gen, solve, decide, eval, verify-approx, render, bench.
// Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
// 3 budget-exhausted-unknown (decide only).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oslcm/oslcm.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUnknown = 3;
constexpr std::size_t kOracleVerifyEdgeCap = 10000;

class timer {
  public:
    timer() : start_(std::chrono::steady_clock::now()) {}

    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

oslcm::two_layer_network read_instance(const std::string &path) {
    if (path == "-") return oslcm::parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw oslcm::validation_error("cannot open instance file: " + path);
    return oslcm::parse_instance(in);
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw oslcm::validation_error("cannot open output file: " + path);
    out << text;
}

oslcm::median_rule parse_rule(const std::string &name) {
    if (name == "heuristicA") return oslcm::median_rule::heuristic_a;
    if (name == "floor") return oslcm::median_rule::floor_generic;
    if (name == "ceil") return oslcm::median_rule::ceil_generic;
    throw CLI::ValidationError("--rule", "unknown rule: " + name);
}

oslcm::tie_break parse_tie_break(const std::string &name) {
    if (name == "paper") return oslcm::tie_break::paper;
    if (name == "ew-odd-first") return oslcm::tie_break::ew_odd_first;
    throw CLI::ValidationError("--tie-break", "unknown tie-break: " + name);
}

// Independent recount of a reported value. auto selects the quadratic oracle
// below kOracleVerifyEdgeCap edges and the sweep counter above.
struct verification {
    std::int64_t value{0};
    std::string mode;
};

verification recount(const oslcm::two_layer_network &net, const oslcm::y_order &order,
                     const std::string &mode) {
    verification v;
    if (mode == "off") {
        v.mode = "off";
        v.value = -1;
        return v;
    }
    oslcm::count_mode m = oslcm::count_mode::fast;
    if (mode == "oracle" || (mode == "auto" && net.edges.size() <= kOracleVerifyEdgeCap))
        m = oslcm::count_mode::oracle;
    v.mode = m == oslcm::count_mode::oracle ? "oracle" : "fast";
    v.value = oslcm::compute_profile(net, order, m).local_crossing_number;
    return v;
}

[[noreturn]] void verification_failure(const std::string &what) {
    std::cerr << "verification failure: " << what << "\n";
    std::exit(kExitVerification);
}

void append_profile(ordered_json &report, const oslcm::two_layer_network &net,
                    const oslcm::crossing_profile &profile) {
    ordered_json edges = ordered_json::array();
    for (std::size_t i = 0; i < net.edges.size(); ++i)
        edges.push_back({net.edges[i].x, net.x_count + net.edges[i].y, profile.per_edge[i]});
    report["profile"] = std::move(edges);
}

void emit_report(const ordered_json &report, const std::string &format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto &[key, value] : report.items()) {
        if (key == "profile") {
            std::cout << "profile:\n";
            for (const auto &entry : value)
                std::cout << "  edge " << entry[0].get<int>() << ' ' << entry[1].get<int>() << ' '
                          << entry[2].get<std::int64_t>() << "\n";
            continue;
        }
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
    }
}

struct solve_flags {
    std::string input;
    std::string algo{"both"};
    std::string rule{"heuristicA"};
    std::string tie{"paper"};
    std::string format{"text"};
    std::string verify{"auto"};
    std::uint64_t budget_nodes{0};
    double budget_seconds{0.0};
    bool with_profile{false};
};

ordered_json run_median(const oslcm::two_layer_network &net, const solve_flags &flags) {
    timer t;
    const oslcm::y_order order =
        oslcm::heuristic_order(net, parse_rule(flags.rule), parse_tie_break(flags.tie));
    const oslcm::crossing_profile profile = oslcm::compute_profile(net, order);
    const double elapsed = t.ms();

    const verification check = recount(net, order, flags.verify);
    if (check.mode != "off" && check.value != profile.local_crossing_number)
        verification_failure("median value " + std::to_string(profile.local_crossing_number) +
                             " != recount " + std::to_string(check.value));

    ordered_json report;
    report["algorithm"] = "median";
    report["rule"] = flags.rule;
    report["tie_break"] = flags.tie;
    report["instance"] = oslcm::instance_digest(net);
    report["value"] = profile.local_crossing_number;
    report["order"] = oslcm::format_order(net, order);
    report["time_ms"] = format_double(elapsed);
    report["verified"] = check.mode;
    if (flags.with_profile) append_profile(report, net, profile);
    return report;
}

ordered_json run_exact(const oslcm::two_layer_network &net, const solve_flags &flags,
                       std::int64_t *value_out, bool *proven_out) {
    timer t;
    const oslcm::exact_result res =
        oslcm::exact_optimum(net, {flags.budget_nodes, flags.budget_seconds});
    const double elapsed = t.ms();

    const verification check = recount(net, res.order, flags.verify);
    if (check.mode != "off" && check.value != res.value)
        verification_failure("exact value " + std::to_string(res.value) + " != recount " +
                             std::to_string(check.value));

    ordered_json report;
    report["algorithm"] = "exact";
    report["instance"] = oslcm::instance_digest(net);
    report["value"] = res.value;
    report["proven_optimal"] = res.proven_optimal;
    report["nodes"] = res.nodes_explored;
    report["order"] = oslcm::format_order(net, res.order);
    report["time_ms"] = format_double(elapsed);
    report["verified"] = check.mode;
    if (flags.with_profile) append_profile(report, net, oslcm::compute_profile(net, res.order));
    if (value_out) *value_out = res.value;
    if (proven_out) *proven_out = res.proven_optimal;
    return report;
}

int cmd_solve(const solve_flags &flags) {
    const oslcm::two_layer_network net = read_instance(flags.input);
    if (flags.algo == "median") {
        emit_report(run_median(net, flags), flags.format);
        return kExitOk;
    }
    if (flags.algo == "exact") {
        emit_report(run_exact(net, flags, nullptr, nullptr), flags.format);
        return kExitOk;
    }
    // both
    ordered_json median_report = run_median(net, flags);
    std::int64_t exact_value = 0;
    bool proven = false;
    ordered_json exact_report = run_exact(net, flags, &exact_value, &proven);
    std::optional<double> ratio;
    if (proven) {
        const std::int64_t h = median_report["value"].get<std::int64_t>();
        ratio = exact_value > 0 ? static_cast<double>(h) / static_cast<double>(exact_value)
                                : (h == 0 ? 1.0 : std::numeric_limits<double>::infinity());
    }
    if (flags.format == "json") {
        ordered_json combined;
        combined["median"] = std::move(median_report);
        combined["exact"] = std::move(exact_report);
        if (ratio) combined["ratio"] = format_double(*ratio);
        std::cout << combined.dump(2) << "\n";
    } else {
        emit_report(median_report, flags.format);
        std::cout << "\n";
        emit_report(exact_report, flags.format);
        if (ratio) std::cout << "\nratio: " << format_double(*ratio) << "\n";
    }
    return kExitOk;
}

int cmd_decide(const std::string &input, std::int64_t k, std::uint64_t budget_nodes,
               double budget_seconds, const std::string &verify, const std::string &format) {
    const oslcm::two_layer_network net = read_instance(input);
    timer t;
    const oslcm::decide_result res = oslcm::decide_k_planar(net, k, {budget_nodes, budget_seconds});
    const double elapsed = t.ms();

    ordered_json report;
    report["instance"] = oslcm::instance_digest(net);
    report["k"] = k;
    report["nodes"] = res.nodes_explored;
    report["time_ms"] = format_double(elapsed);
    int exit_code = kExitOk;
    switch (res.status) {
        case oslcm::decide_status::yes: {
            const verification check = recount(net, *res.witness, verify);
            if (check.mode != "off" && check.value > k)
                verification_failure("witness exceeds k on recount");
            report["answer"] = "yes";
            report["witness"] = oslcm::format_order(net, *res.witness);
            report["verified"] = check.mode;
            break;
        }
        case oslcm::decide_status::no:
            report["answer"] = "no";
            break;
        case oslcm::decide_status::unknown:
            report["answer"] = "unknown";
            exit_code = kExitUnknown;
            break;
    }
    emit_report(report, format);
    return exit_code;
}

int cmd_eval(const std::string &input, const std::string &order_text, const std::string &order_file,
             bool with_profile, const std::string &verify, const std::string &format) {
    const oslcm::two_layer_network net = read_instance(input);
    std::string text = order_text;
    if (!order_file.empty()) {
        std::ifstream in(order_file);
        if (!in) throw oslcm::validation_error("cannot open order file: " + order_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    if (text.empty()) throw CLI::ValidationError("eval", "provide --order or --order-file");
    const oslcm::y_order order = oslcm::parse_order(net, text);
    const oslcm::crossing_profile profile = oslcm::compute_profile(net, order);

    const verification check = recount(net, order, verify);
    if (check.mode != "off" && check.value != profile.local_crossing_number)
        verification_failure("eval recount mismatch");

    ordered_json report;
    report["instance"] = oslcm::instance_digest(net);
    report["value"] = profile.local_crossing_number;
    report["order"] = oslcm::format_order(net, order);
    report["verified"] = check.mode;
    if (with_profile) append_profile(report, net, profile);
    emit_report(report, format);
    return kExitOk;
}

struct gen_common {
    std::string output;
    std::string names_path;
};

void write_generated(const gen_common &common, const oslcm::two_layer_network &net,
                     const ordered_json *names) {
    write_text(common.output, oslcm::write_instance(net));
    std::string names_path = common.names_path;
    if (names_path.empty() && names != nullptr && !common.output.empty() && common.output != "-")
        names_path = common.output + ".names.json";
    if (!names_path.empty()) {
        if (names == nullptr) throw oslcm::validation_error("this generator has no name map");
        write_text(names_path, names->dump(2) + "\n");
    }
}

int cmd_verify_approx(std::uint64_t count, int max_x, int max_y, int min_deg, int max_deg,
                      std::uint64_t seed, const std::string &output, const std::string &dump_dir) {
    if (max_y > 9) throw CLI::ValidationError("--max-y", "brute-force reference needs max-y <= 9");
    std::ostringstream csv;
    csv << "index,digest,exact,heuristic,ratio\n";
    std::mt19937_64 master(seed);
    std::uint64_t violations = 0;
    for (std::uint64_t index = 0; index < count; ++index) {
        const int x_count = 1 + static_cast<int>(master() % static_cast<std::uint64_t>(max_x));
        const int y_count = 1 + static_cast<int>(master() % static_cast<std::uint64_t>(max_y));
        const std::uint64_t instance_seed = master();
        const int hi = std::min(max_deg, x_count);
        const int lo = std::min(min_deg, hi);
        const oslcm::two_layer_network net =
            oslcm::random_instance(x_count, y_count, {lo, hi}, instance_seed);
        const std::int64_t exact = oslcm::brute_force_optimum(net).value;
        const std::int64_t heuristic =
            oslcm::compute_profile(net, oslcm::heuristic_order(net)).local_crossing_number;
        const double ratio = exact > 0 ? static_cast<double>(heuristic) / static_cast<double>(exact)
                                       : (heuristic == 0 ? 1.0 : std::numeric_limits<double>::infinity());
        csv << index << ',' << oslcm::instance_digest(net) << ',' << exact << ',' << heuristic << ','
            << format_double(ratio) << "\n";
        if (heuristic > 3 * exact) {
            ++violations;
            const std::string path = dump_dir + "/violation_" + std::to_string(index) + ".gr";
            write_text(path, oslcm::write_instance(net));
            std::cerr << "approximation violation on instance " << index << ", dumped to " << path
                      << "\n";
        }
    }
    write_text(output, csv.str());
    return violations == 0 ? kExitOk : kExitVerification;
}

int cmd_bench(int x_count, int y_count, int min_deg, int max_deg, std::uint64_t seed, int repeat,
              const std::string &format) {
    timer t_gen;
    const oslcm::two_layer_network net = oslcm::random_instance(x_count, y_count, {min_deg, max_deg}, seed);
    const double gen_ms = t_gen.ms();

    timer t_heur;
    const oslcm::y_order order = oslcm::heuristic_order(net);
    const double heur_ms = t_heur.ms();

    double best_count_ms = 0.0;
    std::int64_t value = 0;
    for (int r = 0; r < repeat; ++r) {
        timer t_count;
        value = oslcm::compute_profile(net, order).local_crossing_number;
        const double ms = t_count.ms();
        if (r == 0 || ms < best_count_ms) best_count_ms = ms;
    }

    ordered_json report;
    report["x_count"] = net.x_count;
    report["y_count"] = net.y_count;
    report["edges"] = net.edges.size();
    report["generate_ms"] = format_double(gen_ms);
    report["heuristic_ms"] = format_double(heur_ms);
    report["count_fast_ms"] = format_double(best_count_ms);
    report["heuristic_value"] = value;
    emit_report(report, format);
    return kExitOk;
}

std::vector<std::int64_t> parse_int_list(const std::string &text) {
    std::vector<std::int64_t> values;
    std::string cleaned = text;
    for (char &c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::int64_t v = 0;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw oslcm::validation_error("cannot parse integer list: " + text);
    return values;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"one-sided local crossing minimization toolkit"};
    app.require_subcommand(1);

    // gen
    auto *gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    gen_common gen_opts;

    auto *gen_tight = gen->add_subcommand("tightness", "lower-bound family G_k");
    int tight_k = 1;
    gen_tight->add_option("--k", tight_k, "family parameter k >= 1")->required();
    gen_tight->add_option("-o,--output", gen_opts.output, "instance file (default stdout)");
    gen_tight->add_option("--names", gen_opts.names_path, "name map sidecar path");

    auto *gen_hard = gen->add_subcommand("hardness", "3-partition reduction instance");
    std::string hard_s;
    std::string hard_s_file;
    bool hard_strict = false;
    gen_hard->add_option("--s", hard_s, "3n integers, e.g. \"12 13 14 15 17 19\"");
    gen_hard->add_option("--s-file", hard_s_file, "file containing the 3n integers");
    gen_hard->add_flag("--strict", hard_strict, "require distinct elements with T/4 < s < T/2");
    gen_hard->add_option("-o,--output", gen_opts.output, "instance file (default stdout)");
    gen_hard->add_option("--names", gen_opts.names_path, "name map sidecar path");

    auto *gen_rand = gen->add_subcommand("random", "seeded random instance");
    int rand_x = 10;
    int rand_y = 5;
    int rand_min_deg = 1;
    int rand_max_deg = 4;
    std::uint64_t rand_seed = 1;
    gen_rand->add_option("--x", rand_x, "x_count")->required();
    gen_rand->add_option("--y", rand_y, "y_count")->required();
    gen_rand->add_option("--min-deg", rand_min_deg, "minimum degree (default 1)");
    gen_rand->add_option("--max-deg", rand_max_deg, "maximum degree");
    gen_rand->add_option("--seed", rand_seed, "random seed");
    gen_rand->add_option("-o,--output", gen_opts.output, "instance file (default stdout)");

    // solve
    solve_flags solve_opts;
    auto *solve = app.add_subcommand("solve", "minimize the local crossing number");
    solve->add_option("-i,--input", solve_opts.input, "instance file ('-' for stdin)")->required();
    solve->add_option("--algo", solve_opts.algo, "median | exact | both (default both)")
        ->check(CLI::IsMember({"median", "exact", "both"}));
    solve->add_option("--rule", solve_opts.rule, "heuristicA | floor | ceil")
        ->check(CLI::IsMember({"heuristicA", "floor", "ceil"}));
    solve->add_option("--tie-break", solve_opts.tie, "paper | ew-odd-first")
        ->check(CLI::IsMember({"paper", "ew-odd-first"}));
    solve->add_option("--budget-nodes", solve_opts.budget_nodes, "node budget for exact search");
    solve->add_option("--budget-seconds", solve_opts.budget_seconds, "time budget for exact search");
    solve->add_flag("--profile", solve_opts.with_profile, "include per-edge crossing counts");
    solve->add_option("--format", solve_opts.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_option("--verify", solve_opts.verify, "auto | oracle | fast | off")
        ->check(CLI::IsMember({"auto", "oracle", "fast", "off"}));

    // decide
    auto *decide = app.add_subcommand("decide", "one-sided k-planarity");
    std::string decide_input;
    std::int64_t decide_k = 0;
    std::uint64_t decide_nodes = 0;
    double decide_seconds = 0.0;
    std::string decide_verify{"auto"};
    std::string decide_format{"text"};
    decide->add_option("-i,--input", decide_input, "instance file ('-' for stdin)")->required();
    decide->add_option("--k", decide_k, "crossing cap per edge")->required();
    decide->add_option("--budget-nodes", decide_nodes, "node budget");
    decide->add_option("--budget-seconds", decide_seconds, "time budget");
    decide->add_option("--verify", decide_verify, "auto | oracle | fast | off")
        ->check(CLI::IsMember({"auto", "oracle", "fast", "off"}));
    decide->add_option("--format", decide_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // eval
    auto *eval = app.add_subcommand("eval", "evaluate a given Y order");
    std::string eval_input;
    std::string eval_order;
    std::string eval_order_file;
    bool eval_profile = false;
    std::string eval_verify{"auto"};
    std::string eval_format{"text"};
    eval->add_option("-i,--input", eval_input, "instance file ('-' for stdin)")->required();
    eval->add_option("--order", eval_order, "Y order (instance labels or raw ids)");
    eval->add_option("--order-file", eval_order_file, "file containing the order");
    eval->add_flag("--profile", eval_profile, "include per-edge crossing counts");
    eval->add_option("--verify", eval_verify, "auto | oracle | fast | off")
        ->check(CLI::IsMember({"auto", "oracle", "fast", "off"}));
    eval->add_option("--format", eval_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify-approx
    auto *vapprox = app.add_subcommand("verify-approx", "batch heuristic-vs-exact ratio check");
    std::uint64_t va_count = 100;
    int va_max_x = 12;
    int va_max_y = 7;
    int va_min_deg = 1;
    int va_max_deg = 6;
    std::uint64_t va_seed = 1;
    std::string va_output;
    std::string va_dump{"."};
    vapprox->add_option("--count", va_count, "number of instances")->required();
    vapprox->add_option("--max-x", va_max_x, "maximum x_count (default 12)");
    vapprox->add_option("--max-y", va_max_y, "maximum y_count (default 7, cap 9)");
    vapprox->add_option("--min-deg", va_min_deg, "minimum degree (default 1)");
    vapprox->add_option("--max-deg", va_max_deg, "maximum degree (default 6)");
    vapprox->add_option("--seed", va_seed, "random seed");
    vapprox->add_option("-o,--output", va_output, "CSV output (default stdout)");
    vapprox->add_option("--dump-dir", va_dump, "directory for violation dumps");

    // render
    auto *render = app.add_subcommand("render", "render a drawing as SVG");
    std::string render_input;
    std::string render_order;
    std::string render_order_file;
    std::string render_rule{"heuristicA"};
    std::string render_tie{"paper"};
    std::string render_output;
    render->add_option("-i,--input", render_input, "instance file ('-' for stdin)")->required();
    render->add_option("--order", render_order, "Y order (default: median heuristic)");
    render->add_option("--order-file", render_order_file, "file containing the order");
    render->add_option("--rule", render_rule, "heuristicA | floor | ceil")
        ->check(CLI::IsMember({"heuristicA", "floor", "ceil"}));
    render->add_option("--tie-break", render_tie, "paper | ew-odd-first")
        ->check(CLI::IsMember({"paper", "ew-odd-first"}));
    render->add_option("-o,--output", render_output, "SVG file (default stdout)");

    // bench
    auto *bench = app.add_subcommand("bench", "time the fast counter on a random instance");
    int bench_x = 2000;
    int bench_y = 20000;
    int bench_min_deg = 45;
    int bench_max_deg = 55;
    std::uint64_t bench_seed = 1;
    int bench_repeat = 3;
    std::string bench_format{"text"};
    bench->add_option("--x", bench_x, "x_count (default 2000)");
    bench->add_option("--y", bench_y, "y_count (default 20000)");
    bench->add_option("--min-deg", bench_min_deg, "minimum degree (default 45)");
    bench->add_option("--max-deg", bench_max_deg, "maximum degree (default 55)");
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("--repeat", bench_repeat, "count repetitions (default 3)");
    bench->add_option("--format", bench_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);

        if (gen_tight->parsed()) {
            const oslcm::tightness_artifacts art = oslcm::tightness_instance(tight_k);
            ordered_json names;
            names["k"] = art.k;
            names.update(oslcm::names_json(art.names));
            write_generated(gen_opts, art.network, &names);
            return kExitOk;
        }
        if (gen_hard->parsed()) {
            std::string text = hard_s;
            if (!hard_s_file.empty()) {
                std::ifstream in(hard_s_file);
                if (!in) throw oslcm::validation_error("cannot open --s-file: " + hard_s_file);
                std::stringstream buffer;
                buffer << in.rdbuf();
                text = buffer.str();
            }
            if (text.empty()) throw CLI::ValidationError("gen hardness", "provide --s or --s-file");
            const oslcm::three_partition_instance inst =
                oslcm::make_three_partition(parse_int_list(text));
            const oslcm::reduction_artifacts art = oslcm::hardness_instance(inst, hard_strict);
            if (!art.strict && !hard_strict)
                std::cerr << "note: instance violates the strict 3-partition restrictions\n";
            ordered_json names;
            names["n"] = art.n;
            names["T"] = art.t;
            names["k"] = art.k;
            names["strict"] = art.strict;
            names.update(oslcm::names_json(art.names));
            write_generated(gen_opts, art.network, &names);
            return kExitOk;
        }
        if (gen_rand->parsed()) {
            const oslcm::two_layer_network net =
                oslcm::random_instance(rand_x, rand_y, {rand_min_deg, rand_max_deg}, rand_seed);
            write_generated(gen_opts, net, nullptr);
            return kExitOk;
        }
        if (solve->parsed()) return cmd_solve(solve_opts);
        if (decide->parsed())
            return cmd_decide(decide_input, decide_k, decide_nodes, decide_seconds, decide_verify,
                              decide_format);
        if (eval->parsed())
            return cmd_eval(eval_input, eval_order, eval_order_file, eval_profile, eval_verify,
                            eval_format);
        if (vapprox->parsed())
            return cmd_verify_approx(va_count, va_max_x, va_max_y, va_min_deg, va_max_deg, va_seed,
                                     va_output, va_dump);
        if (render->parsed()) {
            const oslcm::two_layer_network net = read_instance(render_input);
            oslcm::y_order order;
            if (!render_order.empty() || !render_order_file.empty()) {
                std::string text = render_order;
                if (!render_order_file.empty()) {
                    std::ifstream in(render_order_file);
                    if (!in) throw oslcm::validation_error("cannot open order file: " + render_order_file);
                    std::stringstream buffer;
                    buffer << in.rdbuf();
                    text = buffer.str();
                }
                order = oslcm::parse_order(net, text);
            } else {
                order = oslcm::heuristic_order(net, parse_rule(render_rule), parse_tie_break(render_tie));
            }
            write_text(render_output, oslcm::render_svg(net, order));
            return kExitOk;
        }
        if (bench->parsed())
            return cmd_bench(bench_x, bench_y, bench_min_deg, bench_max_deg, bench_seed,
                             bench_repeat, bench_format);
        return kExitUsage;
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    } catch (const oslcm::validation_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
