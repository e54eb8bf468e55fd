#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "critline/counterexample.hpp"
#include "critline/counting.hpp"
#include "critline/io.hpp"
#include "critline/topology.hpp"

namespace {

using critline::cplx;

std::string precision_profile_name() {
    const char* p = std::getenv("CRITLINE_PRECISION_PROFILE");
    return p ? std::string(p) : std::string();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

cplx plain_function(const std::string& name, cplx s) {
    if (name == "xi1") return critline::xi1(s);
    if (name == "t_plus") return critline::t_plus(s);
    if (name == "a_func") return critline::a_func(s);
    if (name == "d_func") return critline::d_func(s);
    if (name == "f6") return critline::f6(s);
    throw critline::DomainError("unknown function: " + name);
}

nlohmann::json evaluation_json(const critline::EvaluationResult& r) {
    return {{"value", {r.value.real(), r.value.imag()}},
            {"modulus", r.modulus},
            {"phase", r.phase},
            {"quadrant", r.quadrant},
            {"near_singularity", r.near_singularity}};
}

struct GridOptions {
    std::string fn = "delta6";
    std::string mode = "plain";
    bool both = false;
    std::vector<double> sigma, t;
    int nx = 0, nt = 0;
    std::string s0, s1, s2;
    std::string out;
};

void run_grid(const GridOptions& o) {
    auto start = std::chrono::steady_clock::now();
    critline::Rectangle region{o.sigma[0], o.sigma[1], o.t[0], o.t[1]};
    std::function<critline::EvaluationResult(cplx)> fn;
    if (o.mode == "modified") {
        if (o.fn != "delta6")
            throw critline::DomainError("grid: --mode modified applies to --fn delta6 only");
        if (o.s0.empty() || o.s1.empty() || o.s2.empty())
            throw critline::DomainError("grid: --mode modified needs --s0 --s1 --s2");
        critline::ModificationParams p = critline::make_modification(
            critline::parse_complex(o.s0), critline::parse_complex(o.s1),
            critline::parse_complex(o.s2));
        critline::ModificationMode mode = o.both ? critline::ModificationMode::Both
                                                 : critline::ModificationMode::DenominatorOnly;
        fn = [p, mode](cplx s) { return critline::modified_delta6(s, p, mode); };
    } else if (o.fn == "delta6") {
        fn = [](cplx s) { return critline::delta6(s); };
    } else {
        std::string name = o.fn;
        fn = [name](cplx s) {
            return critline::make_evaluation_result(plain_function(name, s), false);
        };
    }
    std::vector<critline::FieldSample> samples =
        critline::export_field_grid(region, o.nx, o.nt, fn);
    std::string csv = critline::field_csv(samples);

    critline::RunManifest m;
    m.command = "grid";
    m.params = {{"fn", o.fn},   {"mode", o.mode}, {"both", o.both}, {"sigma", o.sigma},
                {"t", o.t},     {"nx", o.nx},     {"nt", o.nt},     {"s0", o.s0},
                {"s1", o.s1},   {"s2", o.s2}};
    m.precision_profile = precision_profile_name();
    m.duration_seconds = seconds_since(start);
    critline::write_output_dir(o.out, m, {{"grid.csv", csv}});
    std::cout << "wrote " << samples.size() << " samples to " << o.out << "/grid.csv\n";
}

struct TraceOptions {
    std::vector<int> n;
    std::string kind = "phase-zero";
    double sigma_start = 6.0;
    double sigma_stop = 0.5;
    int max_steps = 100000;
    std::string out;
};

void run_trace(const TraceOptions& o) {
    auto start = std::chrono::steady_clock::now();
    std::string jsonl;
    std::map<std::string, int> tally;
    int total = 0, failed = 0;
    for (int n = o.n[0]; n <= o.n[1]; ++n) {
        ++total;
        try {
            critline::LineSeed seed = o.kind == "phase-zero"
                                          ? critline::seed_phase_zero(n, o.sigma_start)
                                          : critline::seed_amplitude_unity(n, o.sigma_start);
            critline::TracedLine line = critline::trace(seed, o.sigma_stop, o.max_steps);
            nlohmann::json j = critline::traced_line_json(line);
            j["n"] = n;
            jsonl += j.dump() + "\n";
            ++tally[critline::to_string(line.termination)];
        } catch (const critline::Error& e) {
            ++failed;
            nlohmann::json j{{"n", n}, {"error", e.what()}};
            jsonl += j.dump() + "\n";
            ++tally["Failed"];
        }
    }
    critline::RunManifest m;
    m.command = "trace";
    m.params = {{"n", o.n},
                {"kind", o.kind},
                {"sigma_start", o.sigma_start},
                {"sigma_stop", o.sigma_stop},
                {"max_steps", o.max_steps}};
    m.precision_profile = precision_profile_name();
    m.duration_seconds = seconds_since(start);
    critline::write_output_dir(o.out, m, {{"lines.jsonl", jsonl}});
    std::ostringstream summary;
    summary << "traced " << total << " seeds:";
    for (const auto& [k, v] : tally) summary << ' ' << k << '=' << v;
    std::cout << summary.str() << "\n";
    if (total > 0 && failed == total)
        throw critline::SeedError("trace: all seeds failed");
}

void run_scan(const std::vector<double>& t, const std::string& out) {
    auto start = std::chrono::steady_clock::now();
    std::vector<critline::CriticalLineEvent> events = critline::merge_events(
        critline::find_zeros_T_plus(t[0], t[1]), critline::find_poles_zeta(t[0], t[1]));
    std::string pattern;
    for (const critline::CriticalLineEvent& e : events)
        pattern += e.kind == critline::EventKind::Zero ? 'Z' : 'P';
    std::cout << "events: " << events.size() << " pattern: " << pattern << "\n";
    if (out.empty()) return;
    critline::RunManifest m;
    m.command = "scan";
    m.params = {{"t", t}};
    m.precision_profile = precision_profile_name();
    m.duration_seconds = seconds_since(start);
    critline::write_output_dir(out, m, {{"events.csv", critline::events_csv(events)}});
}

void run_balance(const std::string& traces_path, const std::string& out) {
    auto start = std::chrono::steady_clock::now();
    std::string text = critline::read_text_file(traces_path);
    std::vector<critline::TracedLine> lines;
    std::istringstream in(text);
    std::string row;
    while (std::getline(in, row)) {
        if (row.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(row);
        } catch (const nlohmann::json::exception& e) {
            throw critline::IoError(std::string("balance: bad JSONL row: ") + e.what());
        }
        if (j.contains("error")) continue;
        critline::TracedLine line = critline::traced_line_from_json(j);
        if (line.reached) lines.push_back(std::move(line));
    }
    if (lines.size() < 2)
        throw critline::DomainError("balance: need at least two lines reaching the critical line");
    std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
        return a.intersection_t < b.intersection_t;
    });
    nlohmann::json reports = nlohmann::json::array();
    int balanced = 0;
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        critline::CountingReport rep = critline::balance_report(lines[i], lines[i + 1]);
        balanced += rep.balanced ? 1 : 0;
        reports.push_back(critline::counting_report_json(rep));
    }
    std::cout << "pairs: " << reports.size() << " balanced: " << balanced << "\n";
    if (out.empty()) return;
    critline::RunManifest m;
    m.command = "balance";
    m.params = {{"traces", traces_path}};
    m.precision_profile = precision_profile_name();
    m.duration_seconds = seconds_since(start);
    critline::write_output_dir(out, m, {{"balance.json", reports.dump(2) + "\n"}});
}

void run_distribution(double t_max, const std::string& out) {
    auto start = std::chrono::steady_clock::now();
    std::vector<critline::DistributionRow> rows = critline::distribution_comparison(t_max);
    if (!rows.empty()) {
        const critline::DistributionRow& last = rows.back();
        std::cout << "rows: " << rows.size() << " final: t=" << last.t
                  << " zeros=" << last.count_T_plus << " poles=" << last.count_zeta_poles
                  << "\n";
    }
    if (out.empty()) return;
    critline::RunManifest m;
    m.command = "distribution";
    m.params = {{"t_max", t_max}};
    m.precision_profile = precision_profile_name();
    m.duration_seconds = seconds_since(start);
    critline::write_output_dir(out, m,
                               {{"distribution.csv", critline::distribution_csv(rows)}});
}

struct CounterexampleOptions {
    bool check_expansion = false;
    std::string s0, s1, s2;
    std::string out;
};

void run_counterexample(const CounterexampleOptions& o) {
    auto start = std::chrono::steady_clock::now();
    if (!o.check_expansion)
        throw critline::DomainError("counterexample: pass --check-expansion");
    critline::ModificationParams p = critline::make_modification(
        critline::parse_complex(o.s0), critline::parse_complex(o.s1),
        critline::parse_complex(o.s2));
    critline::RatioExpansion fit = critline::ratio_expansion_check(p);
    critline::ModificationParams pn = critline::nulled_params(p);
    critline::RatioExpansion nulled_fit = critline::ratio_expansion_check(pn);
    double crossover = critline::incompatibility_crossover(p);
    nlohmann::json j = {
        {"params",
         {{"s0", {p.s0.real(), p.s0.imag()}},
          {"s1", {p.s1.real(), p.s1.imag()}},
          {"s2", {p.s2.real(), p.s2.imag()}}}},
        {"fit", critline::ratio_expansion_json(fit)},
        {"nulled", {{"t0", pn.t0()}, {"fit", critline::ratio_expansion_json(nulled_fit)}}},
        {"crossover_sigma", crossover}};
    std::cout << j.dump(2) << "\n";
    if (o.out.empty()) return;
    critline::RunManifest m;
    m.command = "counterexample";
    m.params = {{"s0", o.s0}, {"s1", o.s1}, {"s2", o.s2}};
    m.precision_profile = precision_profile_name();
    m.duration_seconds = seconds_since(start);
    critline::write_output_dir(o.out, m, {{"counterexample.json", j.dump(2) + "\n"}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification toolkit for the balanced quotient delta6"};
    app.require_subcommand(1);
    const std::vector<std::string> fn_names{"xi1", "t_plus", "a_func",
                                            "d_func", "delta6", "f6"};

    auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
    std::string eval_fn = "delta6", eval_s;
    eval->add_option("--fn", eval_fn)->check(CLI::IsMember(fn_names));
    eval->add_option("--s", eval_s, "complex literal a+bi")->required();
    eval->callback([&] {
        cplx s = critline::parse_complex(eval_s);
        nlohmann::json j;
        if (eval_fn == "delta6") {
            j = evaluation_json(critline::delta6(s));
            j["forms_residual"] = critline::delta6_forms_residual(s);
        } else {
            j = evaluation_json(critline::make_evaluation_result(plain_function(eval_fn, s),
                                                                 false));
        }
        std::cout << j.dump(2) << "\n";
    });

    auto* grid = app.add_subcommand("grid", "export a field grid as CSV");
    GridOptions go;
    grid->add_option("--fn", go.fn)->check(CLI::IsMember(fn_names));
    grid->add_option("--mode", go.mode)->check(CLI::IsMember({"plain", "modified"}));
    grid->add_flag("--both", go.both, "modified mode: include the numerator quartic");
    grid->add_option("--sigma", go.sigma)->expected(2)->required();
    grid->add_option("--t", go.t)->expected(2)->required();
    grid->add_option("--nx", go.nx)->required()->check(CLI::PositiveNumber);
    grid->add_option("--nt", go.nt)->required()->check(CLI::PositiveNumber);
    grid->add_option("--s0", go.s0);
    grid->add_option("--s1", go.s1);
    grid->add_option("--s2", go.s2);
    grid->add_option("--out", go.out)->required();
    grid->callback([&] { run_grid(go); });

    auto* trace = app.add_subcommand("trace", "trace level lines to the critical line");
    TraceOptions to;
    trace->add_option("--n", to.n)->expected(2)->required();
    trace->add_option("--kind", to.kind)
        ->check(CLI::IsMember({"phase-zero", "amplitude-unity"}));
    trace->add_option("--sigma-start", to.sigma_start);
    trace->add_option("--sigma-stop", to.sigma_stop);
    trace->add_option("--max-steps", to.max_steps)->check(CLI::PositiveNumber);
    trace->add_option("--out", to.out)->required();
    trace->callback([&] { run_trace(to); });

    auto* scan = app.add_subcommand("scan", "census critical-line events");
    std::vector<double> scan_t;
    std::string scan_out;
    scan->add_option("--t", scan_t)->expected(2)->required();
    scan->add_option("--out", scan_out);
    scan->callback([&] { run_scan(scan_t, scan_out); });

    auto* balance = app.add_subcommand("balance", "argument-principle balance of traced lines");
    std::string balance_traces, balance_out;
    balance->add_option("--traces", balance_traces)->required();
    balance->add_option("--out", balance_out);
    balance->callback([&] { run_balance(balance_traces, balance_out); });

    auto* distribution = app.add_subcommand("distribution", "cumulative event counts vs main term");
    double dist_t_max = 100.0;
    std::string dist_out;
    distribution->add_option("--t-max", dist_t_max)->required();
    distribution->add_option("--out", dist_out);
    distribution->callback([&] { run_distribution(dist_t_max, dist_out); });

    auto* cx = app.add_subcommand("counterexample", "quartic modification lab");
    CounterexampleOptions co;
    cx->add_flag("--check-expansion", co.check_expansion);
    cx->add_option("--s0", co.s0)->required();
    cx->add_option("--s1", co.s1)->required();
    cx->add_option("--s2", co.s2)->required();
    cx->add_option("--out", co.out);
    cx->callback([&] { run_counterexample(co); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const critline::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
    return 0;
}
