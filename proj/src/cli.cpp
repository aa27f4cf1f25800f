#include "alphadom/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "alphadom/bounds.hpp"
#include "alphadom/construct.hpp"
#include "alphadom/domination.hpp"
#include "alphadom/exact.hpp"
#include "alphadom/graph.hpp"

namespace alphadom::cli {

namespace {

std::string fmt(double v, const char* spec = "%.9f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

long long to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid " + what + ": '" + s + "'");
    }
}

// Compact generator specs: cycle:5, path:7, complete:4, petersen,
// circulant:2001:1-500, gnp:30:0.2:7, regular:50:3:7. Circulant offsets are
// comma-separated values or inclusive ranges ("1-3,5").
Graph graph_from_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& name = parts[0];
    auto want = [&](std::size_t k) {
        if (parts.size() != k + 1)
            throw std::invalid_argument("generator '" + name + "' takes " + std::to_string(k) +
                                        " parameter(s), got spec '" + spec + "'");
    };
    if (name == "cycle") { want(1); return gen_cycle(static_cast<int>(to_int(parts[1], "n"))); }
    if (name == "path") { want(1); return gen_path(static_cast<int>(to_int(parts[1], "n"))); }
    if (name == "complete") { want(1); return gen_complete(static_cast<int>(to_int(parts[1], "n"))); }
    if (name == "petersen") { want(0); return gen_petersen(); }
    if (name == "circulant") {
        want(2);
        int n = static_cast<int>(to_int(parts[1], "n"));
        std::vector<int> offsets;
        for (const auto& item : split(parts[2], ',')) {
            auto dash = item.find('-');
            if (dash == std::string::npos) {
                offsets.push_back(static_cast<int>(to_int(item, "offset")));
            } else {
                long long lo = to_int(item.substr(0, dash), "offset range");
                long long hi = to_int(item.substr(dash + 1), "offset range");
                if (lo > hi) throw std::invalid_argument("empty offset range '" + item + "'");
                for (long long s = lo; s <= hi; ++s) offsets.push_back(static_cast<int>(s));
            }
        }
        return gen_circulant(n, offsets);
    }
    if (name == "gnp") {
        want(3);
        int n = static_cast<int>(to_int(parts[1], "n"));
        double p = 0;
        try {
            std::size_t used = 0;
            p = std::stod(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid gnp probability '" + parts[2] + "'");
        }
        return gen_gnp(n, p, static_cast<std::uint64_t>(to_int(parts[3], "seed")));
    }
    if (name == "regular") {
        want(3);
        return gen_random_regular(static_cast<int>(to_int(parts[1], "n")),
                                  static_cast<int>(to_int(parts[2], "d")),
                                  static_cast<std::uint64_t>(to_int(parts[3], "seed")));
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

struct GraphSource {
    std::string in_path;
    std::string gen_spec;
    int base = 0;
    std::string label;  // for CSV rows

    void add_flags(CLI::App* cmd) {
        auto* in = cmd->add_option("--in", in_path, "graph file (DIMACS or edge list, auto-detected)");
        auto* gen = cmd->add_option("--gen", gen_spec, "generator spec, e.g. cycle:5 or gnp:30:0.2:7");
        cmd->add_option("--base", base, "edge-list vertex base (0 or 1)")->check(CLI::Range(0, 1));
        in->excludes(gen);
    }

    Graph load(std::ostream& err) {
        Graph g = [&] {
            if (!gen_spec.empty()) {
                label = gen_spec;
                return graph_from_spec(gen_spec);
            }
            if (in_path.empty()) throw std::invalid_argument("need --in <path> or --gen <spec>");
            std::ifstream f(in_path);
            if (!f) throw std::invalid_argument("cannot open '" + in_path + "'");
            std::stringstream buf;
            buf << f.rdbuf();
            label = in_path;
            return base == 0 ? parse_auto(buf.str()) : parse_edge_list(buf.str(), 1);
        }();
        if (g.duplicates_collapsed() > 0)
            err << "warning: collapsed " << g.duplicates_collapsed() << " duplicate edge(s)\n";
        return g;
    }
};

struct OutputOpts {
    std::string format = "text";
    std::string out_path;

    void add_flags(CLI::App* cmd, bool with_csv = true) {
        auto check = with_csv ? CLI::IsMember({"text", "json", "csv"})
                              : CLI::IsMember({"text", "json"});
        cmd->add_option("--format", format, "output format")->check(check);
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    }

    void emit(const std::string& text, std::ostream& out) const {
        if (out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
        f << text;
    }
};

Mode make_mode(const std::string& mode_name, const std::string& alpha_str, int k) {
    if (mode_name == "dom") return Mode::dom();
    if (mode_name == "kdom") return Mode::k_dom(k);
    if (mode_name == "tuple") return Mode::k_tuple(k);
    if (alpha_str.empty())
        throw std::invalid_argument("mode '" + mode_name + "' needs --alpha p/q");
    Alpha a = Alpha::parse(alpha_str);
    if (mode_name == "alpha") return Mode::alpha_dom(a);
    if (mode_name == "rate") return Mode::alpha_rate(a);
    throw std::invalid_argument("unknown mode '" + mode_name + "'");
}

const std::vector<std::string>& sweep_alphas() {
    static const std::vector<std::string> grid = {"1/10", "1/4", "1/2", "3/4", "1/1"};
    return grid;
}

// --- renderers --------------------------------------------------------------

std::string render_bounds_text(const BoundReport& rep, const std::string& label) {
    std::ostringstream o;
    o << "graph " << label << ": n=" << rep.n << " m=" << rep.m << " delta=" << rep.delta
      << " Delta=" << rep.Delta << " alpha=" << rep.alpha << " delta_hat=" << rep.dhat << "\n";
    o << "log alpha-degree: open=" << fmt(static_cast<double>(rep.log_open))
      << " closed=" << fmt(static_cast<double>(rep.log_closed)) << "\n";
    for (const auto& e : rep.entries) {
        char line[160];
        if (e.applicable)
            std::snprintf(line, sizeof(line), "  %-20s fraction=%-15s absolute=%s\n",
                          e.name.c_str(), fmt(static_cast<double>(e.fraction)).c_str(),
                          fmt(static_cast<double>(e.absolute), "%.6f").c_str());
        else
            std::snprintf(line, sizeof(line), "  %-20s not applicable: %s\n", e.name.c_str(),
                          e.note.c_str());
        o << line;
    }
    o << "aggregates: max_lower=" << fmt(static_cast<double>(rep.max_lower), "%.6f")
      << " min_upper=" << fmt(static_cast<double>(rep.min_upper), "%.6f")
      << " min_upper_rate=" << fmt(static_cast<double>(rep.min_upper_rate), "%.6f") << "\n";
    return o.str();
}

std::string render_verify_text(const VerifyReport& rep) {
    std::ostringstream o;
    o << (rep.valid ? "valid" : "invalid") << "\n";
    for (const auto& [v, d] : rep.deficiencies)
        o << "  vertex " << v << ": required " << d.required << ", achieved " << d.achieved
          << "\n";
    return o.str();
}

std::string render_set_line(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string render_outcome_text(const TrialOutcome& out) {
    std::ostringstream o;
    o << "size=" << out.size() << "\n";
    o << "p_used=" << fmt(out.p_used, "%.12g") << "\n";
    o << "seed=" << out.seed << "\n";
    o << "D=" << render_set_line(out.dominating) << "\n";
    o << "A=" << render_set_line(out.sampled) << "\n";
    o << "B=" << render_set_line(out.repaired) << "\n";
    return o.str();
}

// --- subcommand bodies --------------------------------------------------------

int run_bounds(GraphSource& src, OutputOpts& output, const std::string& alpha_str,
               std::ostream& out, std::ostream& err) {
    Graph g = src.load(err);
    BoundReport rep = bound_report(g, Alpha::parse(alpha_str));
    if (output.format == "json")
        output.emit(rep.to_json().dump(2) + "\n", out);
    else if (output.format == "csv")
        output.emit(BoundReport::csv_header() + "\n" + rep.csv_row(src.label) + "\n", out);
    else
        output.emit(render_bounds_text(rep, src.label), out);
    return 0;
}

int run_verify(GraphSource& src, OutputOpts& output, const std::string& set_path,
               const std::string& mode_name, const std::string& alpha_str, int k,
               std::ostream& out, std::ostream& err) {
    Graph g = src.load(err);
    std::ifstream f(set_path);
    if (!f) throw std::invalid_argument("cannot open set file '" + set_path + "'");
    std::vector<int> xs;
    long long v = 0;
    while (f >> v) xs.push_back(static_cast<int>(v));
    if (!f.eof()) throw std::invalid_argument("set file must contain whitespace-separated integers");

    VerifyReport rep = verify(g, xs, make_mode(mode_name, alpha_str, k));
    if (output.format == "json")
        output.emit(rep.to_json().dump(2) + "\n", out);
    else
        output.emit(render_verify_text(rep), out);
    return rep.valid ? 0 : 2;
}

int run_construct(GraphSource& src, OutputOpts& output, const std::string& alpha_str,
                  const std::string& mode_name, const ConstructionParams& params,
                  bool derandomize, bool greedy_repair, std::ostream& out, std::ostream& err) {
    Graph g = src.load(err);
    Alpha alpha = Alpha::parse(alpha_str);

    if (derandomize) {
        if (mode_name != "alpha")
            throw std::invalid_argument("--derandomize supports --mode alpha only");
        std::vector<int> d = derandomize_alpha(g, alpha);
        BoundValue p = optimal_p(BoundInputs::from(g, alpha));
        double p_used = p.applicable ? static_cast<double>(p.value) : 0.0;
        if (output.format == "json") {
            nlohmann::ordered_json j;
            j["size"] = d.size();
            j["p_used"] = p_used;
            j["method"] = "derandomized";
            j["D"] = d;
            output.emit(j.dump(2) + "\n", out);
        } else {
            std::ostringstream o;
            o << "size=" << d.size() << "\n"
              << "p_used=" << fmt(p_used, "%.12g") << "\n"
              << "method=derandomized\n"
              << "D=" << render_set_line(d) << "\n";
            output.emit(o.str(), out);
        }
        return 0;
    }

    Mode mode = mode_name == "rate" ? Mode::alpha_rate(alpha) : Mode::alpha_dom(alpha);
    TrialOutcome outcome = best_of_trials(
        g, mode, params, greedy_repair ? RateRepair::Greedy : RateRepair::ProofOrder);
    if (output.format == "json")
        output.emit(outcome.to_json().dump(2) + "\n", out);
    else
        output.emit(render_outcome_text(outcome), out);
    return 0;
}

int run_exact(GraphSource& src, OutputOpts& output, const std::string& mode_name,
              const std::string& alpha_str, int k, std::ostream& out, std::ostream& err) {
    Graph g = src.load(err);
    ExactResult res = exact_number(g, make_mode(mode_name, alpha_str, k));
    if (output.format == "json") {
        output.emit(res.to_json().dump(2) + "\n", out);
    } else {
        std::ostringstream o;
        o << "mode=" << res.mode.to_string() << "\n";
        o << "value=" << res.value << "\n";
        o << "witness=" << render_set_line(res.witness) << "\n";
        o << "nodes_explored=" << res.nodes_explored << "\n";
        output.emit(o.str(), out);
    }
    return 0;
}

int run_experiment(const std::string& name, GraphSource& src, OutputOpts& output,
                   const std::string& family, int n_from, int n_to, int step,
                   const std::string& alpha_str, std::ostream& out, std::ostream& err) {
    std::ostringstream o;
    int code = 0;

    if (name == "paper-example") {
        std::vector<int> offsets(500);
        for (int i = 0; i < 500; ++i) offsets[i] = i + 1;
        Graph g = gen_circulant(2001, offsets);
        BoundReport rep = bound_report(g, Alpha(1, 10));
        double cr = static_cast<double>(rep.find("cr_alpha")->fraction);
        double dunbar = static_cast<double>(rep.find("dunbar_degree_upper")->fraction);
        bool cr_ok = cr < 0.305;
        bool dunbar_ok = dunbar < 0.527;
        o << "graph,n,alpha,cr_alpha,dunbar_degree_upper,cr_alpha_below_0.305,"
             "dunbar_upper_below_0.527\n";
        o << "circulant:2001:1-500," << g.n() << ",1/10," << fmt(cr) << "," << fmt(dunbar) << ","
          << (cr_ok ? "yes" : "no") << "," << (dunbar_ok ? "yes" : "no") << "\n";
        code = (cr_ok && dunbar_ok) ? 0 : 2;
    } else if (name == "alpha-sweep") {
        Graph g = src.load(err);
        o << BoundReport::csv_header() << ",gamma_alpha,gamma_rate\n";
        for (const auto& a_str : sweep_alphas()) {
            Alpha a = Alpha::parse(a_str);
            BoundReport rep = bound_report(g, a);
            std::string row = rep.csv_row(src.label);
            if (g.n() <= 16) {
                row += ',' + std::to_string(exact_number(g, Mode::alpha_dom(a)).value);
                row += ',' + std::to_string(exact_number(g, Mode::alpha_rate(a)).value);
            } else {
                row += ",NA,NA";
            }
            o << row << "\n";
        }
    } else if (name == "family-sweep") {
        if (n_from < 1 || n_to < n_from || step < 1)
            throw std::invalid_argument("family-sweep needs 1 <= --n-from <= --n-to and --step >= 1");
        Alpha a = Alpha::parse(alpha_str);
        o << BoundReport::csv_header() << "\n";
        for (int n = n_from; n <= n_to; n += step) {
            std::string spec = family + ":" + std::to_string(n);
            o << bound_report(graph_from_spec(spec), a).csv_row(spec) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown experiment '" + name +
                                    "' (try paper-example, alpha-sweep, family-sweep)");
    }

    output.emit(o.str(), out);
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"alphadom: alpha-domination bounds, constructions and exact values"};
    app.require_subcommand(1);

    GraphSource src;
    OutputOpts output;
    std::string alpha_str, mode_name = "dom", set_path, experiment_name;
    std::string family = "cycle";
    int k = 1, n_from = 3, n_to = 12, step = 1;
    ConstructionParams params;
    std::string p_rule = "thm";
    std::optional<double> p_override;
    bool derandomize = false, greedy_repair = false;
    int code = 0;

    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every bound for (graph, alpha)");
    src.add_flags(bounds_cmd);
    output.add_flags(bounds_cmd);
    bounds_cmd->add_option("--alpha", alpha_str, "alpha as a rational p/q")->required();
    bounds_cmd->callback([&] { code = run_bounds(src, output, alpha_str, out, err); });

    auto* verify_cmd = app.add_subcommand("verify", "check a vertex set against a mode");
    src.add_flags(verify_cmd);
    output.add_flags(verify_cmd, false);
    verify_cmd->add_option("--set", set_path, "file of whitespace-separated vertex indices")
        ->required();
    verify_cmd->add_option("--mode", mode_name, "dom|kdom|tuple|alpha|rate")
        ->check(CLI::IsMember({"dom", "kdom", "tuple", "alpha", "rate"}));
    verify_cmd->add_option("--alpha", alpha_str, "alpha as a rational p/q");
    verify_cmd->add_option("--k", k, "k for kdom/tuple modes");
    verify_cmd->callback(
        [&] { code = run_verify(src, output, set_path, mode_name, alpha_str, k, out, err); });

    auto* construct_cmd =
        app.add_subcommand("construct", "randomized or derandomized set construction");
    src.add_flags(construct_cmd);
    output.add_flags(construct_cmd, false);
    construct_cmd->add_option("--alpha", alpha_str, "alpha as a rational p/q")->required();
    std::string cmode = "alpha";
    construct_cmd->add_option("--mode", cmode, "alpha|rate")
        ->check(CLI::IsMember({"alpha", "rate"}));
    construct_cmd->add_option("--trials", params.trials, "independent trials, best kept")
        ->check(CLI::PositiveNumber);
    construct_cmd->add_option("--seed", params.master_seed, "master seed (default 271828)");
    construct_cmd->add_option("--p-rule", p_rule, "sampling bias rule: thm (optimal) or cor (log)")
        ->check(CLI::IsMember({"thm", "cor"}));
    construct_cmd->add_option("--p-override", p_override, "fixed sampling bias in [0, 1]");
    construct_cmd->add_flag("--derandomize", derandomize,
                            "deterministic conditional-expectation construction");
    construct_cmd->add_flag("--greedy-repair", greedy_repair,
                            "rate repairs against the growing set (no bound guarantee)");
    construct_cmd->callback([&] {
        params.p_rule = p_rule == "cor" ? ConstructionParams::PRule::LogRule
                                        : ConstructionParams::PRule::Optimal;
        params.p_override = p_override;
        code = run_construct(src, output, alpha_str, cmode, params, derandomize, greedy_repair,
                             out, err);
    });

    auto* exact_cmd = app.add_subcommand("exact", "brute-force optimal value (n <= 24)");
    src.add_flags(exact_cmd);
    output.add_flags(exact_cmd, false);
    exact_cmd->add_option("--mode", mode_name, "dom|kdom|tuple|alpha|rate")
        ->check(CLI::IsMember({"dom", "kdom", "tuple", "alpha", "rate"}));
    exact_cmd->add_option("--alpha", alpha_str, "alpha as a rational p/q");
    exact_cmd->add_option("--k", k, "k for kdom/tuple modes");
    exact_cmd->callback(
        [&] { code = run_exact(src, output, mode_name, alpha_str, k, out, err); });

    auto* exp_cmd = app.add_subcommand("experiment", "canned experiment tables (CSV)");
    src.add_flags(exp_cmd);
    output.add_flags(exp_cmd);
    exp_cmd->add_option("name", experiment_name, "paper-example|alpha-sweep|family-sweep")
        ->required();
    exp_cmd->add_option("--family", family, "family for family-sweep: cycle|path|complete")
        ->check(CLI::IsMember({"cycle", "path", "complete"}));
    exp_cmd->add_option("--n-from", n_from, "family-sweep start order");
    exp_cmd->add_option("--n-to", n_to, "family-sweep end order");
    exp_cmd->add_option("--step", step, "family-sweep order step");
    exp_cmd->add_option("--alpha", alpha_str, "alpha for family-sweep")->default_val("1/2");
    exp_cmd->callback([&] {
        code = run_experiment(experiment_name, src, output, family, n_from, n_to, step, alpha_str,
                              out, err);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;  // help/version exit clean, usage errors exit 1
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

}  // namespace alphadom::cli
