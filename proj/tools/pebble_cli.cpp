// Copyright 2026 The Pebbling Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pebbling/constructions.hpp"
#include "pebbling/exact_numbers.hpp"
#include "pebbling/families.hpp"
#include "pebbling/formulas.hpp"
#include "pebbling/graph_io.hpp"
#include "pebbling/opt_model.hpp"
#include "pebbling/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace pebbling;
using nlohmann::json;

namespace {

enum Exit { ok = 0, violation = 1, refusal = 2, usage = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// file.g6 (first graph, or --index), file.json, family:params or gnd:n,d
Graph load_graph(const std::string& source, int index)
{
    if (ends_with(source, ".g6") || ends_with(source, ".graph6")) {
        auto graphs = read_graph6_file(source);
        if (index < 0 || index >= static_cast<int>(graphs.size()))
            throw UsageError("graph index " + std::to_string(index) + " out of range for " + source);
        return graphs[index];
    }
    if (ends_with(source, ".json")) {
        std::ifstream in(source);
        if (!in)
            throw UsageError("cannot open " + source);
        return graph_from_json(json::parse(in));
    }
    if (source.rfind("gnd:", 0) == 0) {
        auto arg = source.substr(4);
        auto comma = arg.find(',');
        if (comma == std::string::npos)
            throw UsageError("gnd spec must look like gnd:n,d");
        return build_gnd(detail::parse_int(arg.substr(0, comma)), detail::parse_int(arg.substr(comma + 1)));
    }
    return make_family(parse_family(source));
}

std::vector<Graph> load_catalog(const std::string& path, int max_n)
{
    std::vector<Graph> out;
    for (auto& g : read_graph6_file(path))
        if (g.order() <= max_n)
            out.push_back(std::move(g));
    return out;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string counts_field(const PebbleDistribution& d)
{
    std::ostringstream s;
    for (int i = 0; i < d.order(); ++i)
        s << (i ? " " : "") << d[i];
    return s.str();
}

std::string render_stat(const Graph& g, const PebblingStat& stat, const std::string& format)
{
    if (format == "json")
        return to_json(g, stat).dump(2) + "\n";
    if (format == "csv") {
        std::ostringstream s;
        s << "graph,kind,t,value,root,witness,missed_target,enumerated_count,elapsed_ms\n";
        s << serialize_graph6(g) << ',' << to_string(stat.kind) << ',' << stat.t << ',' << stat.value << ','
          << (stat.root ? std::to_string(*stat.root) : "") << ','
          << (stat.witness ? counts_field(*stat.witness) : "") << ','
          << (stat.missed_target ? counts_field(*stat.missed_target) : "") << ',' << stat.enumerated << ','
          << stat.elapsed_ms << '\n';
        return s.str();
    }
    std::ostringstream s;
    s << to_string(stat.kind) << " = " << stat.value << " (t=" << stat.t;
    if (stat.root)
        s << ", root " << *stat.root;
    s << ")\n";
    if (stat.witness)
        s << "witness: " << counts_field(*stat.witness) << '\n';
    return s.str();
}

std::string render_value(const Graph& g, const std::string& kind, const Rational& value, const json& extra,
                         const std::string& format)
{
    if (format == "json") {
        json j{{"graph", serialize_graph6(g)}, {"kind", kind}, {"value", to_string(value)}};
        j.update(extra);
        return j.dump(2) + "\n";
    }
    if (format == "csv")
        return "graph,kind,value\n" + serialize_graph6(g) + "," + kind + "," + to_string(value) + "\n";
    return kind + " = " + to_string(value) + "\n";
}

std::string render_report(const VerificationReport& rep, const std::string& format)
{
    if (format == "json")
        return to_json(rep).dump(2) + "\n";
    std::ostringstream s;
    if (format == "csv") {
        s << "suite,id,n,diameter,params,values,bounds,status,note\n";
        auto quote = [](std::string v) {
            std::string out = "\"";
            for (char c : v)
                out += c == '"' ? std::string("\"\"") : std::string(1, c);
            return out + "\"";
        };
        for (const auto& r : rep.rows) {
            json bounds = json::array();
            for (const auto& b : r.bounds)
                bounds.push_back(to_json(b));
            s << rep.suite << ',' << r.id << ',' << r.n << ',' << r.diameter << ',' << quote(json(r.params).dump())
              << ',' << quote(r.values.dump()) << ',' << quote(bounds.dump()) << ',' << to_string(r.status) << ','
              << quote(r.note) << '\n';
        }
        return s.str();
    }
    for (const auto& r : rep.rows)
        if (r.status != RowStatus::pass)
            s << (r.status == RowStatus::fail ? "FAIL " : "REFUSED ") << r.id << ' ' << json(r.params).dump() << ' '
              << r.values.dump() << ' ' << r.note << '\n';
    s << rep.suite << ": " << rep.instances() << " instances, " << rep.passes() << " passed, " << rep.failures()
      << " failed, " << rep.refusals() << " refused (" << static_cast<long>(rep.elapsed_ms) << " ms)\n";
    return s.str();
}

struct Common {
    std::string format = "text";
    std::string out;
    int max_n = 8;
    int max_t = 4;
    long max_pebbles = 1024;
    std::size_t node_budget = 1'000'000;
};

ExactOptions exact_options(const Common& c)
{
    ExactOptions o;
    o.budget.max_vertices = c.max_n;
    o.budget.max_t = c.max_t;
    o.budget.max_pebbles = c.max_pebbles;
    o.budget.with_env_deadline();
    o.search.budget = o.budget;
    return o;
}

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", c.out, "write output here instead of stdout");
    cmd->add_option("--max-n", c.max_n, "largest vertex count");
    cmd->add_option("--max-t", c.max_t, "largest target multiplicity");
    cmd->add_option("--max-pebbles", c.max_pebbles, "largest pebble count a search may hold");
    cmd->add_option("--node-budget", c.node_budget, "branch-and-bound node limit");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact graph pebbling numbers, bounds and optimization models"};
    app.require_subcommand(1);

    Common common;
    std::string graph_src;
    int graph_index = 0;
    int t = 1;
    std::optional<int> root;

    auto* compute = app.add_subcommand("compute", "compute a pebbling invariant");
    std::string stat = "pi";
    compute->add_option("--graph", graph_src, "file.g6, file.json, family:params or gnd:n,d")->required();
    compute->add_option("--index", graph_index, "graph index within a graph6 file");
    compute->add_option("--stat", stat, "pi, pi_rooted, pi_star, pi_arb, pi_hat or pi_hat_star")
        ->check(CLI::IsMember({"pi", "pi_t", "pi_rooted", "pi_star", "pi_arb", "pi_hat", "pi_hat_star"}));
    compute->add_option("--t", t, "target multiplicity")->check(CLI::PositiveNumber);
    compute->add_option("--root", root, "root vertex for pi_rooted");
    add_common(compute, common);

    auto* verify = app.add_subcommand("verify", "run a theorem suite");
    std::string suite;
    std::string catalog;
    unsigned threads = 0;
    int sweep_n = 6;
    int sweep_t = 2;
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--catalog", catalog, "graph6 file of graphs to sweep");
    verify->add_option("--threads", threads, "worker threads (0: all cores)");
    verify->add_option("--sweep-n", sweep_n, "largest graph order swept");
    verify->add_option("--sweep-t", sweep_t, "largest t swept");
    add_common(verify, common);

    auto* conjecture = app.add_subcommand("conjecture", "sweep a conjecture for counterexamples");
    std::string conj;
    std::string artifact = "counterexamples.json";
    conjecture->add_option("--name", conj, "conjecture name")->required()->check(CLI::IsMember(conjecture_names()));
    conjecture->add_option("--catalog", catalog, "graph6 file of graphs to sweep");
    conjecture->add_option("--threads", threads, "worker threads (0: all cores)");
    conjecture->add_option("--sweep-n", sweep_n, "largest graph order swept");
    conjecture->add_option("--sweep-t", sweep_t, "largest t swept");
    conjecture->add_option("--counterexamples", artifact, "where violations are written");
    add_common(conjecture, common);

    auto* export_lp_cmd = app.add_subcommand("export-lp", "write the OPT model in LP format");
    bool frac = false;
    bool integral = false;
    export_lp_cmd->add_option("--graph", graph_src, "graph source")->required();
    export_lp_cmd->add_option("--index", graph_index, "graph index within a graph6 file");
    export_lp_cmd->add_option("--t", t, "target multiplicity")->check(CLI::PositiveNumber);
    auto* frac_flag = export_lp_cmd->add_flag("--frac", frac, "continuous relaxation");
    export_lp_cmd->add_flag("--int", integral, "integral model (default)")->excludes(frac_flag);
    export_lp_cmd->add_option("--out", common.out, "LP file path (stdout when absent)");

    auto* gnd = app.add_subcommand("build-gnd", "build the extremal graph G_{n,d}");
    int gn = 0;
    int gd = 0;
    bool witness = false;
    gnd->add_option("--n", gn, "vertex count")->required();
    gnd->add_option("--d", gd, "diameter")->required();
    gnd->add_flag("--witness", witness, "include the verified odd-diameter witness");
    gnd->add_option("--format", common.format, "json or graph6")->check(CLI::IsMember({"json", "graph6", "text"}));
    gnd->add_option("--out", common.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*compute) {
            Graph g = load_graph(graph_src, graph_index);
            auto opts = exact_options(common);
            if (stat == "pi" || stat == "pi_t") {
                emit(render_stat(g, pebbling_number(g, t, opts), common.format), common.out);
            } else if (stat == "pi_rooted") {
                if (!root)
                    throw UsageError("--stat pi_rooted needs --root");
                emit(render_stat(g, rooted_pebbling_number(g, *root, t, opts), common.format), common.out);
            } else if (stat == "pi_star") {
                emit(render_stat(g, optimal_pebbling_number(g, t, opts), common.format), common.out);
            } else if (stat == "pi_arb") {
                emit(render_stat(g, arbitrary_target_number(g, t, opts), common.format), common.out);
            } else if (stat == "pi_hat") {
                emit(render_value(g, "pi_hat", Rational(fractional_pebbling_number(g)), json::object(), common.format),
                     common.out);
            } else {
                auto opt = optimal_fractional_pebbling_full(g);
                json extra{{"placement", to_json(placement(g, opt.solution))}};
                emit(render_value(g, "pi_hat_star", opt.value, extra, common.format), common.out);
            }
            return ok;
        }
        if (*verify || *conjecture) {
            SweepOptions so;
            so.max_n = sweep_n;
            so.max_t = sweep_t;
            so.threads = threads;
            so.node_budget = common.node_budget;
            so.exact = exact_options(common);
            if (!catalog.empty())
                so.catalog = load_catalog(catalog, sweep_n);
            auto rep = *verify ? run_suite(suite, so) : run_conjecture(conj, so);
            emit(render_report(rep, common.format), common.out);
            if (*conjecture && rep.failures()) {
                std::ofstream a(artifact);
                a << to_json(rep)["counterexamples"].dump(2) << '\n';
                std::cerr << rep.failures() << " potential counterexample(s) written to " << artifact << '\n';
            }
            if (rep.failures())
                std::cerr << "FAILURES in " << rep.suite << '\n';
            return rep.exit_code();
        }
        if (*export_lp_cmd) {
            Graph g = load_graph(graph_src, graph_index);
            auto lp = build_opt_model(g, t, !frac);
            if (common.out.empty())
                write_lp(lp, std::cout);
            else
                export_lp(lp, common.out);
            return ok;
        }
        if (*gnd) {
            auto g = build_gnd(gn, gd);
            if (common.format == "graph6" || common.format == "text") {
                emit(serialize_graph6(g) + "\n", common.out);
            } else {
                json j{{"graph", graph_to_json(g)}, {"graph6", serialize_graph6(g)}, {"n", gn}, {"d", g.diameter()}};
                if (witness && gd % 2 == 1) {
                    auto w = unsolvable_witness_odd(gn, gd);
                    j["witness"] = {{"root", w.root}, {"distribution", to_json(w.distribution)}};
                    j["lower_bound"] = w.distribution.size() + 1;
                    j["formula"] = to_string(gnd_lower_bound(gn, gd));
                }
                emit(j.dump(2) + "\n", common.out);
            }
            return ok;
        }
    } catch (const Refusal& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return refusal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return violation;
    }
    return usage;
}
