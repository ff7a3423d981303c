#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>

#include "treepack/error.hpp"
#include "treepack/generators.hpp"
#include "treepack/graph_io.hpp"
#include "treepack/packing.hpp"
#include "treepack/property_p.hpp"
#include "treepack/report.hpp"
#include "treepack/spectral.hpp"
#include "treepack/theorems.hpp"

namespace treepack::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string file;
    std::string fixture;

    void attach(CLI::App* app)
    {
        app->add_option("graph", file, "Edge-list file");
        app->add_option("--fixture", fixture, "Built-in graph: h1, h2, petersen, kN, kAxB, bN,S,K");
    }

    Graph load() const
    {
        if (!file.empty() && !fixture.empty())
            throw UsageError("give either a graph file or --fixture, not both");
        if (!fixture.empty())
            return fixture_by_name(fixture);
        if (file.empty())
            throw UsageError("a graph file or --fixture is required");
        return read_edge_list_file(file);
    }

    Json echo() const
    {
        return fixture.empty() ? Json{{"file", file}} : Json{{"fixture", fixture}};
    }
};

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string scalar_text(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

// Leaves of the JSON tree as (dotted path, value); small arrays of scalars stay whole.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    if (j.is_array() && !j.empty() && (j.front().is_object())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        return;
    }
    out.emplace_back(prefix, scalar_text(j));
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const std::string& format, const Json& report, std::ostream& out)
{
    const Json& results = report["results"];
    if (format == "json") {
        out << report.dump(2) << "\n";
        return;
    }
    const bool table = report["command"] == "reproduce";
    if (format == "csv") {
        if (table) {
            out << "name,expected,computed,match,detail\n";
            for (const auto& row : results["rows"])
                out << csv_field(row["name"]) << "," << csv_field(row["expected"]) << ","
                    << csv_field(row["computed"]) << "," << (row["match"].get<bool>() ? "true" : "false") << ","
                    << csv_field(row["detail"]) << "\n";
            return;
        }
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(results, "", flat);
        out << "key,value\n";
        for (const auto& [k, v] : flat)
            out << csv_field(k) << "," << csv_field(v) << "\n";
        return;
    }
    out << "command: " << scalar_text(report["command"]) << "\n";
    if (table) {
        std::size_t w_name = 4, w_exp = 8, w_comp = 8;
        for (const auto& row : results["rows"]) {
            w_name = std::max(w_name, row["name"].get<std::string>().size());
            w_exp = std::max(w_exp, row["expected"].get<std::string>().size());
            w_comp = std::max(w_comp, row["computed"].get<std::string>().size());
        }
        out << std::left << std::setw(static_cast<int>(w_name)) << "name" << "  " << std::setw(static_cast<int>(w_exp))
            << "expected" << "  " << std::setw(static_cast<int>(w_comp)) << "computed" << "  match\n";
        for (const auto& row : results["rows"])
            out << std::left << std::setw(static_cast<int>(w_name)) << row["name"].get<std::string>() << "  "
                << std::setw(static_cast<int>(w_exp)) << row["expected"].get<std::string>() << "  "
                << std::setw(static_cast<int>(w_comp)) << row["computed"].get<std::string>() << "  "
                << (row["match"].get<bool>() ? "yes" : "NO") << "\n";
        out << "all_match: " << scalar_text(results["all_match"]) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(results, "", flat);
    std::size_t width = 0;
    for (const auto& kv : flat)
        width = std::max(width, kv.first.size());
    for (const auto& [k, v] : flat)
        out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
}

}  // namespace

Graph fixture_by_name(const std::string& name)
{
    static const std::regex complete_re(R"(k(\d+))");
    static const std::regex bipartite_re(R"(k(\d+)x(\d+))");
    static const std::regex b_re(R"(b(\d+),(\d+),(\d+))");
    std::smatch m;
    if (name == "h1")
        return fixture_H1();
    if (name == "h2")
        return fixture_H2();
    if (name == "petersen")
        return petersen();
    try {
        if (std::regex_match(name, m, complete_re))
            return complete(std::stoi(m[1]));
        if (std::regex_match(name, m, bipartite_re))
            return complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
        if (std::regex_match(name, m, b_re))
            return build_B(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
    } catch (const std::out_of_range&) {
        throw UsageError("fixture size out of range: '" + name + "'");
    } catch (const InputError& e) {
        throw UsageError("bad fixture '" + name + "': " + e.what());
    }
    throw UsageError("unknown fixture '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spanning-tree packing, fractional packing, and spectra of graphs", "treepack"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--seed", seed, "Random seed (echoed in every report)");
    app.add_option("--threads", threads, "Worker cap")->check(CLI::PositiveNumber);

    GraphSource eigen_src, tau_src, nuf_src, check_src, theorem_src, export_src;
    double alpha = 0.0;
    std::optional<int> index;
    auto* eigen = app.add_subcommand("eigen", "Adjacency or A_alpha eigenvalues");
    eigen_src.attach(eigen);
    eigen->add_option("--alpha", alpha, "A_alpha parameter in [0, 1)");
    eigen->add_option("--i", index, "Return only the i-th largest eigenvalue");

    auto* tau_cmd = app.add_subcommand("tau", "Spanning-tree packing number with tree certificate");
    tau_src.attach(tau_cmd);

    int exact_limit = 12;
    auto* nuf = app.add_subcommand("nuf", "Fractional packing number, exact or bounded");
    nuf_src.attach(nuf);
    nuf->add_option("--exact-limit", exact_limit, "Largest n for exact enumeration");

    int k = 1, d = 1;
    std::string bipartition_file;
    std::uint64_t budget = 100'000'000;
    auto* check = app.add_subcommand("check-p", "Decide property P(k, d)");
    check_src.attach(check);
    check->add_option("--k", k, "Number of spanning trees")->required();
    check->add_option("--d", d, "Forest parameter")->required();
    check->add_option("--bipartition", bipartition_file, "File listing one side U of a cut to try first");
    check->add_option("--budget", budget, "Node budget for the exhaustive search");
    check->add_option("--exact-limit", exact_limit, "Largest n for exact fractional packing");

    std::string which;
    auto* theorem = app.add_subcommand("theorem", "Evaluate a theorem's hypothesis and conclusion");
    theorem_src.attach(theorem);
    theorem->add_option("--which", which, "t16, t17 or t41")->required()->check(CLI::IsMember({"t16", "t17", "t41"}));
    theorem->add_option("--k", k, "Number of spanning trees")->required();
    theorem->add_option("--alpha", alpha, "A_alpha parameter for t41");
    theorem->add_option("--budget", budget, "Node budget for the exhaustive search");

    auto* reproduce = app.add_subcommand("reproduce", "Recompute the reference table");
    reproduce->add_option("--budget", budget, "Node budget for the exhaustive search");

    std::string config_file;
    auto* validate = app.add_subcommand("validate", "Randomized theorem validation");
    validate->add_option("--config", config_file, "JSON config")->required();

    auto* export_cmd = app.add_subcommand("export", "Print a graph in edge-list format");
    export_src.attach(export_cmd);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return usage;
    }

    const auto started = std::chrono::steady_clock::now();
    Json report{{"command", ""}, {"version", TREEPACK_VERSION}, {"seed", seed}, {"inputs", Json::object()}};
    Json results = Json::object();
    int code = ok;
    try {
        if (*eigen) {
            report["command"] = "eigen";
            const Graph g = eigen_src.load();
            report["inputs"] = eigen_src.echo();
            report["inputs"]["alpha"] = alpha;
            const auto spectrum = alpha == 0.0 ? adjacency_spectrum(g) : a_alpha_spectrum(g, alpha);
            results["matrix"] = alpha == 0.0 ? "adjacency" : "a_alpha";
            results["n"] = g.order();
            results["m"] = g.size();
            if (index) {
                report["inputs"]["i"] = *index;
                results["i"] = *index;
                results["lambda"] = spectrum.lambda(*index);
            } else {
                results["values"] = spectrum.values;
            }
            results["residual"] = spectrum.residual;
        } else if (*tau_cmd) {
            report["command"] = "tau";
            const Graph g = tau_src.load();
            report["inputs"] = tau_src.echo();
            const auto packing = tau(g);
            results["tau"] = packing.tau;
            Json trees = Json::array();
            for (int f = 1; f <= packing.tau; ++f)
                trees.push_back(edges_json(g, packing.trees.edges_of(f)));
            results["trees"] = trees;
            results["verified"] = verify_decomposition(g, packing.trees, packing.tau).ok;
        } else if (*nuf) {
            report["command"] = "nuf";
            const Graph g = nuf_src.load();
            report["inputs"] = nuf_src.echo();
            report["inputs"]["exact_limit"] = exact_limit;
            if (g.order() <= exact_limit) {
                const auto cert = nu_f_exact(g, exact_limit);
                results["mode"] = "exact";
                results["value"] = rational_json(cert.ratio);
                results["certificate"] = certificate_json(cert);
            } else {
                LocalSearchOptions options;
                options.first_seed = seed;
                const auto bounds = nu_f_bounds(g, options);
                results["mode"] = "bounds";
                results["lower"] = rational_json(bounds.lower);
                results["upper"] = rational_json(bounds.upper);
                results["certificate"] = certificate_json(bounds.upper_certificate);
            }
        } else if (*check) {
            report["command"] = "check-p";
            const Graph g = check_src.load();
            report["inputs"] = check_src.echo();
            report["inputs"]["k"] = k;
            report["inputs"]["d"] = d;
            report["inputs"]["budget"] = budget;
            CheckOptions options;
            options.budget = budget;
            options.exact_limit = exact_limit;
            if (!bipartition_file.empty()) {
                options.bipartition = parse_vertex_set(read_text(bipartition_file), g.order());
                report["inputs"]["bipartition"] = *options.bipartition;
            }
            const PQuery q{k, d};
            results = verdict_json(g, q, check_P(g, q, options));
        } else if (*theorem) {
            report["command"] = "theorem";
            const Graph g = theorem_src.load();
            report["inputs"] = theorem_src.echo();
            report["inputs"]["which"] = which;
            report["inputs"]["k"] = k;
            report["inputs"]["alpha"] = alpha;
            TheoremOptions options;
            options.check.budget = budget;
            const auto r = which == "t16"   ? eval_T16(g, k, options)
                           : which == "t17" ? eval_T17(g, k, options)
                                            : eval_T41(g, k, alpha, options);
            results = theorem_json(g, r);
            code = r.consistent ? ok : mismatch;
        } else if (*reproduce) {
            report["command"] = "reproduce";
            report["inputs"] = Json{{"budget", budget}};
            const auto rows = reproduce_reference_values(budget);
            bool all = true;
            for (const auto& row : rows)
                all = all && row.match;
            results["rows"] = repro_json(rows);
            results["all_match"] = all;
            code = all ? ok : mismatch;
        } else if (*validate) {
            report["command"] = "validate";
            Json config_json;
            try {
                config_json = Json::parse(read_text(config_file));
            } catch (const nlohmann::json::parse_error& e) {
                throw InputError(std::string("config is not valid JSON: ") + e.what());
            }
            if (config_json.is_object() && !config_json.contains("seed"))
                config_json["seed"] = seed;
            const auto config = validation_config_from_json(config_json);
            report["seed"] = config.seed;
            report["inputs"] = Json{{"config", config_file}};
            const auto vr = random_validation(config, threads);
            results = validation_json(vr);
            code = vr.ok() ? ok : mismatch;
        } else if (*export_cmd) {
            out << format_edge_list(export_src.load());
            return ok;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    }
    report["results"] = results;
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    report["timing"] = Json{{"elapsed_ms", elapsed.count()}};
    emit(format, report, out);
    return code;
}

}  // namespace treepack::cli
