#include "treepack/report.hpp"

#include <set>

#include "treepack/error.hpp"

namespace treepack {

Json rational_json(const Rational& r)
{
    return Json{{"exact", r.str()}, {"value", r.to_double()}};
}

Json edges_json(const Graph& g, const EdgeSet& edges)
{
    Json out = Json::array();
    for (int id : edges)
        out.push_back(Json::array({g.edge(id).u, g.edge(id).v}));
    return out;
}

Json spectrum_json(const Spectrum& s)
{
    return Json{{"values", s.values}, {"residual", s.residual}, {"sweeps", s.sweeps}};
}

Json certificate_json(const PartitionCertificate& c)
{
    return Json{{"parts", c.partition.parts}, {"cross_total", c.cross_total}, {"ratio", rational_json(c.ratio)}};
}

Json decomposition_json(const Graph& g, const ForestDecomposition& d)
{
    Json forests = Json::array();
    for (int f = 1; f <= d.forests; ++f)
        forests.push_back(edges_json(g, d.edges_of(f)));
    return Json{{"forests", forests}, {"unassigned", edges_json(g, d.edges_of(0))}};
}

Json verdict_json(const Graph& g, const PQuery& q, const PVerdict& v)
{
    Json evidence = Json::object();
    if (v.decomposition) {
        Json trees = Json::array();
        for (int f = 1; f <= q.k; ++f)
            trees.push_back(edges_json(g, v.decomposition->edges_of(f)));
        evidence["trees"] = trees;
        evidence["forest"] = edges_json(g, v.decomposition->edges_of(q.k + 1));
    }
    if (v.nu_f_bound)
        evidence["nu_f_bound"] = rational_json(*v.nu_f_bound);
    evidence["constructive"] = v.decomposition.has_value();
    if (v.refutation) {
        Json numbers = Json::object();
        for (const auto& [key, value] : v.refutation->numbers)
            numbers[key] = value;
        Json ref{{"kind", to_string(v.refutation->kind)}, {"reason", v.refutation->reason}, {"numbers", numbers}};
        if (!v.refutation->side.empty())
            ref["side"] = v.refutation->side;
        evidence["refutation"] = ref;
    }
    return Json{{"query", {{"k", q.k}, {"d", q.d}}},
                {"status", to_string(v.status)},
                {"stage", v.stage},
                {"evidence", evidence},
                {"note", v.note},
                {"steps", v.steps}};
}

Json theorem_json(const Graph& g, const TheoremReport& r)
{
    Json clauses = Json::array();
    for (const auto& c : r.clauses) {
        Json j{{"name", c.name}, {"status", to_string(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
        if (c.rhs_exact)
            j["rhs_exact"] = c.rhs_exact->str();
        clauses.push_back(j);
    }
    Json out{{"theorem", to_string(r.theorem)},
             {"k", r.k},
             {"alpha", r.alpha},
             {"n", r.n},
             {"min_degree", r.min_degree},
             {"hypothesis_status", to_string(r.hypothesis)},
             {"clauses", clauses},
             {"conclusion_status", to_string(r.conclusion)},
             {"consistent", r.consistent}};
    if (r.extremal)
        out["extremal"] = Json{{"n", r.extremal->n}, {"s", r.extremal->s}, {"k", r.extremal->k},
                               {"hub", r.extremal->hub}};
    if (r.verdict)
        out["verdict"] = verdict_json(g, PQuery{r.k, r.min_degree}, *r.verdict);
    return out;
}

namespace {

Json tally_json(const TheoremTally& t)
{
    return Json{{"evaluations", t.evaluations},
                {"hypothesis_holds", t.hypothesis_holds},
                {"hypothesis_boundary", t.hypothesis_boundary},
                {"hypothesis_fails", t.hypothesis_fails},
                {"holds_certified", t.holds_certified},
                {"holds_extremal", t.holds_extremal},
                {"holds_unknown", t.holds_unknown},
                {"violations", t.violations}};
}

}  // namespace

Json validation_json(const ValidationReport& r)
{
    return Json{{"config", validation_config_json(r.config)},
                {"graphs", r.graphs},
                {"tallies", {{"T1.6", tally_json(r.t16)}, {"T1.7", tally_json(r.t17)}, {"T4.1", tally_json(r.t41)}}},
                {"violations", r.violations},
                {"ok", r.ok()}};
}

Json repro_json(const std::vector<ReproRow>& rows)
{
    Json out = Json::array();
    for (const auto& row : rows)
        out.push_back(Json{{"name", row.name},
                           {"expected", row.expected},
                           {"computed", row.computed},
                           {"match", row.match},
                           {"detail", row.detail}});
    return out;
}

Json validation_config_json(const ValidationConfig& c)
{
    return Json{{"seed", c.seed},       {"samples", c.samples},     {"families", c.families},
                {"n_min", c.n_min},     {"n_max", c.n_max},         {"max_removed", c.max_removed},
                {"k_min", c.k_min},     {"k_max", c.k_max},         {"alphas", c.alphas},
                {"b_n", c.b_n},         {"b_s", c.b_s},             {"b_k", c.b_k},
                {"b_max_extra", c.b_max_extra}, {"gnp_p", c.gnp_p}, {"gnp_n_max", c.gnp_n_max},
                {"budget", c.budget}};
}

ValidationConfig validation_config_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("validation config must be a JSON object");
    static const std::set<std::string> known{"seed",  "samples", "families", "n_min", "n_max",       "max_removed",
                                             "k_min", "k_max",   "alphas",   "b_n",   "b_s",         "b_k",
                                             "b_max_extra", "gnp_p", "gnp_n_max", "budget"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            throw InputError("unknown validation config key '" + key + "'");
    ValidationConfig c;
    try {
        auto get = [&](const char* key, auto& field) {
            if (j.contains(key))
                j.at(key).get_to(field);
        };
        get("seed", c.seed);
        get("samples", c.samples);
        get("families", c.families);
        get("n_min", c.n_min);
        get("n_max", c.n_max);
        get("max_removed", c.max_removed);
        get("k_min", c.k_min);
        get("k_max", c.k_max);
        get("alphas", c.alphas);
        get("b_n", c.b_n);
        get("b_s", c.b_s);
        get("b_k", c.b_k);
        get("b_max_extra", c.b_max_extra);
        get("gnp_p", c.gnp_p);
        get("gnp_n_max", c.gnp_n_max);
        get("budget", c.budget);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("validation config: ") + e.what());
    }
    c.validate();
    return c;
}

}  // namespace treepack
