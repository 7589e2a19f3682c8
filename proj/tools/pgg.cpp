#include "pgg/efficiency.hpp"
#include "pgg/errors.hpp"
#include "pgg/io.hpp"
#include "pgg/mixed_solvers.hpp"
#include "pgg/pure_solvers.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pgg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoEquilibrium = 2;
constexpr int kExitRefused = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Json& report, const std::string& out_path) {
    const std::string text = report_to_string(report);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + out_path + "'");
    out << text;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 unsigned seed, const std::string& out_path) {
    LabeledInstance li;
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw ValidationError("family '" + family + "' takes " + std::to_string(n) +
                                  " parameter(s)");
    };
    auto as_int = [](const std::string& s) { return std::stoi(s); };
    if (family == "cycle") {
        need(1);
        li = gen_cycle(as_int(params[0]));
    } else if (family == "complete") {
        need(1);
        li = gen_complete(as_int(params[0]));
    } else if (family == "random") {
        need(2);
        li = gen_random(as_int(params[0]), std::stod(params[1]), seed);
    } else if (family == "out-tree") {
        need(2);
        li = gen_out_tree(as_int(params[0]), as_int(params[1]));
    } else if (family == "dkr") {
        need(2);
        li = gen_dkr(as_int(params[0]), as_int(params[1]));
    } else {
        throw ValidationError("unknown family '" + family +
                              "' (cycle | complete | random | out-tree | dkr)");
    }
    const std::string text = serialize_instance(li);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ValidationError("cannot write '" + out_path + "'");
        out << text;
    }
    return kExitOk;
}

int cmd_check_pure(const std::string& file, const std::string& profile_file,
                   const std::string& out_path) {
    auto li = parse_instance(read_file(file));
    auto x = parse_pure_profile(li.instance, read_file(profile_file));
    auto verdict = is_pure_nash_profile(li.instance, x);
    auto costs = pure_costs(li.instance, x);

    Json rep = make_report("check-pure", li);
    rep["is_nash"] = verdict.is_nash;
    if (verdict.deviating_vertex) rep["deviating_vertex"] = *verdict.deviating_vertex;
    if (!verdict.reason.empty()) rep["reason"] = verdict.reason;
    rep["buyers"] = vertices_json(buyers_of(x));
    Json cj = Json::array();
    for (const auto& c : costs.player_costs) cj.push_back(rational_to_string(c));
    rep["player_costs"] = cj;
    rep["social_cost"] = rational_to_string(costs.social_cost);
    emit(rep, out_path);
    return kExitOk;
}

int cmd_solve_pure(const std::string& file, const std::string& mode_s,
                   const std::string& method, int bound, const std::string& out_path) {
    auto li = parse_instance(read_file(file));
    Json rep = make_report("solve-pure", li);

    PureSolveReport result;
    if (method == "oracle" || mode_s != "any") {
        OracleMode mode = mode_s == "all"   ? OracleMode::all
                          : mode_s == "min" ? OracleMode::min
                          : mode_s == "max" ? OracleMode::max
                                            : OracleMode::any;
        result = brute_force_pure_nash(li.instance, mode, bound);
    } else if (method == "auto") {
        result = dispatch_pure(li.instance, bound);
    } else if (method == "class") {
        result = dispatch_pure(li.instance, /*bound=*/0);  // forbid the oracle fallback
    } else {
        throw ValidationError("unknown method '" + method + "' (auto | oracle | class)");
    }

    if (!result.decided) throw BoundExceeded("no applicable method within bounds");
    rep["method"] = to_string(result.method);
    rep["exists"] = result.exists;
    rep["sets_examined"] = result.sets_examined;
    if (result.witness) {
        rep["witness"] = vertices_json(result.witness->members);
        if (result.witness->witness_extension)
            rep["extension"] = extension_json(*result.witness->witness_extension);
        auto check = is_pure_nash_set(li.instance, result.witness->members);
        rep["witness_verified"] = check.holds;
    }
    if (result.min_size) rep["min_size"] = *result.min_size;
    if (result.max_size) rep["max_size"] = *result.max_size;
    if (result.all_sets) {
        Json sets = Json::array();
        for (const auto& S : *result.all_sets) sets.push_back(S);
        rep["all_sets"] = sets;
    }
    if (!result.exists) rep["verdict"] = "no pure Nash equilibrium";
    emit(rep, out_path);
    return result.exists ? kExitOk : kExitNoEquilibrium;
}

int cmd_solve_mixed(const std::string& file, double tol, const std::string& out_path) {
    auto li = parse_instance(read_file(file));
    auto sigma = solve_mixed_k1(li.instance);
    auto verdict = is_mixed_nash(li.instance, sigma, tol);
    auto costs = expected_costs(li.instance, sigma);

    Json rep = make_report("solve-mixed", li);
    rep["profile"] = mixed_profile_json(sigma);
    rep["is_nash"] = verdict.is_nash;
    rep["worst_regret"] = verdict.worst_regret;
    rep["expected_social_cost"] = costs.social_cost;
    emit(rep, out_path);
    return kExitOk;
}

int cmd_metrics(const std::string& file, int bound, const std::string& out_path) {
    auto li = parse_instance(read_file(file));
    auto eff = ratios_and_bounds(li.instance, bound);

    Json rep = make_report("metrics", li);
    rep["equilibria_exist"] = eff.equilibria_exist;
    rep["b"] = eff.b;
    rep["b_witness"] = vertices_json(eff.b_witness);
    rep["social_optimum"] = rational_to_string(eff.social_optimum);
    if (eff.pn) rep["pn"] = *eff.pn;
    if (eff.Pn) rep["Pn"] = *eff.Pn;
    if (eff.pn_witness) rep["pn_witness"] = vertices_json(*eff.pn_witness);
    if (eff.Pn_witness) rep["Pn_witness"] = vertices_json(*eff.Pn_witness);
    if (eff.pos_ratio) rep["pos"] = rational_to_string(*eff.pos_ratio);
    if (eff.poa_ratio) rep["poa"] = rational_to_string(*eff.poa_ratio);
    emit(rep, out_path);
    return eff.equilibria_exist ? kExitOk : kExitNoEquilibrium;
}

int cmd_reduce_galaxy(const std::string& file, const std::string& out_path) {
    auto li = parse_instance(read_file(file));
    auto gadget = gadget_galaxy(li.instance.graph);
    Json rep = make_report("reduce-galaxy", li);
    rep["gadget"] = {{"digest", instance_digest(gadget)},
                     {"n", gadget.instance.graph.vertex_count()},
                     {"m", gadget.instance.graph.arc_count()}};
    rep["gadget_file"] = serialize_instance(gadget);
    emit(rep, out_path);
    return kExitOk;
}

int cmd_reduce_transversal(const std::string& hfile, int r, int k,
                           const std::string& out_path) {
    auto h = parse_hypergraph(read_file(hfile));
    auto gadget = gadget_transversal(h, r, k);
    Json rep;
    rep["tool"] = kToolVersion;
    rep["command"] = "reduce-transversal";
    rep["hypergraph"] = {{"n", h.n}, {"m", h.edges.size()}};
    rep["r"] = r;
    rep["k"] = k;
    rep["gadget"] = {{"digest", instance_digest(gadget)},
                     {"n", gadget.instance.graph.vertex_count()},
                     {"m", gadget.instance.graph.arc_count()}};
    rep["gadget_file"] = serialize_instance(gadget);
    emit(rep, out_path);
    return kExitOk;
}

int cmd_probe_pos(const std::string& family, const std::vector<std::string>& range,
                  unsigned seed, const std::string& c_text, const std::string& out_path) {
    Rational c = parse_rational(c_text);
    PosProbeResult res;
    if (family == "out-tree") {
        if (range.size() != 2) throw ValidationError("probe-pos out-tree takes <k> <r_max>");
        res = probe_pos_out_trees(std::stoi(range[0]), std::stoi(range[1]), c);
    } else if (family == "random") {
        if (range.size() != 3)
            throw ValidationError("probe-pos random takes <count> <n> <arc_prob>");
        res = probe_pos_random(std::stoi(range[0]), std::stoi(range[1]), std::stod(range[2]),
                               seed, c);
    } else {
        throw ValidationError("unknown probe family '" + family + "' (out-tree | random)");
    }
    Json rep;
    rep["tool"] = kToolVersion;
    rep["command"] = "probe-pos";
    rep["family"] = family;
    rep["c"] = rational_to_string(c);
    Json entries = Json::array();
    for (const auto& e : res.entries)
        entries.push_back({{"label", e.label},
                           {"n", e.n},
                           {"pn", e.pn},
                           {"b", e.b},
                           {"ratio", rational_to_string(e.ratio)}});
    rep["entries"] = entries;
    rep["max_ratio"] = rational_to_string(res.max_ratio);
    emit(rep, out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Batch solver for public goods games on directed networks"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("-o,--output", out_path, "Write the report here instead of stdout");

    std::string family;
    std::vector<std::string> params;
    unsigned seed = 0;
    auto* gen = app.add_subcommand("generate", "Emit an instance from a named family");
    gen->add_option("family", family)->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--seed", seed, "RNG seed (random family)")->default_val(0);

    std::string in_file, profile_file;
    auto* check = app.add_subcommand("check-pure", "Verify a pure profile");
    check->add_option("file", in_file)->required();
    check->add_option("--profile", profile_file)->required();

    std::string mode = "any", method = "auto";
    int bound = pgg::kDefaultOracleBound;
    auto* solvep = app.add_subcommand("solve-pure", "Decide pure Nash existence");
    solvep->add_option("file", in_file)->required();
    solvep->add_option("--mode", mode)->check(CLI::IsMember({"any", "all", "min", "max"}));
    solvep->add_option("--method", method)->check(CLI::IsMember({"auto", "oracle", "class"}));
    solvep->add_option("--bound", bound, "Exact-search size bound");

    double tol = 1e-9;
    auto* solvem = app.add_subcommand("solve-mixed", "Mixed equilibrium, k = 1");
    solvem->add_option("file", in_file)->required();
    solvem->add_option("--tol", tol, "Verification tolerance");

    auto* metrics = app.add_subcommand("metrics", "pn, Pn, b, PoS, PoA");
    metrics->add_option("file", in_file)->required();
    metrics->add_option("--bound", bound, "Exact-search size bound");

    auto* reduce = app.add_subcommand("reduce", "Emit a hardness gadget");
    std::string hfile;
    int red_r = 0, red_k = 2;
    auto* red_gal = reduce->add_subcommand("galaxy", "k = 1 gadget over an instance");
    red_gal->add_option("file", in_file)->required();
    auto* red_tra = reduce->add_subcommand("transversal", "k >= 2 gadget over a hypergraph");
    red_tra->add_option("hfile", hfile)->required();
    red_tra->add_option("--r", red_r)->required();
    red_tra->add_option("--k", red_k)->required();
    reduce->require_subcommand(1);

    std::vector<std::string> range;
    std::string c_text = "1/2";
    auto* probe = app.add_subcommand("probe-pos", "Price-of-stability conjecture probe");
    probe->add_option("family", family)->required();
    probe->add_option("range", range, "Family-specific range parameters");
    probe->add_option("--seed", seed)->default_val(0);
    probe->add_option("--c", c_text, "Price as num/den");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(family, params, seed, out_path);
        if (check->parsed()) return cmd_check_pure(in_file, profile_file, out_path);
        if (solvep->parsed()) return cmd_solve_pure(in_file, mode, method, bound, out_path);
        if (solvem->parsed()) return cmd_solve_mixed(in_file, tol, out_path);
        if (metrics->parsed()) return cmd_metrics(in_file, bound, out_path);
        if (reduce->parsed()) {
            if (red_gal->parsed()) return cmd_reduce_galaxy(in_file, out_path);
            if (red_tra->parsed()) return cmd_reduce_transversal(hfile, red_r, red_k, out_path);
        }
        if (probe->parsed()) return cmd_probe_pos(family, range, seed, c_text, out_path);
        std::cerr << "error: no subcommand\n";
        return kExitInput;
    } catch (const pgg::BoundExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const pgg::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
