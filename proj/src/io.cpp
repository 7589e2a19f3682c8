#include "pgg/io.hpp"

#include "pgg/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

namespace pgg {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(line, "bad " + what + " '" + tok + "'");
    }
}

double parse_float(const std::string& tok, int line, const std::string& what) {
    try {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(line, "bad " + what + " '" + tok + "'");
    }
}

// Splits into whitespace tokens; drops everything from '#'.
std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    return toks;
}

}  // namespace

LabeledInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_header = false;
    int n = 0, m = 0;
    LabeledInstance li;
    std::vector<Arc> arcs;
    std::set<Arc> seen_arcs;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "p") {
            if (seen_header) fail(lineno, "duplicate header");
            if (toks.size() != 4 || toks[1] != "pgg") fail(lineno, "expected 'p pgg <n> <m>'");
            n = parse_int(toks[2], lineno, "vertex count");
            m = parse_int(toks[3], lineno, "arc count");
            if (n < 0 || m < 0) fail(lineno, "negative size in header");
            li.names.assign(n, "");
            seen_header = true;
            continue;
        }
        if (!seen_header) fail(lineno, "'" + kw + "' before header");
        if (kw == "k") {
            if (toks.size() != 2) fail(lineno, "expected 'k <int>'");
            li.instance.k = parse_int(toks[1], lineno, "k");
            if (li.instance.k < 1) fail(lineno, "k must be >= 1");
        } else if (kw == "c") {
            if (toks.size() != 2) fail(lineno, "expected 'c <num>/<den>'");
            try {
                li.instance.c = parse_rational(toks[1]);
            } catch (const ValidationError& e) {
                fail(lineno, e.what());
            }
            if (li.instance.c <= 0 || li.instance.c >= 1) fail(lineno, "c must lie in (0,1)");
        } else if (kw == "a") {
            if (toks.size() != 3) fail(lineno, "expected 'a <u> <v>'");
            Vertex u = parse_int(toks[1], lineno, "vertex id");
            Vertex v = parse_int(toks[2], lineno, "vertex id");
            if (u < 0 || u >= n || v < 0 || v >= n) fail(lineno, "vertex id out of range");
            if (u == v) fail(lineno, "self-loop");
            if (!seen_arcs.insert({u, v}).second) fail(lineno, "duplicate arc");
            arcs.push_back({u, v});
        } else if (kw == "name") {
            if (toks.size() < 3) fail(lineno, "expected 'name <v> <string>'");
            Vertex v = parse_int(toks[1], lineno, "vertex id");
            if (v < 0 || v >= n) fail(lineno, "vertex id out of range");
            std::string s = toks[2];
            for (size_t i = 3; i < toks.size(); ++i) s += " " + toks[i];
            li.names[v] = s;
        } else {
            fail(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (!seen_header) throw ValidationError("missing 'p pgg' header");
    if (static_cast<int>(arcs.size()) != m)
        throw ValidationError("header promises " + std::to_string(m) + " arcs, file has " +
                              std::to_string(arcs.size()));
    li.instance.graph = Digraph(n, std::move(arcs));
    for (Vertex v = 0; v < n; ++v)
        if (li.names[v].empty()) li.names[v] = "v" + std::to_string(v);
    return li;
}

std::string serialize_instance(const LabeledInstance& li) {
    const Digraph& g = li.instance.graph;
    std::ostringstream out;
    out << "p pgg " << g.vertex_count() << " " << g.arc_count() << "\n";
    out << "k " << li.instance.k << "\n";
    out << "c " << rational_to_string(li.instance.c) << "\n";
    for (const auto& [u, v] : g.arcs()) out << "a " << u << " " << v << "\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::string def = "v" + std::to_string(v);
        std::string nm = v < static_cast<int>(li.names.size()) ? li.names[v] : def;
        if (!nm.empty() && nm != def) out << "name " << v << " " << nm << "\n";
    }
    return out.str();
}

Hypergraph3 parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_header = false;
    int m = 0;
    Hypergraph3 h;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "h") {
            if (seen_header) fail(lineno, "duplicate header");
            if (toks.size() != 4 || toks[1] != "3uniform")
                fail(lineno, "expected 'h 3uniform <n> <m>'");
            h.n = parse_int(toks[2], lineno, "vertex count");
            m = parse_int(toks[3], lineno, "edge count");
            seen_header = true;
        } else if (toks[0] == "e") {
            if (!seen_header) fail(lineno, "'e' before header");
            if (toks.size() != 4) fail(lineno, "expected 'e <a> <b> <c>'");
            std::array<Vertex, 3> e;
            for (int i = 0; i < 3; ++i) e[i] = parse_int(toks[i + 1], lineno, "vertex id");
            std::sort(e.begin(), e.end());
            if (e[0] < 0 || e[2] >= h.n || e[0] == e[1] || e[1] == e[2])
                fail(lineno, "hyperedge must be three distinct in-range vertices");
            h.edges.push_back(e);
        } else {
            fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!seen_header) throw ValidationError("missing 'h 3uniform' header");
    if (static_cast<int>(h.edges.size()) != m)
        throw ValidationError("header promises " + std::to_string(m) + " edges, file has " +
                              std::to_string(h.edges.size()));
    return h;
}

std::string serialize_hypergraph(const Hypergraph3& h) {
    std::ostringstream out;
    out << "h 3uniform " << h.n << " " << h.edges.size() << "\n";
    for (const auto& e : h.edges) out << "e " << e[0] << " " << e[1] << " " << e[2] << "\n";
    return out.str();
}

PureProfile parse_pure_profile(const GameInstance& inst, const std::string& text) {
    const int n = inst.graph.vertex_count();
    PureProfile x(n);
    std::vector<char> assigned(n, 0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] != "buy" && toks[0] != "abstain")
            fail(lineno, "expected 'buy' or 'abstain'");
        if (toks.size() < 2) fail(lineno, "missing vertex id");
        Vertex v = parse_int(toks[1], lineno, "vertex id");
        if (v < 0 || v >= n) fail(lineno, "vertex id out of range");
        if (assigned[v]) fail(lineno, "vertex " + std::to_string(v) + " assigned twice");
        assigned[v] = 1;
        if (toks[0] == "abstain") {
            if (toks.size() != 2) fail(lineno, "'abstain' takes no targets");
            continue;
        }
        x[v].buys = true;
        for (size_t i = 2; i < toks.size(); ++i)
            x[v].targets.push_back(parse_int(toks[i], lineno, "target id"));
        std::sort(x[v].targets.begin(), x[v].targets.end());
    }
    for (Vertex v = 0; v < n; ++v)
        if (!assigned[v]) throw ValidationError("no action given for vertex " + std::to_string(v));
    validate_pure_profile(inst, x);
    return x;
}

std::string serialize_pure_profile(const PureProfile& x) {
    std::ostringstream out;
    for (Vertex v = 0; v < static_cast<int>(x.size()); ++v) {
        if (!x[v].buys) {
            out << "abstain " << v << "\n";
            continue;
        }
        out << "buy " << v;
        for (Vertex t : x[v].targets) out << " " << t;
        out << "\n";
    }
    return out.str();
}

MixedProfile parse_mixed_profile(const GameInstance& inst, const std::string& text) {
    const int n = inst.graph.vertex_count();
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const std::exception& e) {
            throw ValidationError(std::string("bad profile JSON: ") + e.what());
        }
        if (!j.contains("players") || !j["players"].is_array() ||
            static_cast<int>(j["players"].size()) != n)
            throw ValidationError("profile JSON needs a 'players' array of length n");
        MixedProfile sigma(n);
        for (Vertex v = 0; v < n; ++v) {
            const Json& pj = j["players"][v];
            sigma[v].buy_prob = pj.at("buy_prob").get<double>();
            for (const Json& nom : pj.value("nominations", Json::array())) {
                std::vector<Vertex> targets = nom.at("targets").get<std::vector<Vertex>>();
                std::sort(targets.begin(), targets.end());
                sigma[v].nominations.push_back({std::move(targets), nom.at("weight").get<double>()});
            }
        }
        validate_mixed_profile(inst, sigma);
        return sigma;
    }

    MixedProfile sigma(n);
    std::vector<char> assigned(n, 0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        Vertex v = -1;
        if (toks[0] == "mix") {
            if (toks.size() < 3) fail(lineno, "expected 'mix <v> <p> <t...>'");
            v = parse_int(toks[1], lineno, "vertex id");
            if (v < 0 || v >= n) fail(lineno, "vertex id out of range");
            if (assigned[v]) fail(lineno, "vertex " + std::to_string(v) + " assigned twice");
            sigma[v].buy_prob = parse_float(toks[2], lineno, "probability");
            std::vector<Vertex> targets;
            for (size_t i = 3; i < toks.size(); ++i)
                targets.push_back(parse_int(toks[i], lineno, "target id"));
            std::sort(targets.begin(), targets.end());
            if (sigma[v].buy_prob > 0.0 && !targets.empty())
                sigma[v].nominations = {{std::move(targets), 1.0}};
            else if (sigma[v].buy_prob > 0.0)
                sigma[v].nominations = {{{}, 1.0}};
        } else if (toks[0] == "buy") {
            if (toks.size() < 2) fail(lineno, "missing vertex id");
            v = parse_int(toks[1], lineno, "vertex id");
            if (v < 0 || v >= n) fail(lineno, "vertex id out of range");
            if (assigned[v]) fail(lineno, "vertex " + std::to_string(v) + " assigned twice");
            sigma[v].buy_prob = 1.0;
            std::vector<Vertex> targets;
            for (size_t i = 2; i < toks.size(); ++i)
                targets.push_back(parse_int(toks[i], lineno, "target id"));
            std::sort(targets.begin(), targets.end());
            sigma[v].nominations = {{std::move(targets), 1.0}};
        } else if (toks[0] == "abstain") {
            if (toks.size() != 2) fail(lineno, "'abstain' takes no targets");
            v = parse_int(toks[1], lineno, "vertex id");
            if (v < 0 || v >= n) fail(lineno, "vertex id out of range");
            if (assigned[v]) fail(lineno, "vertex " + std::to_string(v) + " assigned twice");
        } else {
            fail(lineno, "expected 'mix', 'buy' or 'abstain'");
        }
        assigned[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!assigned[v]) throw ValidationError("no action given for vertex " + std::to_string(v));
    validate_mixed_profile(inst, sigma);
    return sigma;
}

std::string serialize_mixed_profile(const MixedProfile& sigma) {
    Json j;
    j["players"] = Json::array();
    for (const auto& a : sigma) {
        Json pj;
        pj["buy_prob"] = a.buy_prob;
        pj["nominations"] = Json::array();
        for (const auto& [targets, weight] : a.nominations)
            pj["nominations"].push_back({{"targets", targets}, {"weight", weight}});
        j["players"].push_back(std::move(pj));
    }
    return j.dump(2) + "\n";
}

std::string instance_digest(const LabeledInstance& li) {
    const std::string canon = serialize_instance(li);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

Json make_report(const std::string& command, const LabeledInstance& li) {
    Json rep;
    rep["tool"] = kToolVersion;
    rep["command"] = command;
    rep["instance"] = {{"digest", instance_digest(li)},
                       {"n", li.instance.graph.vertex_count()},
                       {"m", li.instance.graph.arc_count()},
                       {"k", li.instance.k},
                       {"c", rational_to_string(li.instance.c)},
                       {"family", li.family},
                       {"parameters", li.parameters}};
    return rep;
}

std::string report_to_string(const Json& report) { return report.dump(2) + "\n"; }

Json vertices_json(const std::vector<Vertex>& vs) { return Json(vs); }

Json extension_json(const Extension& ext) {
    Json j = Json::object();
    for (const auto& [buyer, targets] : ext) j[std::to_string(buyer)] = targets;
    return j;
}

Json mixed_profile_json(const MixedProfile& sigma) {
    return Json::parse(serialize_mixed_profile(sigma));
}

}  // namespace pgg
