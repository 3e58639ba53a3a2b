#include "partalg/json_io.hpp"

#include "partalg/error.hpp"

namespace partalg {

Json to_json(const SetPartition& p) {
    Json j;
    j["n"] = p.nodes().top;
    j["m"] = p.nodes().bottom;
    Json blocks = Json::array();
    int n = p.nodes().top;
    for (const auto& blk : p.blocks()) {
        Json b = Json::array();
        for (int v : blk) {
            if (v < n)
                b.push_back(v + 1);
            else
                b.push_back(std::to_string(v - n + 1) + "'");
        }
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

SetPartition set_partition_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    int m = j.at("m").get<int>();
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : j.at("blocks")) {
        std::vector<int> b;
        for (const auto& node : blk) {
            if (node.is_number_integer()) {
                long v = node.get<long>();
                if (v < 1 || v > n) fail("nodes", "top node out of range in JSON partition");
                b.push_back(static_cast<int>(v - 1));
            } else {
                std::string s = node.get<std::string>();
                if (s.empty() || s.back() != '\'')
                    fail("syntax", "primed node must end with ' in JSON partition");
                long v = std::stol(s.substr(0, s.size() - 1));
                if (v < 1 || v > m) fail("nodes", "bottom node out of range in JSON partition");
                b.push_back(static_cast<int>(n + v - 1));
            }
        }
        blocks.push_back(std::move(b));
    }
    return SetPartition(NodeSet{n, m}, std::move(blocks));
}

Json to_json(const Diagram& d) { return to_json(d.partition()); }

Json to_json(const Poly& p) {
    Json j;
    j["var"] = "delta";
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(dec_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Poly poly_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

Json to_json(const Factorization& f) {
    Json j;
    j["unit"] = dec_string(f.unit);
    Json factors = Json::array();
    for (const auto& lf : f.factors) {
        Json e;
        e["root"] = dec_string(lf.root);
        e["mult"] = lf.multiplicity;
        factors.push_back(std::move(e));
    }
    j["factors"] = std::move(factors);
    j["residual"] = to_json(f.residual);
    return j;
}

Json to_json(const SmithForm& s) {
    Json j;
    Json factors = Json::array();
    for (const auto& p : s.invariant_factors) factors.push_back(to_json(p));
    j["invariant_factors"] = std::move(factors);
    return j;
}

Json to_json(const SparseIntMatrix& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json coo = Json::array();
    for (const auto& [r, c, v] : m.coo) coo.push_back(Json::array({r, c, dec_string(v)}));
    j["coo"] = std::move(coo);
    return j;
}

Json to_json(const LinComb& x) {
    Json j;
    j["source"] = x.source();
    j["target"] = x.target();
    Json terms = Json::array();
    for (const auto& [d, c] : x.terms()) {
        Json t;
        t["coeff"] = to_json(c);
        t["diagram"] = to_json(d);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const GramReport& r) {
    Json j;
    j["algebra"] = r.algebra == Algebra::ordinary ? "P1" : "P2";
    j["n"] = r.n;
    j["label"] = r.label;
    j["dim"] = r.dim;
    j["det"] = to_json(r.det);
    Json factors = Json::array();
    for (const auto& f : r.factorization.factors) {
        Json e;
        e["root"] = dec_string(f.root);
        e["mult"] = f.multiplicity;
        factors.push_back(std::move(e));
    }
    j["factors"] = std::move(factors);
    j["unit"] = dec_string(r.factorization.unit);
    j["degree"] = r.degree;
    j["predicted_degree"] = r.predicted;
    Json hd = Json::object();
    for (const auto& [k, v] : r.head_dims) hd[std::to_string(k)] = dec_string(v);
    j["head_dims"] = std::move(hd);
    Json checks;
    checks["degree_match"] = r.degree_match;
    checks["saturation"] = r.saturation;
    checks["unexplained_factor"] = r.unexplained_factor;
    j["checks"] = std::move(checks);
    if (r.smith) j["smith"] = to_json(*r.smith);
    return j;
}

Json to_json(const BratelliGraph& g) {
    Json j;
    Json levels = Json::array();
    for (std::size_t n = 0; n < g.levels.size(); ++n) {
        Json level;
        level["n"] = n;
        Json nodes = Json::array();
        for (const auto& node : g.levels[n]) {
            Json e;
            e["lambda"] = node.label.lambda;
            if (node.label.mu) e["mu"] = *node.label.mu;
            e["dim"] = dec_string(node.dim);
            nodes.push_back(std::move(e));
        }
        level["nodes"] = std::move(nodes);
        levels.push_back(std::move(level));
    }
    j["levels"] = std::move(levels);
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json je;
        je["level"] = e.upper_level;
        je["from"] = e.upper_index;
        je["to"] = e.lower_index;
        je["mult"] = e.multiplicity;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const SemisimpleReport& r) {
    Json j;
    j["algebra"] = r.algebra == Algebra::ordinary ? "P1" : "P2";
    j["delta"] = dec_string(r.delta);
    j["delta_in_N0"] = r.delta_in_n0;
    j["semisimple_all_n"] = r.semisimple_all_n;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.n) {
        Json f;
        f["n"] = *r.n;
        f["criterion"] = "spine criterion";
        Json bad = Json::array();
        for (long v : r.spine_bad_set) bad.push_back(v);
        f["spine_bad_set"] = std::move(bad);
        f["spine_simple"] = r.spine_simple;
        if (r.fixed_n_semisimple_known) f["semisimple"] = r.fixed_n_semisimple;
        j["fixed_n"] = std::move(f);
    }
    return j;
}

Json to_json(const OddEvenResult& r, int n) {
    Json j;
    j["n"] = n;
    j["holds"] = r.holds;
    if (r.holds) j["exponent"] = r.exponent;
    j["dim"] = r.dim;
    return j;
}

std::string gram_entry_token(const Poly& entry) {
    if (entry.is_zero()) return "0";
    if (!entry.is_monomial() || entry.leading() != 1)
        fail("internal", "Gram entries are monomials with unit coefficient");
    int d = entry.degree();
    if (d == 0) return "1";
    if (d == 1) return "d";
    return "d^" + std::to_string(d);
}

std::string gram_csv(const GramMatrix& g) {
    std::string out;
    for (const auto& row : g.entries) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += gram_entry_token(row[j]);
        }
        out += '\n';
    }
    return out;
}

std::string bratelli_dot(const BratelliGraph& g) {
    std::string out = "digraph bratelli {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t n = 0; n < g.levels.size(); ++n) {
        out += "  subgraph cluster_" + std::to_string(n) + " {\n    label=\"n=" +
               std::to_string(n) + "\";\n    rank=same;\n";
        for (std::size_t i = 0; i < g.levels[n].size(); ++i) {
            const auto& node = g.levels[n][i];
            std::string lbl = partition_text(node.label.lambda);
            if (node.label.mu) lbl += "|" + partition_text(*node.label.mu);
            lbl += " (" + dec_string(node.dim) + ")";
            out += "    v" + std::to_string(n) + "_" + std::to_string(i) + " [label=\"" + lbl +
                   "\"];\n";
        }
        out += "  }\n";
    }
    for (const auto& e : g.edges) {
        out += "  v" + std::to_string(e.upper_level) + "_" + std::to_string(e.upper_index) +
               " -> v" + std::to_string(e.upper_level - 1) + "_" + std::to_string(e.lower_index);
        if (e.multiplicity != 1) out += " [label=\"" + std::to_string(e.multiplicity) + "\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace partalg
