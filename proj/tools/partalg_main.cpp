#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "partalg/error.hpp"
#include "partalg/exprparse.hpp"
#include "partalg/json_io.hpp"

using namespace partalg;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::optional<std::string> config_file;
    long enumeration_cap = -1;
    long potts_capacity = -1;
    long smith_limit = -1;

    Config config() const {
        Config cfg = config_file ? Config::from_file(*config_file) : Config::from_env();
        if (enumeration_cap > 0) cfg.enumeration_cap = static_cast<std::uint64_t>(enumeration_cap);
        if (potts_capacity > 0) cfg.potts_capacity = static_cast<std::uint64_t>(potts_capacity);
        if (smith_limit > 0) cfg.smith_dim_limit = static_cast<int>(smith_limit);
        return cfg;
    }
};

Algebra algebra_of(const std::string& name) {
    if (name == "P1" || name == "ordinary") return Algebra::ordinary;
    if (name == "P2" || name == "tonal") return Algebra::tonal;
    fail("range", "unknown algebra '" + name + "' (use P1 or P2)");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_enum(const GlobalOpts& g, int n, int m, bool even, int tonal_d) {
    Config cfg = g.config();
    std::vector<SetPartition> parts;
    if (even) {
        if (m != 0) fail("range", "--even applies to one-row partitions (m = 0)");
        parts = enumerate_even_partitions(n, cfg);
    } else {
        parts = enumerate_partitions(n, m, cfg);
        if (tonal_d > 0) {
            std::erase_if(parts, [&](const SetPartition& p) { return !is_tonal(p, tonal_d); });
        }
    }
    if (g.format == "json") {
        Json j;
        j["n"] = n;
        j["m"] = m;
        j["count"] = parts.size();
        Json arr = Json::array();
        for (const auto& p : parts) arr.push_back(to_json(p));
        j["partitions"] = std::move(arr);
        emit(j);
    } else {
        for (const auto& p : parts) std::cout << print_diagram(Diagram(p)) << "\n";
    }
    return 0;
}

int run_compose(const GlobalOpts& g, const std::string& expr) {
    LinComb v = parse_expression(expr);
    if (g.format == "json") {
        emit(to_json(v));
    } else {
        if (v.is_zero()) {
            std::cout << "0\n";
            return 0;
        }
        bool first = true;
        std::string out;
        for (const auto& [d, c] : v.terms()) {
            if (!first) out += " + ";
            first = false;
            std::string cs = c.to_string();
            if (cs != "1") out += "(" + cs + ") ";
            out += print_diagram(d);
        }
        std::cout << out << "\n";
    }
    return 0;
}

int run_gram(const GlobalOpts& g, const std::string& algebra, int n, bool report, bool smith) {
    Config cfg = g.config();
    Algebra alg = algebra_of(algebra);
    if (report || smith) {
        GramReport rep = gram_report(alg, n, cfg, smith);
        if (g.format == "text") {
            std::cout << "algebra " << algebra << " n=" << n << " label " << rep.label
                      << " dim " << rep.dim << "\n";
            std::cout << "det = ";
            std::string prod;
            if (rep.factorization.unit != 1) prod = dec_string(rep.factorization.unit);
            for (const auto& f : rep.factorization.factors) {
                if (!prod.empty()) prod += " * ";
                std::string base = f.root == 0 ? "d" : "(d - " + dec_string(f.root) + ")";
                prod += base;
                if (f.multiplicity != 1) prod += "^" + std::to_string(f.multiplicity);
            }
            if (rep.factorization.residual.degree() > 0)
                prod += " * [" + rep.factorization.residual.to_string() + "]";
            std::cout << (prod.empty() ? "1" : prod) << "\n";
            std::cout << "degree " << rep.degree << " predicted " << rep.predicted
                      << (rep.degree_match ? " (match)" : " (MISMATCH)") << "\n";
            std::cout << "saturation " << (rep.saturation ? "ok" : "FAILED") << "\n";
            if (rep.smith) {
                std::cout << "smith invariant factors:\n";
                for (const auto& p : rep.smith->invariant_factors)
                    std::cout << "  " << p.to_string() << "\n";
            }
        } else {
            emit(to_json(rep));
        }
        return 0;
    }
    GramMatrix gm = gram_matrix(spine_basis(alg, n, cfg));
    if (g.format == "csv") {
        std::cout << gram_csv(gm);
    } else if (g.format == "json") {
        Json j;
        j["algebra"] = algebra;
        j["n"] = n;
        j["dim"] = gm.basis.dim();
        Json rows = Json::array();
        for (const auto& row : gm.entries) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(gram_entry_token(e));
            rows.push_back(std::move(r));
        }
        j["entries"] = std::move(rows);
        emit(j);
    } else {
        std::cout << gram_csv(gm);
    }
    return 0;
}

int run_potts(const GlobalOpts& g, int q, int n, bool signed_group, bool rank,
              const std::string& image_expr) {
    Config cfg = g.config();
    if (!image_expr.empty()) {
        SparseIntMatrix m = potts_image(parse_diagram(image_expr), q, cfg);
        if (g.format == "json") {
            emit(to_json(m));
        } else {
            auto d = m.dense();
            for (const auto& row : d) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    std::cout << (j ? " " : "") << dec_string(row[j]);
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (rank) {
        std::vector<SetPartition> tops = signed_group ? enumerate_even_partitions(n, cfg)
                                                      : enumerate_partitions(n, 0, cfg);
        std::vector<Diagram> cols;
        for (const auto& t : tops) cols.emplace_back(t);
        int r = potts_span_rank(cols, q, cfg);
        if (g.format == "json") {
            Json j;
            j["q"] = q;
            j["n"] = n;
            j["signed"] = signed_group;
            j["rank"] = r;
            emit(j);
        } else {
            std::cout << r << "\n";
        }
        return 0;
    }
    Int orbits = orbit_count(q, n, signed_group, cfg);
    if (g.format == "json") {
        Json j;
        j["q"] = q;
        j["n"] = n;
        j["signed"] = signed_group;
        j["orbits"] = dec_string(orbits);
        emit(j);
    } else {
        std::cout << dec_string(orbits) << "\n";
    }
    return 0;
}

int run_bratelli(const GlobalOpts& g, const std::string& algebra, int n_max) {
    BratelliGraph graph = bratelli(algebra_of(algebra), n_max);
    if (g.format == "dot")
        std::cout << bratelli_dot(graph);
    else if (g.format == "json")
        emit(to_json(graph));
    else {
        for (std::size_t n = 0; n < graph.levels.size(); ++n) {
            std::cout << "n=" << n << ":";
            for (const auto& node : graph.levels[n])
                std::cout << " " << node.label.text() << "=" << dec_string(node.dim);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_dims(const GlobalOpts& g, const std::string& what, const std::vector<long>& args) {
    Int v;
    if (what == "bell") {
        if (args.size() != 1) fail("range", "bell takes one argument");
        v = bell(static_cast<int>(args[0]));
    } else if (what == "stirling") {
        if (args.size() != 2) fail("range", "stirling takes two arguments");
        v = stirling2(static_cast<int>(args[0]), static_cast<int>(args[1]));
    } else if (what == "tcount") {
        if (args.size() != 2) fail("range", "tcount takes two arguments");
        v = t_count(static_cast<int>(args[0]), static_cast<int>(args[1]));
    } else {
        fail("range", "unknown counting sequence '" + what + "'");
    }
    if (g.format == "json") {
        Json j;
        j["what"] = what;
        j["args"] = args;
        j["value"] = dec_string(v);
        emit(j);
    } else {
        std::cout << dec_string(v) << "\n";
    }
    return 0;
}

int run_semisimple(const GlobalOpts& g, const std::string& algebra, const std::string& delta,
                   std::optional<int> n) {
    SemisimpleReport rep = semisimplicity_verdict(algebra_of(algebra), parse_rational(delta), n);
    if (g.format == "json") {
        emit(to_json(rep));
    } else {
        std::cout << "semisimple for all n: " << (rep.semisimple_all_n ? "yes" : "no") << "\n";
        if (!rep.note.empty()) std::cout << rep.note << "\n";
        if (rep.n) {
            std::cout << "spine bad set at n=" << *rep.n << ": {";
            bool first = true;
            for (long v : rep.spine_bad_set) {
                if (!first) std::cout << ",";
                first = false;
                std::cout << v;
            }
            std::cout << "}; spine simple: " << (rep.spine_simple ? "yes" : "no") << "\n";
            if (rep.fixed_n_semisimple_known)
                std::cout << "fixed-n verdict: " << (rep.fixed_n_semisimple ? "semisimple" : "not semisimple")
                          << "\n";
        }
    }
    return 0;
}

int run_oddeven(const GlobalOpts& g, int n) {
    Config cfg = g.config();
    OddEvenResult r = odd_even_check(n, cfg);
    if (g.format == "json") {
        emit(to_json(r, n));
    } else {
        if (r.holds)
            std::cout << "holds: Gamma_" << n + 1 << "((),()) = d^" << r.exponent << " * Gamma_"
                      << n << "((1),()) entrywise, dim " << r.dim << "\n";
        else
            std::cout << "no uniform scalar relation found\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in partition algebras P_n and 2-tonal P^2_n"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "Output format: text|json|csv|dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("--config", g.config_file, "Config file (key=value lines)");
    app.add_option("--cap", g.enumeration_cap, "Enumeration cap override");
    app.add_option("--potts-cap", g.potts_capacity, "Potts capacity override");
    app.add_option("--smith-limit", g.smith_limit, "Smith dimension limit override");

    // enum
    auto* c_enum = app.add_subcommand("enum", "Enumerate set partitions of n top, m bottom nodes");
    int e_n = 0, e_m = 0, e_tonal = 0;
    bool e_even = false;
    c_enum->add_option("n", e_n)->required();
    c_enum->add_option("m", e_m);
    c_enum->add_flag("--even", e_even, "Only even-block partitions (m = 0)");
    c_enum->add_option("--tonal", e_tonal, "Only d-tonal partitions");

    auto* c_compose = app.add_subcommand("compose", "Evaluate a diagram expression");
    std::string expr;
    c_compose->add_option("expr", expr)->required();

    auto* c_gram = app.add_subcommand("gram", "Spine Gram matrix / report");
    std::string gr_alg = "P1";
    int gr_n = 2;
    bool gr_report = false, gr_smith = false;
    c_gram->add_option("--algebra", gr_alg)->required();
    c_gram->add_option("--n", gr_n)->required();
    c_gram->add_flag("--report", gr_report);
    c_gram->add_flag("--smith", gr_smith);

    auto* c_potts = app.add_subcommand("potts", "Potts functor images, ranks and orbit counts");
    int p_q = 2, p_n = 0;
    bool p_signed = false, p_rank = false;
    std::string p_image;
    c_potts->add_option("--q", p_q)->required();
    c_potts->add_option("--n", p_n);
    c_potts->add_flag("--signed", p_signed);
    c_potts->add_flag("--rank", p_rank);
    c_potts->add_option("--image", p_image, "Diagram literal to map");

    auto* c_brat = app.add_subcommand("bratelli", "Restriction graph of standard modules");
    std::string b_alg = "P1";
    int b_nmax = 4;
    c_brat->add_option("--algebra", b_alg)->required();
    c_brat->add_option("--n-max", b_nmax)->required();

    auto* c_dims = app.add_subcommand("dims", "Counting sequences bell|stirling|tcount");
    std::string d_what;
    std::vector<long> d_args;
    c_dims->add_option("--what", d_what)->required();
    c_dims->add_option("--args", d_args)->expected(-1);

    auto* c_semi = app.add_subcommand("semisimple", "Semisimplicity verdicts");
    std::string s_alg = "P2", s_delta = "0";
    int s_n = -1;
    c_semi->add_option("--algebra", s_alg)->required();
    c_semi->add_option("--delta", s_delta)->required();
    c_semi->add_option("--n", s_n);

    auto* c_oe = app.add_subcommand("oddeven", "Odd-even Gram matrix relation");
    int oe_n = 1;
    c_oe->add_option("--n", oe_n)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (*c_enum) return run_enum(g, e_n, e_m, e_even, e_tonal);
        if (*c_compose) return run_compose(g, expr);
        if (*c_gram) return run_gram(g, gr_alg, gr_n, gr_report, gr_smith);
        if (*c_potts) return run_potts(g, p_q, p_n, p_signed, p_rank, p_image);
        if (*c_brat) return run_bratelli(g, b_alg, b_nmax);
        if (*c_dims) return run_dims(g, d_what, d_args);
        if (*c_semi)
            return run_semisimple(g, s_alg, s_delta,
                                  s_n >= 0 ? std::optional<int>(s_n) : std::nullopt);
        if (*c_oe) return run_oddeven(g, oe_n);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const DomainError& e) {
        Json err;
        err["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = {{"kind", "internal"}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 2;
    }
}
