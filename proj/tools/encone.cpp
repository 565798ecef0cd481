#include "encone/fq.hpp"
#include "encone/shoji.hpp"
#include "encone/verify.hpp"
#include "encone/weylb.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace encone;

namespace {

json poly_json(const IntPolynomial& p) {
    json a = json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        if (!p.coeff(k).fits_slong_p())
            throw std::runtime_error("coefficient too large for JSON output");
        a.push_back(p.coeff(k).get_si());
    }
    return a;
}

json bipartition_json(const Bipartition& b) {
    return json::array({json(b.mu().parts()), json(b.nu().parts())});
}

std::string composition_str(const std::vector<int>& comp) {
    std::ostringstream os;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        if (i) os << ",";
        os << comp[i];
    }
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
}

int cmd_qn(int n, const std::string& format, const std::string& out_path) {
    auto qn = enumerate_bipartitions(n);
    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (const auto& b : qn)
            rows.push_back({{"bipartition", bipartition_json(b)},
                            {"b", b.b_stat()},
                            {"dim", b.orbit_dim()},
                            {"composition", interleaved_composition(b)}});
        os << json({{"n", n}, {"orbits", rows}}).dump(2) << "\n";
    } else if (format == "csv") {
        os << "mu,nu,b,dim,composition\n";
        for (const auto& b : qn)
            os << b.mu().str() << "," << b.nu().str() << "," << b.b_stat() << ","
               << b.orbit_dim() << ",\"" << composition_str(interleaved_composition(b))
               << "\"\n";
    } else {
        throw CLI::ValidationError("--format", "qn supports json or csv");
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_hasse(int n, const std::string& format, const std::string& out_path) {
    auto edges = hasse(n);
    auto qn = enumerate_bipartitions(n);
    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (const auto& e : edges)
            rows.push_back({{"lower", bipartition_json(e.lower)},
                            {"upper", bipartition_json(e.upper)},
                            {"type", e.type.kind},
                            {"k", e.type.k},
                            {"l", e.type.l}});
        os << json({{"n", n}, {"edges", rows}}).dump(2) << "\n";
    } else if (format == "csv") {
        os << "lower_mu,lower_nu,upper_mu,upper_nu,type,k,l\n";
        for (const auto& e : edges)
            os << e.lower.mu().str() << "," << e.lower.nu().str() << "," << e.upper.mu().str()
               << "," << e.upper.nu().str() << "," << e.type.kind << "," << e.type.k << ","
               << e.type.l << "\n";
    } else if (format == "dot") {
        os << "graph hasse_q" << n << " {\n  rankdir=BT;\n  node [shape=box];\n";
        std::map<int, std::vector<std::string>> layers;
        for (const auto& b : qn) layers[b.orbit_dim()].push_back("\"" + b.str() + "\"");
        for (const auto& [dim, nodes] : layers) {
            os << "  { rank=same;";
            for (const auto& id : nodes) os << " " << id << ";";
            os << " }  // dim " << dim << "\n";
        }
        for (const auto& e : edges)
            os << "  \"" << e.lower.str() << "\" -- \"" << e.upper.str() << "\" [label=\""
               << e.type.kind << "\"];\n";
        os << "}\n";
    } else {
        throw CLI::ValidationError("--format", "hasse supports json, csv or dot");
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_tables(int n, const std::string& which, const std::string& format,
               const std::string& out_path, bool large) {
    const KostkaTable& table = kostka_table(n, large);
    const auto& labels = table.labels();
    json rows = json::array();
    std::ostringstream csv;
    auto add_row = [&](const json& jrow, const std::string& crow) {
        rows.push_back(jrow);
        csv << crow << "\n";
    };
    if (which == "theta") {
        csv << "orbit,theta\n";
        for (const auto& b : labels) {
            IntPolynomial th = table.theta(b);
            add_row({{"orbit", bipartition_json(b)}, {"theta", poly_json(th)}},
                    b.str() + ",\"" + th.str() + "\"");
        }
    } else if (which == "omega") {
        CharacterTable ct(n);
        PolyMatrix omega = ct.omega_matrix();
        csv << "row,col,omega\n";
        for (const auto& a : labels)
            for (const auto& b : labels) {
                auto w = *omega.at(a, b).as_polynomial();
                add_row({{"row", bipartition_json(a)},
                         {"col", bipartition_json(b)},
                         {"entry", poly_json(w)}},
                        a.str() + "," + b.str() + ",\"" + w.str() + "\"");
            }
    } else if (which == "kostka" || which == "ic" || which == "pi") {
        csv << "upper,lower," << which << "\n";
        for (const auto& a : labels)
            for (const auto& b : labels) {
                IntPolynomial val = which == "kostka" ? table.kostka(a, b)
                                    : which == "ic"   ? table.ic(a, b)
                                                      : table.pi(a, b);
                if (val.is_zero() && !(a == b)) continue;
                add_row({{"upper", bipartition_json(a)},
                         {"lower", bipartition_json(b)},
                         {"value", poly_json(val)}},
                        a.str() + "," + b.str() + ",\"" + val.str() + "\"");
            }
    } else if (which == "hall") {
        csv << "ambient,rho,sigma,hall\n";
        for (const auto& amb : labels)
            for (int m = 0; m <= n; ++m)
                for (const auto& rho : enumerate_partitions(m))
                    for (const auto& sigma : enumerate_partitions(n - m)) {
                        const IntPolynomial& g = table.hall(rho, sigma, amb);
                        if (g.is_zero()) continue;
                        add_row({{"ambient", bipartition_json(amb)},
                                 {"rho", json(rho.parts())},
                                 {"sigma", json(sigma.parts())},
                                 {"hall", poly_json(g)}},
                                amb.str() + "," + rho.str() + "," + sigma.str() + ",\"" +
                                    g.str() + "\"");
                    }
    } else {
        throw CLI::ValidationError("--which",
                                   "expected one of kostka, ic, pi, theta, hall, omega");
    }
    std::ostringstream os;
    if (format == "json")
        os << json({{"n", n}, {"table", which}, {"rows", rows}}).dump(2) << "\n";
    else if (format == "csv")
        os << csv.str();
    else
        throw CLI::ValidationError("--format", "tables supports json or csv");
    emit(os.str(), out_path);
    return 0;
}

int cmd_verify(const RunConfig& config) {
    VerifyOutcome outcome = run_verification(config);
    for (const auto& [name, rep] : outcome.checks) {
        std::cout << (rep.ok ? "[PASS] " : "[FAIL] ") << name << " (" << rep.cases_checked
                  << " cases)\n";
        for (const auto& m : rep.mismatches) std::cerr << "       " << m << "\n";
    }
    std::cout << (outcome.ok ? "verification passed" : "verification FAILED") << "\n";
    return outcome.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics and polynomial invariants of the enhanced nilpotent cone"};
    app.require_subcommand(1);

    int n = 4;
    std::string format = "json", out_path, which = "kostka";
    bool large = false, extended = false;
    std::string q_list = "2,3";

    auto* qn_cmd = app.add_subcommand("qn", "List Q_n with b, dim and composition");
    qn_cmd->add_option("--n", n)->check(CLI::NonNegativeNumber)->required();
    qn_cmd->add_option("--format", format);
    qn_cmd->add_option("--out", out_path);

    auto* hasse_cmd = app.add_subcommand("hasse", "Covering edges of Q_n with type labels");
    hasse_cmd->add_option("--n", n)->check(CLI::NonNegativeNumber)->required();
    hasse_cmd->add_option("--format", format);
    hasse_cmd->add_option("--out", out_path);

    auto* tables_cmd = app.add_subcommand("tables", "Dump a polynomial table");
    tables_cmd->add_option("--n", n)->check(CLI::NonNegativeNumber)->required();
    tables_cmd->add_option("--which", which);
    tables_cmd->add_option("--format", format);
    tables_cmd->add_option("--out", out_path);
    tables_cmd->add_flag("--large", large, "allow n = 6");

    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    verify_cmd->add_option("--n", n)->check(CLI::NonNegativeNumber)->required();
    verify_cmd->add_option("--q", q_list, "comma-separated primes");
    verify_cmd->add_flag("--enumerate", extended, "include the n=4, q=2 enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (qn_cmd->parsed()) return cmd_qn(n, format, out_path);
        if (hasse_cmd->parsed()) return cmd_hasse(n, format, out_path);
        if (tables_cmd->parsed()) return cmd_tables(n, which, format, out_path, large);
        if (verify_cmd->parsed()) {
            RunConfig config;
            config.n = n;
            config.extended = extended;
            config.qs.clear();
            std::stringstream ss(q_list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                int q = std::stoi(item);
                if (!fq::is_prime(q)) {
                    std::cerr << "error: q = " << q << " is not prime\n";
                    return 2;
                }
                config.qs.push_back(q);
            }
            if (config.qs.empty()) {
                std::cerr << "error: empty q list\n";
                return 2;
            }
            return cmd_verify(config);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fq::BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
