#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jacobi/cocycle_solver.hpp"
#include "jacobi/errors.hpp"
#include "jacobi/jacobi_analysis.hpp"
#include "jacobi/verify.hpp"

namespace jacobi {
namespace {

using nlohmann::json;

// Every printed number goes through this: 10 significant digits, no -0.
double round10(double x) {
    if (!std::isfinite(x)) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", round10(x));
    return buf;
}

// Parts below 1e-12 |z| are rounding noise and print as 0.
Complex clean(Complex z) {
    const double cut = 1e-12 * std::abs(z);
    return {std::abs(z.real()) <= cut ? 0.0 : round10(z.real()), std::abs(z.imag()) <= cut ? 0.0 : round10(z.imag())};
}

std::string fmt(Complex z) {
    const Complex c = clean(z);
    if (c.imag() == 0.0) return fmt(c.real());
    if (c.real() == 0.0) return fmt(c.imag()) + "i";
    return fmt(c.real()) + (c.imag() < 0 ? " - " : " + ") + fmt(std::abs(c.imag())) + "i";
}

json to_json(Complex z) {
    const Complex c = clean(z);
    return json::array({c.real(), c.imag()});
}

Complex parse_complex(const std::string& s) {
    std::istringstream in(s);
    double re = 0, im = 0;
    char comma = 0;
    if (!(in >> re)) throw InvalidArgument("cannot parse complex number '" + s + "' (expected re[,im])");
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) throw InvalidArgument("cannot parse complex number '" + s + "' (expected re[,im])");
    }
    in >> std::ws;
    if (!in.eof()) throw InvalidArgument("trailing characters in '" + s + "'");
    return {re, im};
}

GroupElement parse_matrix(const std::string& s) {
    std::vector<long> v;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            v.push_back(std::stol(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::logic_error&) {
            throw InvalidArgument("matrix entries must be integers: '" + s + "'");
        }
    }
    if (v.size() != 4) throw InvalidArgument("matrix must be given as a,b,c,d");
    return GroupElement(v[0], v[1], v[2], v[3]);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string column_name(int m, int k, int col) {
    const int nu = col / (k - 1), n = k - 2 - col % (k - 1);
    if (m == 1) return std::string(1, nu == 0 ? 'a' : 'b') + std::to_string(n);
    return "c" + std::to_string(nu) + "_" + std::to_string(n);
}

struct Options {
    int k = 0, index = 1, chi = 0, nu = 0;
    std::string tau = "0,1", z = "0", s = "2", matrix, coeffs, left, right, cosets, suite;
    bool json = false;
};

int cmd_wspace(const Options& o, const PrecisionConfig& cfg, std::ostream& out) {
    const WSpaceBasis W = solve_w_space(o.k, o.index, Multiplier::power(o.chi), cfg);
    double residual = 0;
    for (double r : W.residuals) residual = std::max(residual, r);
    if (o.json) {
        json basis = json::array(), vectors = json::array();
        for (const auto& P : W.basis) {
            json row = json::array();
            for (Complex c : table_row(P)) row.push_back(to_json(c));
            basis.push_back(row);
            vectors.push_back(json::parse(P.to_json()));
        }
        for (auto& v : vectors)
            for (auto& r : v["rows"])
                for (auto& c : r["coeffs"]) c = to_json(Complex(c[0].get<double>(), c[1].get<double>()));
        json j{{"k", o.k}, {"index", o.index}, {"chi", o.chi}, {"dim", W.dim()}, {"basis", basis},
               {"vectors", vectors}, {"residual", round10(residual)},
               {"smallest_singular_value", round10(W.smallest_singular_value())}};
        out << j.dump() << "\n";
        return 0;
    }
    out << "dim " << W.dim() << "\n";
    if (W.dim() > 0) {
        const int cols = 2 * o.index * (o.k - 1);
        std::vector<std::string> header{""};
        for (int c = 0; c < cols; ++c) header.push_back(column_name(o.index, o.k, c));
        std::vector<std::vector<std::string>> rows{header};
        for (const auto& P : W.basis) {
            std::vector<std::string> row{"chi" + std::to_string(o.chi)};
            for (Complex c : table_row(P)) row.push_back(fmt(c));
            rows.push_back(row);
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "  " : "") << row[c];
                if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
            }
            out << "\n";
        }
    }
    out << "residual " << fmt(residual) << "\n";
    out << "smallest singular value " << fmt(W.smallest_singular_value()) << "\n";
    return 0;
}

int cmd_pairing(const Options& o, const PrecisionConfig& cfg, std::ostream& out) {
    const Multiplier mult = Multiplier::power(o.chi);
    const WSpaceBasis W = solve_w_space(o.k, o.index, mult, cfg);
    std::vector<Complex> values;
    for (const auto& P : W.basis) {
        const CosetFunction C = CosetFunction::constant(P);
        values.push_back(mock_pairing(C, C, mult, {}, cfg));
    }
    if (o.json) {
        json arr = json::array();
        for (Complex v : values) arr.push_back(to_json(v));
        out << json{{"k", o.k}, {"index", o.index}, {"chi", o.chi}, {"dim", W.dim()}, {"values", arr}}.dump() << "\n";
        return 0;
    }
    if (values.empty()) out << "dim 0: no basis to pair\n";
    for (Complex v : values) out << fmt(v) << "\n";
    return 0;
}

int cmd_theta(const Options& o, const PrecisionConfig& cfg, std::ostream& out) {
    const Complex v = theta_eval(ThetaIndex::make(o.index, o.nu), parse_complex(o.tau), parse_complex(o.z), cfg);
    if (o.json)
        out << json{{"index", o.index}, {"nu", o.nu}, {"value", to_json(v)}}.dump() << "\n";
    else
        out << fmt(v) << "\n";
    return 0;
}

int cmd_eta(const Options& o, const PrecisionConfig& cfg, std::ostream& out) {
    const Complex v = dedekind_eta(parse_complex(o.tau), cfg);
    if (o.json)
        out << json{{"value", to_json(v)}}.dump() << "\n";
    else
        out << fmt(v) << "\n";
    return 0;
}

int cmd_chi(const Options& o, const PrecisionConfig& cfg, std::ostream& out) {
    const Multiplier mult = Multiplier::power(o.chi);
    const GroupElement g = parse_matrix(o.matrix);
    const Complex v = chi(mult, g, cfg);
    const int e = chi_exponent48(mult, g, cfg);
    if (o.json)
        out << json{{"chi", o.chi}, {"value", to_json(v)}, {"exponent48", e}}.dump() << "\n";
    else
        out << fmt(v) << "  (exp(2 pi i " << e << "/48))\n";
    return 0;
}

int cmd_lseries(const Options& o, const PrecisionConfig&, std::ostream& out) {
    const SkewFourierSeries F = SkewFourierSeries::from_json(read_file(o.coeffs));
    const LValue L = partial_L(F, ThetaIndex::make(F.m, o.nu), parse_complex(o.s));
    if (o.json) {
        out << json{{"nu", o.nu}, {"value", to_json(L.value)}, {"empty_class", L.empty_class}}.dump() << "\n";
        return 0;
    }
    out << fmt(L.value) << (L.empty_class ? "  (no terms in this class)" : "") << "\n";
    return 0;
}

int cmd_bilinear(const Options& o, const PrecisionConfig& cfg, std::ostream& out, bool haberland) {
    const SkewFourierSeries F = SkewFourierSeries::from_json(read_file(o.left));
    const SkewFourierSeries G = SkewFourierSeries::from_json(read_file(o.right));
    const CosetTable table = o.cosets.empty() ? CosetTable() : CosetTable::from_json(read_file(o.cosets));
    const Complex v = haberland ? haberland_rhs(F, G, table, cfg) : petersson(F, G, table, cfg);
    if (o.json)
        out << json{{"value", to_json(v)}}.dump() << "\n";
    else
        out << fmt(v) << "\n";
    return 0;
}

int cmd_verify(const Options& o, const PrecisionConfig& cfg, std::ostream& out) {
    const std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    bool ok = true;
    json reports = json::array();
    for (const auto& name : names) {
        const SuiteReport r = run_suite(name, cfg);
        ok = ok && r.passed();
        if (o.json) {
            json checks = json::array();
            for (const auto& c : r.checks)
                checks.push_back({{"name", c.name}, {"passed", c.passed}, {"residual", round10(c.residual)},
                                  {"tolerance", c.tolerance}});
            reports.push_back({{"suite", name}, {"passed", r.passed()}, {"checks", checks}});
            continue;
        }
        for (const auto& c : r.checks)
            out << (c.passed ? "PASS  " : "FAIL  ") << name << ": " << c.name << "  residual " << fmt(c.residual)
                << "  tol " << fmt(c.tolerance) << "\n";
        out << name << ": " << (r.passed() ? "pass" : "fail") << "\n";
    }
    if (o.json) out << reports.dump() << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Period functions and pairings for Jacobi forms with eta multipliers"};
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Print JSON"); };
    auto add_kmc = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "Weight parameter k (form weight k + 1/2)")->required()->check(CLI::Range(2, 64));
        sub->add_option("--index", o.index, "Index m")->check(CLI::Range(1, 64));
        sub->add_option("--chi", o.chi, "Multiplier chi_i, i mod 24")->required();
    };

    auto* wspace = app.add_subcommand("wspace", "Basis of the period-function space W");
    add_kmc(wspace);
    add_json(wspace);

    auto* pairing = app.add_subcommand("pairing", "Pairing {F+, F+} for each W basis vector");
    add_kmc(pairing);
    add_json(pairing);

    auto* theta = app.add_subcommand("theta-eval", "Evaluate theta_{m, nu/2m}(tau, z)");
    theta->add_option("--index", o.index, "Index m")->check(CLI::PositiveNumber);
    theta->add_option("--nu", o.nu, "Component nu");
    theta->add_option("--tau", o.tau, "tau as re,im");
    theta->add_option("--z", o.z, "z as re,im");
    add_json(theta);

    auto* eta = app.add_subcommand("eta-eval", "Evaluate the Dedekind eta function");
    eta->add_option("--tau", o.tau, "tau as re,im");
    add_json(eta);

    auto* chi_cmd = app.add_subcommand("chi", "Multiplier chi_i(g)");
    chi_cmd->add_option("--chi", o.chi, "Multiplier chi_i")->required();
    chi_cmd->add_option("--matrix", o.matrix, "g as a,b,c,d")->required();
    add_json(chi_cmd);

    auto* lseries = app.add_subcommand("lseries", "Partial L-value of a coefficient file");
    lseries->add_option("--coeffs", o.coeffs, "Coefficient JSON file")->required();
    lseries->add_option("--nu", o.nu, "Theta component nu");
    lseries->add_option("--s", o.s, "s as re[,im]");
    add_json(lseries);

    std::vector<CLI::App*> bilinear;
    for (const char* name : {"petersson", "haberland-rhs"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "petersson"
                                                 ? "Petersson inner product of two skew-holomorphic forms"
                                                 : "Double-ray integral side of the Haberland identity");
        sub->add_option("--left", o.left, "Coefficient JSON file of F")->required();
        sub->add_option("--right", o.right, "Coefficient JSON file of G")->required();
        sub->add_option("--coset-table", o.cosets, "JSON list of coset representatives [a,b,c,d]");
        add_json(sub);
        bilinear.push_back(sub);
    }

    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(choices));
    add_json(verify);

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        for (auto* sub : app.get_subcommands())
            if (sub->parsed()) {
                err << sub->help();
                return 1;
            }
        err << app.help();
        return 1;
    }

    try {
        const PrecisionConfig cfg = PrecisionConfig::from_env();
        cfg.validate();
        if (wspace->parsed()) return cmd_wspace(o, cfg, out);
        if (pairing->parsed()) return cmd_pairing(o, cfg, out);
        if (theta->parsed()) return cmd_theta(o, cfg, out);
        if (eta->parsed()) return cmd_eta(o, cfg, out);
        if (chi_cmd->parsed()) return cmd_chi(o, cfg, out);
        if (lseries->parsed()) return cmd_lseries(o, cfg, out);
        if (bilinear[0]->parsed()) return cmd_bilinear(o, cfg, out, false);
        if (bilinear[1]->parsed()) return cmd_bilinear(o, cfg, out, true);
        if (verify->parsed()) return cmd_verify(o, cfg, out);
    } catch (const ValidationError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace jacobi
