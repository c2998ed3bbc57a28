// Command-line front end: reproduces the published tables and coefficient
// blocks as machine-readable CSV/JSON and exposes the library operations.
//
// Exit codes: 0 all deltas within tolerance, 2 a numeric delta exceeded
// tolerance, 3 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zsqm/analysis.hpp"
#include "zsqm/orthopoly.hpp"
#include "zsqm/potentials.hpp"
#include "zsqm/specfun.hpp"
#include "zsqm/spectral.hpp"
#include "zsqm/verify.hpp"

using json = nlohmann::json;
using namespace zsqm;
using potentials::Family;
using potentials::PotentialSpec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDelta = 2;
constexpr int kExitUsage = 3;

// 12 significant digits, '.' decimal: bit-exactness of outputs is defined
// at the text level.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Output {
    std::string path; // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::fputs(text.c_str(), stdout);
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
};

struct CommonOpts {
    std::string format = "csv";
    std::string output;
    std::string config;
    double tol = 1e-3;
};

// Optional JSON config: supplies defaults, flags override, unknown keys
// rejected.
void apply_config(CommonOpts& opts, double* A, const CLI::App& app) {
    if (opts.config.empty()) return;
    std::ifstream f(opts.config);
    if (!f) throw std::runtime_error("cannot open config: " + opts.config);
    json j = json::parse(f);
    for (const auto& [key, value] : j.items()) {
        if (key == "format") {
            if (app.count("--format") == 0) opts.format = value.get<std::string>();
        } else if (key == "output") {
            if (app.count("--output") == 0) opts.output = value.get<std::string>();
        } else if (key == "tol") {
            if (app.count("--tol") == 0) opts.tol = value.get<double>();
        } else if (key == "A") {
            if (A && app.count("--A") == 0) *A = value.get<double>();
        } else {
            throw std::runtime_error("config: unknown key '" + key + "'");
        }
    }
}

struct TableRow {
    std::string label;
    std::string quantity;
    double computed;
    std::optional<double> expected;
    std::string note;
};

int emit_table(const std::vector<TableRow>& rows, const CommonOpts& opts) {
    bool exceeded = false;
    for (const auto& r : rows)
        if (r.expected && std::abs(r.computed - *r.expected) > opts.tol) exceeded = true;

    std::ostringstream s;
    if (opts.format == "json") {
        json j = json::array();
        for (const auto& r : rows) {
            json e{{"label", r.label}, {"quantity", r.quantity}, {"computed", r.computed}};
            if (r.expected) {
                e["expected"] = *r.expected;
                e["delta"] = r.computed - *r.expected;
            }
            if (!r.note.empty()) e["note"] = r.note;
            j.push_back(e);
        }
        s << j.dump(2) << "\n";
    } else {
        s << "label,quantity,computed,expected,delta,note\n";
        for (const auto& r : rows) {
            s << r.label << ',' << r.quantity << ',' << num(r.computed) << ',';
            if (r.expected)
                s << num(*r.expected) << ',' << num(r.computed - *r.expected);
            else
                s << ',';
            s << ',' << r.note << "\n";
        }
    }
    Output{opts.output}.write(s.str());
    return exceeded ? kExitDelta : kExitOk;
}

int cmd_table(const std::string& name, double A, const CommonOpts& opts) {
    std::vector<TableRow> rows;
    if (name == "morse_levels") {
        PotentialSpec morse{Family::Morse, A};
        const int k = static_cast<int>(A);
        const auto r = spectral::solve_spectrum(morse, {-4.0, 14.0, 4001}, k, 1e-3);
        for (int n = 0; n < k; ++n) {
            rows.push_back({"n=" + std::to_string(n), "E_n", r.eigenvalues[n],
                            spectral::morse_exact_energy(A, n), ""});
            if (n > 0)
                rows.push_back({"n=" + std::to_string(n), "swkb_n",
                                spectral::swkb_quantization(A, spectral::morse_exact_energy(A, n)),
                                static_cast<double>(n), ""});
        }
        rows.push_back({"n=" + std::to_string(k), "E_n (first unbound, algebraic)",
                        spectral::morse_exact_energy(A, k), A * A, ""});
    } else if (name == "uncertainty") {
        struct Ref {
            Family f;
            const char* n;
            double v[6];
            const char* note;
        };
        const Ref refs[] = {
            {Family::Morse, "morse", {1.27036, 3.25876, 1.28255, 0.25, 0.5, 0.641275}, ""},
            {Family::RiemannI, "riemann1",
             {0.918522, 2.34964, 1.22717, 0.306513, 0.553637, 0.679408},
             "reference product uses dx*dp; the printed .67408 drops a digit"},
            {Family::RiemannII, "riemann2",
             {0.156371, 0.303422, 0.528176, 1.0771, 1.03783, 0.548158}, ""},
            {Family::XiI, "xi1", {0.0, 0.0245801, 0.15678, 10.2076, 3.19493, 0.500902}, ""},
            {Family::XiII, "xi2", {0.0, 0.0677675, 0.260322, 3.70515, 1.92488, 0.501088}, ""},
        };
        PotentialSpec sho = PotentialSpec::standard(Family::SHO);
        rows.push_back({"sho", "dp*dx", analysis::uncertainty_product(sho), 0.5, "omega-independent"});
        const char* qn[6] = {"<x>", "<x2>", "dx", "<p2>", "dp", "dp*dx"};
        for (const auto& ref : refs) {
            PotentialSpec spec = PotentialSpec::standard(ref.f);
            const auto xm = analysis::position_moments(spec);
            const auto pm = analysis::momentum_moments(spec);
            const double got[6] = {xm.mean, xm.second,  xm.spread,
                                   pm.second, pm.spread, xm.spread * pm.spread};
            for (int i = 0; i < 6; ++i)
                rows.push_back({ref.n, qn[i], got[i], ref.v[i], i == 5 ? ref.note : ""});
        }
    } else if (name == "shannon") {
        struct Ref {
            Family f;
            const char* n;
            double v[3];
        };
        const Ref refs[] = {
            {Family::Morse, "morse", {1.57722, 0.693147, 2.27036}},
            {Family::RiemannI, "riemann1", {1.5121, 0.781932, 2.29403}},
            {Family::RiemannII, "riemann2", {0.745831, 1.44866, 2.19449}},
            {Family::XiI, "xi1", {-0.434395, 2.58012, 2.14573}},
            {Family::XiII, "xi2", {0.0726135, 2.07331, 2.14593}},
        };
        const auto sho = analysis::shannon_entropies(PotentialSpec::standard(Family::SHO));
        rows.push_back({"sho", "S_x+S_p", sho.sum, 2.14473, "1 + log(pi)"});
        const char* qn[3] = {"S_x", "S_p", "S_x+S_p"};
        for (const auto& ref : refs) {
            const auto e = analysis::shannon_entropies(PotentialSpec::standard(ref.f));
            const double got[3] = {e.s_x, e.s_p, e.sum};
            for (int i = 0; i < 3; ++i) rows.push_back({ref.n, qn[i], got[i], ref.v[i], ""});
        }
    } else if (name == "prepotentials") {
        // per-family anchors at reference points, with the published numeric
        // values where a number is printed
        PotentialSpec morse{Family::Morse, 5.0};
        rows.push_back({"morse A=5", "V0(0)", potentials::prepotential(morse, 0.0), 1.0, ""});
        PotentialSpec r1 = PotentialSpec::standard(Family::RiemannI);
        rows.push_back({"riemann1 A=1/2", "V0(0)", potentials::prepotential(r1, 0.0),
                        std::log(1.0 + std::exp(1.0)), "log(1+e)"});
        PotentialSpec r2 = PotentialSpec::standard(Family::RiemannII);
        rows.push_back({"riemann2 A=1/2", "V0(0)", potentials::prepotential(r2, 0.0),
                        2.0 * std::log(std::cosh(1.0)), "2 log cosh 1"});
        PotentialSpec x1 = PotentialSpec::standard(Family::XiI);
        rows.push_back({"xi1 A=1/2", "V0(0)", potentials::prepotential(x1, 0.0), 0.112728, ""});
        PotentialSpec x2 = PotentialSpec::standard(Family::XiII);
        rows.push_back({"xi2 A=1/2", "V0(0)", potentials::prepotential(x2, 0.0),
                        -std::log(0.74072346509892563), "-log Phi_II(0)"});
        PotentialSpec rj = PotentialSpec::standard(Family::Ramanujan);
        rows.push_back({"ramanujan A=6", "V0(0)", potentials::prepotential(rj, 0.0), 6.32813, ""});
        PotentialSpec sho = PotentialSpec::standard(Family::SHO);
        rows.push_back({"sho omega=2", "V0(1)", potentials::prepotential(sho, 1.0), 0.5,
                        "omega x^2/4"});
    } else {
        throw CLI::ValidationError("table", "unknown table name: " + name);
    }
    return emit_table(rows, opts);
}

int cmd_zeros(const std::string& family, double A, double pmin, double pmax,
              const CommonOpts& opts) {
    analysis::ZeroFamily fam;
    if (family == "xi") fam = analysis::ZeroFamily::xi_based;
    else if (family == "zeta") fam = analysis::ZeroFamily::zeta_based;
    else if (family == "morse") fam = analysis::ZeroFamily::morse;
    else throw CLI::ValidationError("zeros", "family must be xi, zeta or morse");

    const auto zs = analysis::find_momentum_zeros(fam, A, pmin, pmax);
    std::ostringstream s;
    if (opts.format == "json") {
        json j;
        j["family"] = family;
        j["A"] = A;
        j["zeros"] = json::array();
        for (const auto& z : zs)
            j["zeros"].push_back({{"p", z.p}, {"residual", z.residual},
                                  {"newton_iterations", z.newton_iterations}});
        if (fam == analysis::ZeroFamily::zeta_based && zs.empty()) {
            const auto scan =
                analysis::node_scan_off_critical(A, {14.134725, 21.022040, 25.010858});
            j["scan"] = {{"min_abs", scan.min_abs},
                         {"min_eta", scan.min_eta},
                         {"p_at_min", scan.p_at_min}};
        }
        s << j.dump(2) << "\n";
    } else {
        s << "p,residual,newton_iterations\n";
        for (const auto& z : zs)
            s << num(z.p) << ',' << num(z.residual) << ',' << z.newton_iterations << "\n";
        if (fam == analysis::ZeroFamily::zeta_based && zs.empty()) {
            const auto scan =
                analysis::node_scan_off_critical(A, {14.134725, 21.022040, 25.010858});
            s << "# no zeros on the line Re s = " << num(A) << "; min |psi~| = "
              << num(scan.min_abs) << " (envelope-normalized " << num(scan.min_eta) << ") at p = "
              << num(scan.p_at_min) << "\n";
        }
    }
    Output{opts.output}.write(s.str());
    return kExitOk;
}

int cmd_plotdata(const std::string& what, const std::string& family, double A,
                 const std::string& range, int n, const CommonOpts& opts) {
    const auto colon = range.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("plotdata", "range must be lo:hi");
    const double lo = std::stod(range.substr(0, colon));
    const double hi = std::stod(range.substr(colon + 1));
    if (!(hi > lo) || n < 2) throw CLI::ValidationError("plotdata", "bad range or n");

    PotentialSpec spec = PotentialSpec::standard(potentials::family_from_name(family));
    spec.A = A;
    std::ostringstream s;
    s << "x,value\n";
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        double v;
        if (what == "potential") {
            v = potentials::partner_potentials(spec, x).v_minus;
        } else if (what == "ground") {
            v = std::abs(potentials::ground_state_position(spec, x, true));
        } else if (what == "momentum") {
            v = std::abs(analysis::momentum_ground_state(spec, x));
        } else if (what == "logmomentum") {
            v = std::log(std::abs(analysis::momentum_ground_state(spec, x)));
        } else {
            throw CLI::ValidationError("plotdata", "what must be potential|ground|momentum|logmomentum");
        }
        s << num(x) << ',' << num(v) << "\n";
    }
    Output{opts.output}.write(s.str());
    return kExitOk;
}

int cmd_orthopoly(const std::string& weight, int kmax, const CommonOpts& opts) {
    std::ostringstream s;
    if (weight == "gauss2m" || weight == "xi2m") {
        const auto kind = (weight == "gauss2m") ? orthopoly::TwoMatrixPrepotential::gaussian
                                                : orthopoly::TwoMatrixPrepotential::xi_scaled;
        const auto rs = orthopoly::two_matrix_biorthogonal(kind, kmax);
        if (opts.format == "json") {
            json j;
            j["weight"] = weight;
            j["polynomials"] = json::array();
            for (const auto& p : rs) j["polynomials"].push_back(p);
            s << j.dump(2) << "\n";
        } else {
            s << "degree,coefficients(ascending)\n";
            for (std::size_t d = 0; d < rs.size(); ++d) {
                s << d;
                for (double c : rs[d]) s << ',' << num(c);
                s << "\n";
            }
        }
    } else {
        orthopoly::WeightSpec ws = orthopoly::WeightSpec::riemann(1.0);
        if (weight.rfind("riemann:", 0) == 0) {
            ws = orthopoly::WeightSpec::riemann(std::stod(weight.substr(8)));
        } else if (weight == "matrix") {
            ws = orthopoly::WeightSpec::matrix_integral();
        } else {
            throw CLI::ValidationError("orthopoly",
                                       "weight must be riemann:<alpha>|matrix|xi2m|gauss2m");
        }
        const auto gs = orthopoly::gram_schmidt_recurrence(ws, kmax);
        if (opts.format == "json") {
            json j;
            j["weight"] = weight;
            j["B"] = std::vector<double>(gs.rec.B.begin() + 1, gs.rec.B.end());
            j["C"] = std::vector<double>(gs.rec.C.begin() + 2, gs.rec.C.end());
            j["h"] = gs.rec.h;
            j["polynomials"] = json::array();
            for (const auto& p : gs.polys) j["polynomials"].push_back(p);
            s << j.dump(2) << "\n";
        } else {
            s << "k,B_k,C_k,h_k\n";
            for (int k = 0; k <= kmax; ++k) {
                s << k << ',';
                if (k >= 1) s << num(gs.rec.B[k]);
                s << ',';
                if (k >= 2) s << num(gs.rec.C[k]);
                s << ',' << num(gs.rec.h[k]) << "\n";
            }
        }
    }
    Output{opts.output}.write(s.str());
    return kExitOk;
}

int cmd_spectrum(const std::string& family, double A, int k, const std::string& grid,
                 const CommonOpts& opts) {
    PotentialSpec spec = PotentialSpec::standard(potentials::family_from_name(family));
    spec.A = A;
    spectral::Grid g{0.0, 0.0, 0};
    if (grid.empty()) {
        const auto w = potentials::default_grid_window(spec.family);
        g = {w.lo, w.hi, 4001};
    } else {
        std::istringstream is(grid);
        std::string a, b, c;
        std::getline(is, a, ':');
        std::getline(is, b, ':');
        std::getline(is, c, ':');
        if (c.empty()) throw CLI::ValidationError("spectrum", "grid must be lo:hi:n");
        g = {std::stod(a), std::stod(b), std::stoi(c)};
    }
    const auto r = spectral::solve_spectrum(spec, g, k, 1e-2);
    std::ostringstream s;
    if (opts.format == "json") {
        json j;
        j["family"] = family;
        j["A"] = A;
        j["grid"] = {{"x_min", g.x_min}, {"x_max", g.x_max}, {"n_points", g.n_points}};
        j["eigenvalues"] = r.eigenvalues;
        j["error"] = r.richardson_error;
        s << j.dump(2) << "\n";
    } else {
        s << "n,E_n\n";
        for (std::size_t n = 0; n < r.eigenvalues.size(); ++n)
            s << n << ',' << num(r.eigenvalues[n]) << "\n";
        s << "# richardson_error," << num(r.richardson_error) << "\n";
    }
    Output{opts.output}.write(s.str());
    return kExitOk;
}

int cmd_expand(const std::string& family, double A, int order, const CommonOpts& opts) {
    PotentialSpec spec = PotentialSpec::standard(potentials::family_from_name(family));
    spec.A = A;
    const auto e = analysis::expand_about_minimum(spec, order);

    // published values where available
    std::vector<std::optional<double>> expected(order + 1);
    std::string note;
    if (spec.family == Family::XiI && A == 0.5) {
        const double v[] = {0.112728, 0.0, 9.36345, 0.0, 5.95896, 0.0, -2.15104, 0.0, 6.0544};
        for (int i = 0; i <= order && i <= 8; ++i) expected[i] = v[i];
        note = "c6/c8 reference are the dual-route values; printed -2.09194/3.84 are misprints";
    } else if (spec.family == Family::Ramanujan && A == 6.0) {
        expected[0] = 6.32813;
        if (order >= 2) expected[2] = 3.8946349;
        note = "c2 reference is the dual-route value; printed 4.18303 is a misprint";
    }

    std::ostringstream s;
    if (opts.format == "json") {
        json j;
        j["family"] = family;
        j["A"] = A;
        j["x_min"] = e.x_min;
        j["coefficients"] = e.coeffs;
        json ex = json::array();
        for (const auto& v : expected) ex.push_back(v ? json(*v) : json());
        j["expected"] = ex;
        if (!note.empty()) j["note"] = note;
        s << j.dump(2) << "\n";
    } else {
        s << "# x_min," << num(e.x_min) << "\n";
        s << "order,coefficient,expected,delta\n";
        for (int i = 0; i <= order; ++i) {
            s << i << ',' << num(e.coeffs[i]) << ',';
            if (expected[i]) s << num(*expected[i]) << ',' << num(e.coeffs[i] - *expected[i]);
            else s << ',';
            s << "\n";
        }
        if (!note.empty()) s << "# " << note << "\n";
    }
    Output{opts.output}.write(s.str());

    bool exceeded = false;
    for (int i = 0; i <= order; ++i)
        if (expected[i] && std::abs(e.coeffs[i] - *expected[i]) > opts.tol) exceeded = true;
    return exceeded ? kExitDelta : kExitOk;
}

int cmd_verify_all(const CommonOpts& opts) {
    std::ostringstream s;
    bool all = true;
    if (opts.format == "json") {
        json j = json::array();
        for (const auto& rep : verify::run_all()) {
            all = all && rep.pass;
            json c = json::array();
            for (const auto& chk : rep.checks)
                c.push_back({{"name", chk.name}, {"pass", chk.pass}, {"detail", chk.detail}});
            j.push_back({{"criterion", rep.id},
                         {"title", rep.title},
                         {"pass", rep.pass},
                         {"checks", c}});
        }
        s << j.dump(2) << "\n";
    } else {
        for (const auto& rep : verify::run_all()) {
            all = all && rep.pass;
            int passed = 0;
            for (const auto& c : rep.checks) passed += c.pass ? 1 : 0;
            s << "criterion " << rep.id << " [" << rep.title << "]: "
              << (rep.pass ? "PASS" : "FAIL") << " (" << passed << '/' << rep.checks.size()
              << " checks)\n";
            for (const auto& c : rep.checks)
                if (!c.pass) s << "    FAIL " << c.name << ": " << c.detail << "\n";
        }
        s << (all ? "verify-all: PASS\n" : "verify-all: FAIL\n");
    }
    Output{opts.output}.write(s.str());
    return all ? kExitOk : kExitDelta;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta/Xi supersymmetric potential toolkit"};
    app.require_subcommand(1);

    // honored cap on worker threads; row evaluation is sequential and
    // deterministic, so any positive value is valid
    if (const char* threads = std::getenv("ZSQM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(threads, &end, 10);
        if (!end || *end != '\0' || v < 1) {
            std::fprintf(stderr, "ZSQM_THREADS must be a positive integer\n");
            return kExitUsage;
        }
    }

    CommonOpts opts;
    double A = std::numeric_limits<double>::quiet_NaN(); // family default unless set

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opts.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", opts.output, "output file (default stdout)");
        cmd->add_option("--config", opts.config, "JSON config file with defaults");
        cmd->add_option("--tol", opts.tol, "delta tolerance for exit status");
    };

    // table
    std::string table_name;
    auto* table = app.add_subcommand("table", "reproduce a published table");
    table->add_option("name", table_name, "morse_levels|uncertainty|shannon|prepotentials")
        ->required();
    double table_A = 5.0;
    table->add_option("--A", table_A, "Morse parameter for morse_levels");
    add_common(table);

    // zeros
    std::string zeros_family = "xi";
    double pmin = 10.0, pmax = 30.0;
    auto* zeros = app.add_subcommand("zeros", "momentum-space nodes");
    zeros->add_option("--family", zeros_family, "xi|zeta|morse")->required();
    zeros->add_option("--A", A, "line Re s = A");
    zeros->add_option("--pmin", pmin, "lower p");
    zeros->add_option("--pmax", pmax, "upper p (<= 60)");
    add_common(zeros);

    // plotdata
    std::string what, plot_family = "morse", range = "-2:6";
    int npts = 500;
    auto* plot = app.add_subcommand("plotdata", "two-column curve samples");
    plot->add_option("--what", what, "potential|ground|momentum|logmomentum")->required();
    plot->add_option("--family", plot_family, "family name")->required();
    plot->add_option("--A", A, "family parameter");
    plot->add_option("--range", range, "lo:hi");
    plot->add_option("--n", npts, "sample count");
    add_common(plot);

    // orthopoly
    std::string weight = "riemann:1";
    int kmax = 3;
    auto* ortho = app.add_subcommand("orthopoly", "recurrence tables / polynomial lists");
    ortho->add_option("--weight", weight, "riemann:<alpha>|matrix|xi2m|gauss2m")->required();
    ortho->add_option("--kmax", kmax, "highest degree");
    add_common(ortho);

    // spectrum
    std::string spec_family = "morse", grid;
    int klevels = 5;
    auto* spectrum = app.add_subcommand("spectrum", "grid eigenvalues of V_-");
    spectrum->add_option("--family", spec_family)->required();
    spectrum->add_option("--A", A, "family parameter");
    spectrum->add_option("--k", klevels, "number of levels");
    spectrum->add_option("--grid", grid, "lo:hi:n (default per family)");
    add_common(spectrum);

    // expand
    std::string exp_family = "xi1";
    int order = 8;
    auto* expand = app.add_subcommand("expand", "Taylor expansion about the prepotential minimum");
    expand->add_option("--family", exp_family)->required();
    expand->add_option("--A", A, "family parameter");
    expand->add_option("--order", order, "highest order (<= 8)");
    add_common(expand);

    // verify-all
    auto* verify_cmd = app.add_subcommand("verify-all", "run every reproduction criterion");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) {
            apply_config(opts, &table_A, *table);
            return cmd_table(table_name, table_A, opts);
        }
        if (zeros->parsed()) {
            apply_config(opts, &A, *zeros);
            if (std::isnan(A)) A = 0.5;
            return cmd_zeros(zeros_family, A, pmin, pmax, opts);
        }
        if (plot->parsed()) {
            apply_config(opts, &A, *plot);
            if (std::isnan(A))
                A = PotentialSpec::standard(potentials::family_from_name(plot_family)).A;
            return cmd_plotdata(what, plot_family, A, range, npts, opts);
        }
        if (ortho->parsed()) {
            apply_config(opts, nullptr, *ortho);
            return cmd_orthopoly(weight, kmax, opts);
        }
        if (spectrum->parsed()) {
            apply_config(opts, &A, *spectrum);
            if (std::isnan(A))
                A = PotentialSpec::standard(potentials::family_from_name(spec_family)).A;
            return cmd_spectrum(spec_family, A, klevels, grid, opts);
        }
        if (expand->parsed()) {
            apply_config(opts, &A, *expand);
            if (std::isnan(A))
                A = PotentialSpec::standard(potentials::family_from_name(exp_family)).A;
            return cmd_expand(exp_family, A, order, opts);
        }
        if (verify_cmd->parsed()) {
            apply_config(opts, nullptr, *verify_cmd);
            return cmd_verify_all(opts);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
