#include "eddy/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eddy/closed_form.hpp"
#include "eddy/errors.hpp"
#include "eddy/fd_oracle.hpp"
#include "eddy/physics.hpp"
#include "eddy/sweep.hpp"

namespace eddy::cli {

namespace {

using nlohmann::ordered_json;

// Shortest decimal that round-trips the exact double.
std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
    double v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw DomainError("cannot parse number: '" + std::string(s) + "'");
    }
    return v;
}

struct CommonOpts {
    std::string config_path;
    std::string output_path;
    PhysicalParams params;
    CylinderGeometry geom;
    // which physics flags were passed explicitly
    CLI::Option *o_mu = nullptr, *o_sigma = nullptr, *o_freq = nullptr;
    CLI::Option *o_r1 = nullptr, *o_r2 = nullptr, *o_k = nullptr;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--config", c.config_path, "JSON config file");
    sub->add_option("--output", c.output_path, "output file (default: stdout)");
    c.o_mu = sub->add_option("--mu-r", c.params.mu_r, "relative permeability");
    c.o_sigma = sub->add_option("--sigma", c.params.sigma, "conductivity [S/m]");
    c.o_freq = sub->add_option("--frequency", c.params.frequency, "frequency [Hz]");
    c.o_r1 = sub->add_option("--r1", c.geom.r1, "interface radius [m]");
    c.o_r2 = sub->add_option("--r2", c.geom.r2, "outer radius [m]");
    c.o_k = sub->add_option("--k", c.geom.k, "Dirichlet constant");
}

// Defaults, then config file (all six keys required), then explicit flags.
void resolve_config(CommonOpts& c) {
    if (c.config_path.empty()) return;
    std::ifstream in(c.config_path);
    if (!in) throw DomainError("cannot open config file: " + c.config_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("config parse error: " + std::string(e.what()));
    }
    static const char* kKeys[] = {"mu_r", "sigma_s_per_m", "frequency_hz",
                                  "r1_m", "r2_m", "k"};
    std::string missing;
    for (const char* key : kKeys) {
        if (!j.contains(key)) missing += std::string(missing.empty() ? "" : ", ") + key;
    }
    if (!missing.empty()) throw DomainError("config missing keys: " + missing);

    try {
        if (c.o_mu->count() == 0) c.params.mu_r = j["mu_r"].get<double>();
        if (c.o_sigma->count() == 0) c.params.sigma = j["sigma_s_per_m"].get<double>();
        if (c.o_freq->count() == 0) c.params.frequency = j["frequency_hz"].get<double>();
        if (c.o_r1->count() == 0) c.geom.r1 = j["r1_m"].get<double>();
        if (c.o_r2->count() == 0) c.geom.r2 = j["r2_m"].get<double>();
        if (c.o_k->count() == 0) c.geom.k = j["k"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("config value error: " + std::string(e.what()));
    }
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw DomainError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void write_row(std::ostream& os, const std::vector<double>& vals) {
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ',';
        os << fmt(vals[i]);
    }
    os << '\n';
}

int cmd_eval(CommonOpts& c, int samples) {
    resolve_config(c);
    validate(c.params, c.geom);
    if (samples < 2) throw DomainError("eval: --samples must be >= 2");

    const auto d = derive_quantities(c.params);
    const auto global = solve_global(c.params, c.geom);
    const auto asym = solve_asymptotics(c.geom);
    const auto imp = solve_impedance(d, c.geom);

    Output out(c.output_path);
    out.stream() << "r_m,ref_re,ref_im,order1_re,order1_im,order2_re,order2_im,imp_re,imp_im\n";
    for (int i = 0; i < samples; ++i) {
        const double r = c.geom.r1 + (c.geom.r2 - c.geom.r1) * i / (samples - 1);
        const auto ref = eval_global(global, d, c.geom, r);
        const auto o1 = eval_asymptotic(1, asym, d, c.geom, r);
        const auto o2 = eval_asymptotic(2, asym, d, c.geom, r);
        const auto im = eval_impedance(imp, c.geom, r);
        write_row(out.stream(), {r, ref.real(), ref.imag(), o1.real(), o1.imag(),
                                 o2.real(), o2.imag(), im.real(), im.imag()});
    }
    return 0;
}

int cmd_profile(CommonOpts& c, int samples, double depth_multiples) {
    resolve_config(c);
    validate(c.params, c.geom);
    if (samples < 2) throw DomainError("profile: --samples must be >= 2");
    if (!(depth_multiples > 0.0)) throw DomainError("profile: --depth-multiples must be > 0");

    const auto d = derive_quantities(c.params);
    const double h_max = depth_multiples * d.delta;
    if (h_max >= c.geom.r1) {
        throw DomainError("profile: sampled depth reaches the axis; reduce --depth-multiples");
    }
    const auto global = solve_global(c.params, c.geom);
    const auto terms = profile_terms(solve_asymptotics(c.geom), d, c.geom);

    Output out(c.output_path);
    out.stream() << "r_m,exact_re,exact_im,prof0_re,prof0_im,prof1_re,prof1_im\n";
    for (int i = 0; i < samples; ++i) {
        const double h = h_max * i / (samples - 1);
        const double r = c.geom.r1 - h;
        const auto exact = eval_global(global, d, c.geom, r);
        const auto p0 = eval_profile_interior(0, terms, d, c.geom, h);
        const auto p1 = eval_profile_interior(1, terms, d, c.geom, h);
        write_row(out.stream(), {r, exact.real(), exact.imag(), p0.real(), p0.imag(),
                                 p1.real(), p1.imag()});
    }
    return 0;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "mu_r,frequency_hz,epsilon,delta_m,err_order1,err_order2,err_impedance,in_regime\n";
    for (const auto& r : records) {
        os << fmt(r.mu_r) << ',' << fmt(r.frequency) << ',' << fmt(r.epsilon) << ','
           << fmt(r.delta) << ',' << fmt(r.err_order1) << ',' << fmt(r.err_order2) << ','
           << fmt(r.err_impedance) << ',' << (r.in_regime ? '1' : '0') << '\n';
        if (r.failed) {
            std::cerr << "sweep point mu_r=" << r.mu_r << " f=" << r.frequency
                      << " failed: " << r.error << '\n';
        }
    }
}

int cmd_sweep_mu(CommonOpts& c, double lo, double hi, int n) {
    resolve_config(c);
    validate(c.params, c.geom);
    const auto grid = geometric_grid(lo, hi, n);
    const auto records = sweep_mu(c.params, c.geom, grid);
    Output out(c.output_path);
    write_sweep_csv(out.stream(), records);
    return 0;
}

int cmd_sweep_freq(CommonOpts& c, double lo, double hi, int n) {
    resolve_config(c);
    validate(c.params, c.geom);
    const auto grid = geometric_grid(lo, hi, n);
    const auto records = sweep_freq(c.params, c.geom, grid);
    Output out(c.output_path);
    write_sweep_csv(out.stream(), records);
    return 0;
}

std::vector<SweepRecord> read_sweep_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open sweep CSV: " + path);
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty sweep CSV: " + path);

    auto split = [](const std::string& s) {
        std::vector<std::string> fields;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) fields.push_back(item);
        return fields;
    };
    const auto header = split(line);
    std::map<std::string, size_t> col;
    for (size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* need : {"mu_r", "frequency_hz", "epsilon", "err_order1", "err_order2",
                             "err_impedance", "in_regime"}) {
        if (!col.count(need)) throw DomainError("sweep CSV missing column: " + std::string(need));
    }

    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() < header.size()) throw DomainError("short row in sweep CSV");
        SweepRecord r;
        r.mu_r = parse_double(f[col["mu_r"]]);
        r.frequency = parse_double(f[col["frequency_hz"]]);
        r.epsilon = parse_double(f[col["epsilon"]]);
        r.err_order1 = parse_double(f[col["err_order1"]]);
        r.err_order2 = parse_double(f[col["err_order2"]]);
        r.err_impedance = parse_double(f[col["err_impedance"]]);
        r.in_regime = f[col["in_regime"]] == "1";
        r.failed = std::isnan(r.err_order1);
        records.push_back(r);
    }
    return records;
}

int cmd_slopes(CommonOpts& c, const std::string& input, const std::string& window_flag) {
    const auto records = read_sweep_csv(input);
    if (records.empty()) throw DomainError("slopes: no data rows in " + input);

    bool mu_sweep = true;
    for (const auto& r : records) {
        if (r.frequency != records.front().frequency) mu_sweep = false;
    }
    std::vector<std::pair<FitWindow, std::string>> windows;
    if (mu_sweep || window_flag == "all") {
        windows = {{FitWindow::All, "all"}};
    } else if (window_flag == "low-freq") {
        windows = {{FitWindow::LowFreq, "low-freq"}};
    } else {
        windows = {{FitWindow::All, "all"}, {FitWindow::LowFreq, "low-freq"}};
    }

    ordered_json result = ordered_json::array();
    static const std::pair<ErrorModel, const char*> kModels[] = {
        {ErrorModel::Order1, "order1"},
        {ErrorModel::Order2, "order2"},
        {ErrorModel::Impedance, "impedance"},
    };
    for (const auto& [window, wname] : windows) {
        for (const auto& [model, mname] : kModels) {
            try {
                const SlopeFit fit = fit_error_slope(records, model, window);
                result.push_back({{"model", mname},
                                  {"slope", fit.slope},
                                  {"r2", fit.r_squared},
                                  {"n_points", fit.n_points},
                                  {"window", wname}});
            } catch (const DomainError& e) {
                std::cerr << "slopes: skipping " << mname << "/" << wname << ": " << e.what()
                          << '\n';
            }
        }
    }
    if (result.empty()) throw DomainError("slopes: no window had enough in-regime points");
    Output out(c.output_path);
    out.stream() << result.dump(2) << '\n';
    return 0;
}

int cmd_verify(CommonOpts& c, std::vector<int> grids) {
    resolve_config(c);
    validate(c.params, c.geom);
    if (grids.empty()) grids = {1024, 2048, 4096};
    for (const int g : grids) {
        if (g < 16) throw DomainError("verify: --grid must be >= 16");
    }

    std::vector<double> errs(grids.size());
    for (size_t i = 0; i < grids.size(); ++i) {
        errs[i] = oracle_error_vs_analytic(c.params, c.geom, grids[i]);
    }

    Output out(c.output_path);
    out.stream() << "n_total,rel_l21_error,ratio_vs_prev\n";
    bool ok = true;
    for (size_t i = 0; i < grids.size(); ++i) {
        out.stream() << grids[i] << ',' << fmt(errs[i]) << ',';
        if (i > 0 && grids[i] == 2 * grids[i - 1]) {
            const double ratio = errs[i - 1] / errs[i];
            out.stream() << fmt(ratio);
            if (!(ratio >= 3.5 && ratio <= 4.5)) {
                std::cerr << "verify: refinement ratio " << grids[i - 1] << "->" << grids[i]
                          << " = " << ratio << " outside [3.5, 4.5]\n";
                ok = false;
            }
        }
        out.stream() << '\n';
        if (grids[i] >= 4096 && !(errs[i] <= 1e-3)) {
            std::cerr << "verify: error " << errs[i] << " at n=" << grids[i]
                      << " exceeds 1e-3\n";
            ok = false;
        }
    }
    std::cerr << (ok ? "verify: PASS\n" : "verify: FAIL\n");
    return ok ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Analytical, asymptotic and impedance solutions for time-harmonic eddy "
                 "currents in a ferromagnetic cylinder, with a finite-volume cross-check"};
    app.require_subcommand(1);

    CommonOpts c_eval, c_prof, c_smu, c_sfreq, c_slopes, c_verify;
    int eval_samples = 200;
    int prof_samples = 200;
    double depth_multiples = 3.0;
    double mu_min = 250.0, mu_max = 16000.0;
    int mu_points = 7;
    double f_min = 10.0, f_max = 2000.0;
    int f_points = 24;
    std::string slopes_input;
    std::string fit_window = "auto";
    std::vector<int> grids;

    auto* eval = app.add_subcommand("eval", "sample the four solutions on [r1, r2] (CSV)");
    add_common(eval, c_eval);
    eval->add_option("--samples", eval_samples, "number of radial samples");

    auto* prof = app.add_subcommand("profile",
                                    "sample the exact interior solution and boundary-layer "
                                    "profiles below the interface (CSV)");
    add_common(prof, c_prof);
    prof->add_option("--samples", prof_samples, "number of depth samples");
    prof->add_option("--depth-multiples", depth_multiples, "depth range in skin depths");

    auto* smu = app.add_subcommand("sweep-mu", "error sweep over relative permeability (CSV)");
    add_common(smu, c_smu);
    smu->add_option("--mu-min", mu_min, "lowest mu_r");
    smu->add_option("--mu-max", mu_max, "highest mu_r");
    smu->add_option("--mu-points", mu_points, "number of grid points");

    auto* sfr = app.add_subcommand("sweep-freq", "error sweep over frequency (CSV)");
    add_common(sfr, c_sfreq);
    sfr->add_option("--f-min", f_min, "lowest frequency [Hz]");
    sfr->add_option("--f-max", f_max, "highest frequency [Hz]");
    sfr->add_option("--f-points", f_points, "number of grid points");

    auto* slopes = app.add_subcommand("slopes", "fit log-log convergence slopes of a sweep CSV");
    slopes->add_option("input", slopes_input, "sweep CSV file")->required();
    slopes->add_option("--fit-window", fit_window, "all|low-freq")
        ->check(CLI::IsMember({"all", "low-freq", "auto"}));
    slopes->add_option("--output", c_slopes.output_path, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "finite-volume refinement study (CSV + checks)");
    add_common(verify, c_verify);
    verify->add_option("--grid", grids, "total grid size (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit 0, parse errors exit 1
    }

    try {
        if (eval->parsed()) return cmd_eval(c_eval, eval_samples);
        if (prof->parsed()) return cmd_profile(c_prof, prof_samples, depth_multiples);
        if (smu->parsed()) return cmd_sweep_mu(c_smu, mu_min, mu_max, mu_points);
        if (sfr->parsed()) return cmd_sweep_freq(c_sfreq, f_min, f_max, f_points);
        if (slopes->parsed()) return cmd_slopes(c_slopes, slopes_input, fit_window);
        if (verify->parsed()) return cmd_verify(c_verify, grids);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace eddy::cli
