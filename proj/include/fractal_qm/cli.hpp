#pragma once

// Command-line front end. run() parses arguments, dispatches a subcommand and
// returns the exit status: 0 success, 1 runtime failure, 2 usage error.
//
// Settings resolve in the order: command-line flag, then --config file
// (flat "key = value" lines), then built-in default.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fractal_qm/error.hpp"
#include "fractal_qm/fractalset.hpp"
#include "fractal_qm/hydrogen.hpp"
#include "fractal_qm/measure.hpp"
#include "fractal_qm/oscillator.hpp"
#include "fractal_qm/table.hpp"

namespace fractal_qm::cli {

enum class UnitSystem { atomic, si };
enum class Backend { power_law, cantor_analytic, numeric };
enum class OutputFormat { csv, json };

struct RunConfig {
    UnitSystem unit_system = UnitSystem::atomic;
    Backend staircase_backend = Backend::power_law;
    hydrogen::RadialMode radial_mode = hydrogen::RadialMode::squared;
    OutputFormat output_format = OutputFormat::csv;
    std::string output_path;  // empty: standard output
    std::vector<double> alpha{1.0};
    double beta = 1.0;
};

struct SweepSpec {
    double start = 0.0;
    double stop = 1.0;
    int samples = 2;

    void validate() const {
        detail::require(start < stop, "sweep: need start < stop");
        detail::require(samples >= 2, "sweep: need at least 2 samples");
    }
    [[nodiscard]] double at(int i) const {
        if (i == samples - 1) return stop;
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(samples - 1);
    }
};

/// Thrown for usage errors detected after parsing.
class UsageError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

namespace detail {

inline std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(trim(part));
    return parts;
}

inline double parse_real(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value)) throw UsageError("not a number: '" + text + "'");
    return value;
}

inline int parse_int(const std::string& text) {
    const double value = parse_real(text);
    if (value != std::floor(value) || std::abs(value) > 1e9) throw UsageError("not an integer: '" + text + "'");
    return static_cast<int>(value);
}

inline std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> values;
    for (const auto& part : split(text, ',')) values.push_back(parse_real(part));
    if (values.empty()) throw UsageError("empty list");
    return values;
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (const auto& part : split(text, ',')) values.push_back(parse_int(part));
    if (values.empty()) throw UsageError("empty list");
    return values;
}

template <class Enum>
Enum parse_enum(const std::string& text, const std::map<std::string, Enum>& names, const char* what) {
    const auto it = names.find(text);
    if (it == names.end()) throw UsageError(std::string("unknown ") + what + " '" + text + "'");
    return it->second;
}

inline const std::map<std::string, UnitSystem> kUnitNames{{"atomic", UnitSystem::atomic}, {"si", UnitSystem::si}};
inline const std::map<std::string, Backend> kBackendNames{{"power_law", Backend::power_law},
                                                          {"cantor_analytic", Backend::cantor_analytic},
                                                          {"numeric", Backend::numeric}};
inline const std::map<std::string, hydrogen::RadialMode> kModeNames{
    {"squared", hydrogen::RadialMode::squared}, {"paper_literal", hydrogen::RadialMode::paper_literal}};
inline const std::map<std::string, OutputFormat> kFormatNames{{"csv", OutputFormat::csv},
                                                              {"json", OutputFormat::json}};

inline std::map<std::string, std::string> read_config_file(const std::string& path) {
    static const std::set<std::string> known{"unit_system", "staircase_backend", "radial_mode", "output_format",
                                             "output_path", "alpha",           "beta"};
    std::ifstream in(path);
    if (!in) throw ComputationError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (!known.contains(key)) throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        entries[key] = trim(line.substr(eq + 1));
    }
    return entries;
}

inline PhysicalConstants constants_for(UnitSystem units) {
    return units == UnitSystem::si ? PhysicalConstants::si() : PhysicalConstants::atomic();
}

struct StaircaseOptions {
    double keep_ratio = 1.0 / 3.0;
    int depth = 8;
    double support_max = 1.0;
    double normalization = 1.0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--keep-ratio", keep_ratio, "Cantor keep ratio in (0, 1/2] (non-power-law backends)");
        cmd.add_option("--depth", depth, "Cantor construction depth (numeric backend)");
        cmd.add_option("--support-max", support_max, "Right end c2 of the Cantor support [0, c2]");
        cmd.add_option("--normalization", normalization, "Scale of the cantor_analytic staircase");
    }

    [[nodiscard]] CantorSpec spec() const { return CantorSpec{keep_ratio, {0.0, support_max}}; }

    /// Staircase for the requested backend. cantor_analytic ignores alpha and
    /// reports the set's similarity dimension instead.
    [[nodiscard]] Staircase make(Backend backend, double alpha) const {
        switch (backend) {
            case Backend::power_law: return Staircase::power_law(alpha);
            case Backend::cantor_analytic: return Staircase::cantor_analytic(spec(), normalization);
            case Backend::numeric: return Staircase::numeric(build_cantor(spec(), depth), alpha);
        }
        throw UsageError("unknown backend");
    }
};

inline void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
    const auto write = [&](std::ostream& os) {
        if (cfg.output_format == OutputFormat::json) write_json(os, table);
        else write_csv(os, table);
    };
    if (cfg.output_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) throw ComputationError("cannot open output file '" + cfg.output_path + "'");
    write(file);
    if (!file) throw ComputationError("failed writing '" + cfg.output_path + "'");
}

// ---------------------------------------------------------------------------
// Plot scripts

struct PlotLayout {
    std::vector<std::string> header;
    std::size_t x_column;
    std::size_t y_column;
    std::vector<std::size_t> group_columns;  // one curve per distinct value tuple
    std::string x_label;
    std::string y_label;
};

inline const std::map<std::string, PlotLayout>& plot_layouts() {
    static const std::map<std::string, PlotLayout> layouts{
        {"hydrogen-density", {{"r", "alpha", "P"}, 0, 2, {1}, "r", "P"}},
        {"hydrogen-energies", {{"n", "alpha", "E_hartree", "E_eV"}, 0, 3, {1}, "n", "E (eV)"}},
        {"ho-density", {{"x", "alpha", "n", "P"}, 0, 3, {2, 1}, "x", "P"}},
        {"ho-energies", {{"n", "omega_alpha", "E"}, 0, 2, {1}, "n", "E"}},
        {"evolve", {{"t", "re", "im", "abs2"}, 0, 3, {}, "t", "|Psi|^2"}},
        {"staircase", {{"x", "S"}, 0, 1, {}, "x", "S(x)"}},
    };
    return layouts;
}

inline std::string gnuplot_quote(const std::string& text) {
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
    }
    return quoted + "\"";
}

inline std::string make_plot_script(const std::string& data_path, const std::string& kind, const Table& data) {
    const auto& layouts = plot_layouts();
    const auto it = layouts.find(kind);
    if (it == layouts.end()) throw UsageError("unknown plot kind '" + kind + "'");
    const PlotLayout& layout = it->second;
    if (data.columns != layout.header) throw ComputationError("data header does not match kind '" + kind + "'");

    std::vector<std::vector<double>> groups;
    for (const auto& row : data.rows) {
        std::vector<double> key;
        for (auto c : layout.group_columns) key.push_back(row[c]);
        if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(std::move(key));
    }
    if (groups.empty()) groups.emplace_back();

    std::ostringstream s;
    s << "# " << kind << " plot\n";
    s << "set datafile separator \",\"\n";
    s << "set key outside right\n";
    s << "set xlabel " << gnuplot_quote(layout.x_label) << "\n";
    s << "set ylabel " << gnuplot_quote(layout.y_label) << "\n";
    s << "plot";
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::string condition;
        std::string title;
        for (std::size_t k = 0; k < layout.group_columns.size(); ++k) {
            const auto column = layout.group_columns[k];
            const std::string value = format_number(groups[g][k]);
            if (!condition.empty()) condition += " && ";
            condition += "abs($" + std::to_string(column + 1) + "-(" + value + "))<1e-9";
            if (!title.empty()) title += ", ";
            title += layout.header[column] + "=" + value;
        }
        const std::string y = "$" + std::to_string(layout.y_column + 1);
        s << (g ? ", \\\n    " : " ") << gnuplot_quote(data_path) << " every ::1 using "
          << layout.x_column + 1 << ":" << (condition.empty() ? "(" + y + ")" : "((" + condition + ") ? " + y + " : 1/0)")
          << " with lines title " << gnuplot_quote(title.empty() ? layout.y_label : title);
    }
    s << "\n";
    return s.str();
}

}  // namespace detail

using detail::make_plot_script;

/// Runs the CLI with argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;

    CLI::App app{"Fractal calculus on Cantor-type sets and closed-form fractal quantum mechanics", "fractal_qm"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string output_path;
    std::string format_name;
    app.add_option("--config", config_path, "Flat key = value file with run settings")->check(CLI::ExistingFile);
    auto* output_opt = app.add_option("--output", output_path, "Output file (default: standard output)");
    auto* format_opt = app.add_option("--format", format_name, "csv or json");

    // Shared run settings; each subcommand registers the ones it uses.
    std::string units_name = "atomic";
    std::string backend_name = "power_law";
    std::string mode_name = "squared";
    std::string alpha_text = "1";
    double beta = 1.0;
    std::vector<std::pair<std::string, CLI::Option*>> run_flags;
    const auto add_units = [&](CLI::App* cmd) {
        run_flags.emplace_back("unit_system", cmd->add_option("--units", units_name, "atomic or si"));
    };
    const auto add_backend = [&](CLI::App* cmd) {
        run_flags.emplace_back("staircase_backend",
                               cmd->add_option("--backend", backend_name, "power_law, cantor_analytic or numeric"));
    };
    const auto add_alpha = [&](CLI::App* cmd, const char* help) {
        run_flags.emplace_back("alpha", cmd->add_option("--alpha", alpha_text, help));
    };
    const auto add_beta = [&](CLI::App* cmd) {
        run_flags.emplace_back("beta", cmd->add_option("--beta", beta, "Time staircase exponent in (0, 1]"));
    };

    // dimension
    auto* dimension = app.add_subcommand("dimension", "Estimate the gamma-dimension of a Cantor set");
    double dim_keep = 1.0 / 3.0;
    int dim_depth = 12;
    double dim_tol = 0.01;
    dimension->add_option("--keep-ratio", dim_keep, "Keep ratio in (0, 1/2]");
    dimension->add_option("--depth", dim_depth, "Construction depth");
    dimension->add_option("--tol", dim_tol, "Bisection tolerance");

    // staircase
    auto* staircase = app.add_subcommand("staircase", "Tabulate an integral staircase S(x)");
    StaircaseOptions stair_opts;
    SweepSpec stair_sweep{0.0, 1.0, 101};
    stair_opts.add_to(*staircase);
    add_backend(staircase);
    add_alpha(staircase, "Staircase exponent");
    staircase->add_option("--xmin", stair_sweep.start);
    staircase->add_option("--xmax", stair_sweep.stop);
    staircase->add_option("--samples", stair_sweep.samples);

    // hydrogen-density
    auto* h_density = app.add_subcommand("hydrogen-density", "Radial probability density of the fractal hydrogen atom");
    int h_n = 1;
    int h_l = 0;
    double h_amplitude = 1.0;
    bool h_normalize = false;
    SweepSpec r_sweep{0.0, 20.0, 200};
    StaircaseOptions h_stair;
    h_density->add_option("--n", h_n, "Principal quantum number");
    h_density->add_option("--l", h_l, "Angular quantum number");
    h_density->add_option("--rmin", r_sweep.start);
    h_density->add_option("--rmax", r_sweep.stop);
    h_density->add_option("--samples", r_sweep.samples);
    h_density->add_option("--amplitude", h_amplitude, "A_nl");
    h_density->add_flag("--normalize", h_normalize, "Normalize R against the F^alpha-measure on [0, rmax]");
    run_flags.emplace_back("radial_mode", h_density->add_option("--mode", mode_name, "squared or paper_literal"));
    add_units(h_density);
    add_backend(h_density);
    add_alpha(h_density, "Comma-separated alpha values");
    h_stair.add_to(*h_density);

    // hydrogen-energies
    auto* h_energies = app.add_subcommand("hydrogen-energies", "Fractal hydrogen energy levels");
    int he_nmin = 1;
    int he_nmax = 10;
    h_energies->add_option("--nmin", he_nmin);
    h_energies->add_option("--nmax", he_nmax);
    add_units(h_energies);
    add_alpha(h_energies, "Comma-separated alpha values");

    // ho-density
    auto* ho_density = app.add_subcommand("ho-density", "Fractal harmonic-oscillator probability densities");
    std::string ho_levels = "0,1,2,3";
    SweepSpec x_sweep{-5.0, 5.0, 201};
    oscillator::OscillatorParams ho_params;
    StaircaseOptions ho_stair;
    ho_density->add_option("--n", ho_levels, "Comma-separated levels");
    ho_density->add_option("--xmin", x_sweep.start);
    ho_density->add_option("--xmax", x_sweep.stop);
    ho_density->add_option("--samples", x_sweep.samples);
    ho_density->add_option("--mass", ho_params.mass);
    ho_density->add_option("--omega", ho_params.omega_alpha, "Fractal angular frequency");
    ho_density->add_option("--hbar", ho_params.hbar);
    add_backend(ho_density);
    add_alpha(ho_density, "Comma-separated alpha values");
    ho_stair.add_to(*ho_density);

    // ho-energies
    auto* ho_energies = app.add_subcommand("ho-energies", "Fractal harmonic-oscillator energy ladder");
    int hoe_nmax = 10;
    std::string hoe_omegas = "1";
    double hoe_hbar = 1.0;
    ho_energies->add_option("--nmax", hoe_nmax);
    ho_energies->add_option("--omega", hoe_omegas, "Comma-separated fractal angular frequencies");
    ho_energies->add_option("--hbar", hoe_hbar);

    // evolve
    auto* evolve = app.add_subcommand("evolve", "Fractal-time evolution of a superposition at one point");
    std::string system_name = "ho";
    std::vector<std::string> term_texts;
    SweepSpec t_sweep{0.0, 10.0, 101};
    double ev_x = 1.0;
    hydrogen::Point ev_point{1.0, 0.0, 0.0};
    oscillator::OscillatorParams ev_params;
    evolve->add_option("--system", system_name, "hydrogen or ho");
    evolve->add_option("--term", term_texts, "c_re,c_im,n[,l,m] (repeatable)");
    evolve->add_option("--tmin", t_sweep.start);
    evolve->add_option("--tmax", t_sweep.stop);
    evolve->add_option("--samples", t_sweep.samples);
    evolve->add_option("--x", ev_x, "Oscillator position");
    evolve->add_option("--r", ev_point.r, "Hydrogen radius");
    evolve->add_option("--theta", ev_point.theta);
    evolve->add_option("--phi", ev_point.phi);
    evolve->add_option("--mass", ev_params.mass);
    evolve->add_option("--omega", ev_params.omega_alpha);
    evolve->add_option("--hbar", ev_params.hbar);
    add_units(evolve);
    add_alpha(evolve, "Space staircase exponent");
    add_beta(evolve);

    // plot-script
    auto* plot = app.add_subcommand("plot-script", "Write a gnuplot script for a data file");
    std::string plot_data;
    std::string plot_kind;
    plot->add_option("--data", plot_data, "CSV produced by one of the data commands")->required();
    plot->add_option("--kind", plot_kind, "hydrogen-density, hydrogen-energies, ho-density, ho-energies, evolve, staircase")
        ->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        std::map<std::string, std::string> config;
        if (!config_path.empty()) config = read_config_file(config_path);
        // Config fills in only settings that were not given as flags.
        const auto flag_given = [&](const std::string& key) {
            return std::any_of(run_flags.begin(), run_flags.end(),
                               [&](const auto& entry) { return entry.first == key && entry.second->count() > 0; });
        };
        const auto from_config = [&](const std::string& key, std::string& target) {
            if (!flag_given(key) && config.contains(key)) target = config.at(key);
        };

        RunConfig cfg;
        from_config("unit_system", units_name);
        from_config("staircase_backend", backend_name);
        from_config("radial_mode", mode_name);
        from_config("alpha", alpha_text);
        std::string beta_text = format_number(beta);
        from_config("beta", beta_text);
        run_flags.emplace_back("output_format", format_opt);
        run_flags.emplace_back("output_path", output_opt);
        from_config("output_format", format_name);
        from_config("output_path", output_path);

        cfg.unit_system = parse_enum(units_name, kUnitNames, "unit system");
        cfg.staircase_backend = parse_enum(backend_name, kBackendNames, "staircase backend");
        cfg.radial_mode = parse_enum(mode_name, kModeNames, "radial mode");
        cfg.output_format = format_name.empty() ? OutputFormat::csv : parse_enum(format_name, kFormatNames, "format");
        cfg.output_path = output_path;
        cfg.alpha = parse_real_list(alpha_text);
        cfg.beta = parse_real(beta_text);
        for (double a : cfg.alpha)
            if (!(a > 0.0 && a <= 1.0)) throw UsageError("alpha must lie in (0, 1]");
        if (!(cfg.beta > 0.0 && cfg.beta <= 1.0)) throw UsageError("beta must lie in (0, 1]");

        if (dimension->parsed()) {
            const auto set = build_cantor(CantorSpec{dim_keep, {0.0, 1.0}}, dim_depth);
            DimensionEstimate estimate;
            try {
                estimate = gamma_dimension_trace(set, 0.0, 1.0, dim_tol);
            } catch (const ComputationError& e) {
                err << "dimension: " << e.what() << "\n";
                return 1;
            }
            Table table{{"alpha", "mass_coarse", "mass_fine", "slope", "divergent"}, {}};
            for (const auto& p : estimate.probes)
                table.add_row({p.alpha, p.coarse, p.fine, std::isfinite(p.slope) ? p.slope : -1e300,
                               p.divergent ? 1.0 : 0.0});
            out << "gamma_dimension = " << format_number(estimate.value) << "\n";
            out << "similarity_dimension = " << format_number(set.spec().similarity_dimension()) << "\n";
            if (cfg.output_path.empty()) {
                write_csv(out, table);
            } else {
                emit(table, cfg, out);
            }
            return 0;
        }

        if (staircase->parsed()) {
            stair_sweep.validate();
            const auto s = stair_opts.make(cfg.staircase_backend, cfg.alpha.front());
            Table table{{"x", "S"}, {}};
            for (int i = 0; i < stair_sweep.samples; ++i) {
                const double x = stair_sweep.at(i);
                table.add_row({x, s(x)});
            }
            emit(table, cfg, out);
            return 0;
        }

        if (h_density->parsed()) {
            r_sweep.validate();
            if (r_sweep.start < 0.0) throw UsageError("rmin must be non-negative");
            const hydrogen::QuantumNumbers qn{h_n, h_l, 0};
            qn.validate();
            const auto consts = constants_for(cfg.unit_system);
            std::vector<double> alphas = cfg.alpha;
            if (cfg.staircase_backend == Backend::cantor_analytic) alphas = {h_stair.spec().similarity_dimension()};
            Table table{{"r", "alpha", "P"}, {}};
            for (double alpha : alphas) {
                const auto s = h_stair.make(cfg.staircase_backend, alpha);
                const FractalDims dims{s.alpha(), cfg.beta};
                const double amplitude =
                    h_normalize ? hydrogen::radial_normalization(qn, dims, r_sweep.stop, consts, s) : h_amplitude;
                for (int i = 0; i < r_sweep.samples; ++i) {
                    const double r = r_sweep.at(i);
                    table.add_row({r, dims.alpha,
                                   hydrogen::radial_density(qn, dims, r, consts, amplitude, cfg.radial_mode, s)});
                }
            }
            emit(table, cfg, out);
            return 0;
        }

        if (h_energies->parsed()) {
            if (he_nmin < 1 || he_nmax < he_nmin) throw UsageError("need 1 <= nmin <= nmax");
            const auto consts = constants_for(cfg.unit_system);
            Table table{{"n", "alpha", "E_hartree", "E_eV"}, {}};
            for (double alpha : cfg.alpha) {
                const FractalDims dims{alpha, cfg.beta};
                for (int n = he_nmin; n <= he_nmax; ++n) {
                    const double e = hydrogen::energy_level(n, dims, consts);
                    table.add_row({static_cast<double>(n), alpha, e / consts.hartree(), hydrogen::to_ev(e, consts)});
                }
            }
            emit(table, cfg, out);
            return 0;
        }

        if (ho_density->parsed()) {
            x_sweep.validate();
            ho_params.validate();
            const auto levels = parse_int_list(ho_levels);
            Table table{{"x", "alpha", "n", "P"}, {}};
            for (int n : levels) {
                if (n < 0 || n > oscillator::kMaxLevel) throw UsageError("levels must lie in [0, 150]");
                for (double alpha : cfg.alpha) {
                    const auto s = ho_stair.make(cfg.staircase_backend, alpha);
                    const FractalDims dims{s.alpha(), cfg.beta};
                    for (int i = 0; i < x_sweep.samples; ++i) {
                        const double x = x_sweep.at(i);
                        table.add_row({x, dims.alpha, static_cast<double>(n), oscillator::density(n, dims, x, ho_params, s)});
                    }
                }
            }
            emit(table, cfg, out);
            return 0;
        }

        if (ho_energies->parsed()) {
            if (hoe_nmax < 0) throw UsageError("nmax must be non-negative");
            Table table{{"n", "omega_alpha", "E"}, {}};
            for (double omega : parse_real_list(hoe_omegas)) {
                const oscillator::OscillatorParams p{1.0, omega, hoe_hbar};
                p.validate();
                for (int n = 0; n <= hoe_nmax; ++n) table.add_row({static_cast<double>(n), omega, oscillator::energy(n, p)});
            }
            emit(table, cfg, out);
            return 0;
        }

        if (evolve->parsed()) {
            t_sweep.validate();
            if (t_sweep.start < 0.0) throw UsageError("tmin must be non-negative");
            if (term_texts.empty()) throw UsageError("evolve: at least one --term is required");
            const FractalDims dims{cfg.alpha.front(), cfg.beta};
            dims.validate();
            std::function<ComplexValue(double)> wave;
            std::vector<hydrogen::Term> h_terms;
            std::vector<oscillator::Term> ho_terms;
            const auto consts = constants_for(cfg.unit_system);
            if (system_name == "hydrogen") {
                for (const auto& text : term_texts) {
                    const auto f = split(text, ',');
                    if (f.size() != 3 && f.size() != 5) throw UsageError("hydrogen term needs c_re,c_im,n[,l,m]");
                    hydrogen::Term term{{parse_real(f[0]), parse_real(f[1])},
                                        {parse_int(f[2]), f.size() == 5 ? parse_int(f[3]) : 0,
                                         f.size() == 5 ? parse_int(f[4]) : 0}};
                    term.qn.validate();
                    h_terms.push_back(term);
                }
                wave = [&](double t) { return hydrogen::evolve_superposition(h_terms, dims, ev_point, t, consts); };
            } else if (system_name == "ho") {
                for (const auto& text : term_texts) {
                    const auto f = split(text, ',');
                    if (f.size() != 3) throw UsageError("oscillator term needs c_re,c_im,n");
                    ho_terms.push_back({{parse_real(f[0]), parse_real(f[1])}, parse_int(f[2])});
                }
                wave = [&](double t) { return oscillator::evolve(ho_terms, dims, ev_x, t, ev_params); };
            } else {
                throw UsageError("unknown system '" + system_name + "'");
            }
            Table table{{"t", "re", "im", "abs2"}, {}};
            for (int i = 0; i < t_sweep.samples; ++i) {
                const double t = t_sweep.at(i);
                const ComplexValue psi = wave(t);
                table.add_row({t, psi.real(), psi.imag(), std::norm(psi)});
            }
            emit(table, cfg, out);
            return 0;
        }

        if (plot->parsed()) {
            if (!plot_layouts().contains(plot_kind)) throw UsageError("unknown plot kind '" + plot_kind + "'");
            std::ifstream in(plot_data, std::ios::binary);
            if (!in) throw ComputationError("cannot open data file '" + plot_data + "'");
            const Table data = read_csv(in);
            const std::string script = make_plot_script(plot_data, plot_kind, data);
            if (cfg.output_path.empty()) {
                out << script;
            } else {
                std::ofstream file(cfg.output_path, std::ios::binary);
                if (!file) throw ComputationError("cannot open output file '" + cfg.output_path + "'");
                file << script;
            }
            return 0;
        }
    } catch (const ComputationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace fractal_qm::cli
