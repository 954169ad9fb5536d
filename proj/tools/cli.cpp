#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "tiso/analysis.hpp"
#include "tiso/errors.hpp"
#include "tiso/hard_sphere.hpp"
#include "tiso/kinematics.hpp"
#include "tiso/mott.hpp"
#include "tiso/output.hpp"

namespace tiso::cli {

namespace {

using nlohmann::ordered_json;

struct GridFlags {
    double lo = 1.0;
    double hi = 179.0;
    double step = 0.5;

    void attach(CLI::App& cmd) {
        cmd.add_option("--theta-min", lo, "first angle (deg)")->capture_default_str();
        cmd.add_option("--theta-max", hi, "last angle (deg)")->capture_default_str();
        cmd.add_option("--theta-step", step, "angle step (deg)")->capture_default_str();
    }
    std::vector<double> grid() const { return angle_grid(lo, hi, step); }
    void echo(ordered_json& params) const {
        params["theta_min_deg"] = lo;
        params["theta_max_deg"] = hi;
        params["theta_step_deg"] = step;
    }
};

/// Coulomb model selection shared by `angular` and `plateau`.
struct CoulombFlags {
    std::string system;
    double energy_kev = 0;
    std::optional<double> eta;
    bool eta_critical = false;
    std::string spin = "0";
    std::string stat;
    std::string polarization = "unpolarized";
    double a = 1.0;

    void attach(CLI::App& cmd, bool with_critical) {
        cmd.add_option("--system", system, "catalog system, e.g. alpha-alpha");
        cmd.add_option("--energy", energy_kev, "CM energy (keV), with --system");
        cmd.add_option("--eta", eta, "Sommerfeld parameter");
        if (with_critical)
            cmd.add_flag("--eta-critical", eta_critical, "use eta_C = sqrt(3s+2)");
        cmd.add_option("--spin", spin, "spin: 0, 1, 1/2, 9/2 ...")->capture_default_str();
        cmd.add_option("--stat", stat, "boson or fermion (default: from spin)");
        cmd.add_option("--polarization", polarization, "unpolarized or aligned")->capture_default_str();
        cmd.add_option("--a", a, "half closest-approach distance (fm) without --system")->capture_default_str();
    }
};

struct Resolved {
    MottParams params;
    Statistics stat;
    std::string system;
};

/// Turns CoulombFlags into model parameters, echoing everything into `params`.
Resolved resolve_coulomb(const CoulombFlags& flags, const std::vector<ParticleSpecies>& catalog,
                         const PhysicalConstants& c, ordered_json& params) {
    const auto pol = parse_polarization(flags.polarization);
    if (!flags.system.empty()) {
        if (flags.eta || flags.eta_critical)
            throw DomainError("--system cannot be combined with --eta/--eta-critical");
        const auto& species = find_species(catalog, flags.system);
        const CollisionSystem sys{species, flags.energy_kev};
        const MottParams mp{half_closest_approach(sys, c), sommerfeld_eta(sys, c), species.spin(), pol};
        const Statistics stat = flags.stat.empty() ? species.spin().statistics() : parse_statistics(flags.stat);
        require_consistent(mp.spin, stat);
        params["system"] = species.name() + "-" + species.name();
        params["energy_kev"] = flags.energy_kev;
        params["z"] = species.z();
        params["mass_mev"] = species.mass_mev();
        params["spin"] = mp.spin.to_string();
        params["statistics"] = to_string(stat);
        params["polarization"] = to_string(pol);
        params["eta"] = mp.eta;
        params["a_fm"] = mp.a;
        return {mp, stat, species.name()};
    }
    const Spin spin = Spin::parse(flags.spin);
    if (flags.eta && flags.eta_critical)
        throw DomainError("--eta and --eta-critical are exclusive");
    if (!flags.eta && !flags.eta_critical)
        throw DomainError("one of --system, --eta or --eta-critical is required");
    const double eta = flags.eta_critical ? critical_eta(spin) : *flags.eta;
    if (!(eta > 0) || !(flags.a > 0))
        throw DomainError("--eta and --a must be positive");
    const Statistics stat = flags.stat.empty() ? spin.statistics() : parse_statistics(flags.stat);
    require_consistent(spin, stat);
    params["spin"] = spin.to_string();
    params["statistics"] = to_string(stat);
    params["polarization"] = to_string(pol);
    params["eta"] = eta;
    params["a_fm"] = flags.a;
    return {MottParams{flags.a, eta, spin, pol}, stat, {}};
}

ordered_json number_or_none(const std::optional<double>& value) {
    return value ? ordered_json(*value) : ordered_json("none");
}

std::vector<ParticleSpecies> make_catalog(const std::string& path, const PhysicalConstants& c) {
    auto catalog = path.empty() ? std::vector<ParticleSpecies>{} : load_catalog(path, c);
    for (auto& species : built_in_catalog(c))
        catalog.push_back(std::move(species));
    return catalog;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Identical-particle elastic scattering: Mott and hard-sphere cross sections, "
                 "critical Sommerfeld parameter and transverse-isotropy analysis",
                 tool_name};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    std::string format = "csv";
    std::string catalog_path;
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--catalog", catalog_path, "extra species catalog (name Z mass 2s)");

    // critical
    auto* critical = app.add_subcommand("critical", "critical Sommerfeld parameter sqrt(3s+2)");
    std::string critical_spin;
    bool numeric = false;
    std::vector<double> bracket;
    critical->add_option("--spin", critical_spin, "spin")->required();
    critical->add_flag("--numeric", numeric, "also root-find the finite-difference curvature");
    critical->add_option("--bracket", bracket, "eta bracket for --numeric (default 0.5 2*eta_C)")->expected(2);

    // kinematics
    auto* kinematics = app.add_subcommand("kinematics", "eta, a, k and E_C for a catalog system");
    std::string kin_system;
    double kin_energy = 0;
    kinematics->add_option("--system", kin_system, "catalog system")->required();
    kinematics->add_option("--energy", kin_energy, "CM energy (keV)")->required();

    // angular
    auto* angular = app.add_subcommand("angular", "Coulomb angular distribution");
    CoulombFlags angular_flags;
    GridFlags angular_grid;
    bool incoherent = false;
    std::string normalize = "none";
    angular_flags.attach(*angular, true);
    angular_grid.attach(*angular);
    angular->add_flag("--incoherent", incoherent, "incoherent term only");
    angular->add_option("--normalize", normalize, "none or rutherford90 (divide by a^2)")
        ->check(CLI::IsMember({"none", "rutherford90"}))
        ->capture_default_str();

    // table
    auto* table = app.add_subcommand("table", "critical energy, barrier and sigma(90) per system");

    // plateau
    auto* plateau_cmd = app.add_subcommand("plateau", "flat band around 90 degrees");
    CoulombFlags plateau_flags;
    GridFlags plateau_grid;
    double epsilon = default_plateau_epsilon;
    std::optional<double> plateau_kr;
    plateau_flags.attach(*plateau_cmd, true);
    plateau_grid.attach(*plateau_cmd);
    plateau_cmd->add_option("--epsilon", epsilon, "relative tolerance")->capture_default_str();
    plateau_cmd->add_option("--kr", plateau_kr, "use the hard-sphere model at this kR");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "curves at eta_C (1-delta), eta_C, eta_C (1+delta)");
    std::string sweep_spin;
    double delta = 0.05;
    GridFlags sweep_grid;
    sweep->add_option("--spin", sweep_spin, "spin")->required();
    sweep->add_option("--delta", delta, "relative eta shift")->capture_default_str();
    sweep_grid.attach(*sweep);

    // hardsphere
    auto* hardsphere = app.add_subcommand("hardsphere", "hard-sphere identical-particle scattering");
    std::optional<double> kr;
    std::string hs_spin = "0", hs_stat, hs_pol = "unpolarized";
    std::vector<double> scan;
    double scan_step = critical_kR_default_step;
    GridFlags hs_grid;
    hardsphere->add_option("--kr", kr, "kR");
    hardsphere->add_option("--spin", hs_spin, "spin")->capture_default_str();
    hardsphere->add_option("--stat", hs_stat, "boson or fermion (default: from spin)");
    hardsphere->add_option("--polarization", hs_pol, "unpolarized or aligned")->capture_default_str();
    hardsphere->add_option("--critical-scan", scan, "scan kR in [lo, hi] for the critical value")->expected(2);
    hardsphere->add_option("--step", scan_step, "scan step")->capture_default_str();
    hs_grid.attach(*hardsphere);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        PhysicalConstants constants;
        if (const char* path = std::getenv("MOTT_TI_CONSTANTS"); path && *path)
            constants = load_constants(path);
        const auto catalog = make_catalog(catalog_path, constants);

        OutputEnvelope env;
        env.constants = constants;
        const auto fmt = format == "json" ? OutputFormat::Json : OutputFormat::Csv;

        if (*critical) {
            env.command = "critical";
            const Spin spin = Spin::parse(critical_spin);
            const double closed = critical_eta(spin);
            env.params["spin"] = spin.to_string();
            env.params["numeric"] = numeric;
            if (!numeric) {
                env.columns = {"spin", "eta_c"};
                env.add_row({spin.to_string(), closed});
            } else {
                const Interval br = bracket.empty() ? Interval{0.5, 2 * closed} : Interval{bracket[0], bracket[1]};
                env.params["bracket_lo"] = br.lo;
                env.params["bracket_hi"] = br.hi;
                const double root = critical_eta_numeric(spin, br);
                env.columns = {"spin", "eta_c", "eta_c_numeric", "difference"};
                env.add_row({spin.to_string(), closed, root, root - closed});
            }
        } else if (*kinematics) {
            env.command = "kinematics";
            const auto& species = find_species(catalog, kin_system);
            const CollisionSystem sys{species, kin_energy};
            env.params["system"] = species.name() + "-" + species.name();
            env.params["energy_kev"] = kin_energy;
            env.columns = {"system", "energy_kev", "eta", "a_fm", "k_per_fm", "critical_energy_kev"};
            env.add_row({species.name(), kin_energy, sommerfeld_eta(sys, constants),
                         half_closest_approach(sys, constants), wavenumber(sys, constants),
                         critical_energy(species, constants)});
        } else if (*angular) {
            env.command = "angular";
            const auto resolved = resolve_coulomb(angular_flags, catalog, constants, env.params);
            angular_grid.echo(env.params);
            env.params["incoherent_only"] = incoherent;
            env.params["normalize"] = normalize;
            const auto grid = angular_grid.grid();
            const auto curve = incoherent ? build_incoherent_curve(resolved.params.a, grid)
                                          : build_curve(resolved.params, resolved.stat, grid);
            env.params["model"] = curve.meta.model;
            const double a2 = resolved.params.a * resolved.params.a;
            if (normalize == "rutherford90") {
                env.columns = {"theta_deg", "sigma_over_a2"};
                for (std::size_t i = 0; i < grid.size(); ++i)
                    env.add_row({grid[i], curve.values[i] / a2});
            } else {
                env.columns = {"theta_deg", "sigma_fm2_per_sr", "sigma_barn_per_sr"};
                for (std::size_t i = 0; i < grid.size(); ++i)
                    env.add_row({grid[i], curve.values[i], curve.values[i] / fm2_per_barn});
            }
        } else if (*table) {
            env.command = "table";
            env.notes["barrier_radius"] = "R_B = 2 r0 (M/m0)^(1/3), sum of the two nuclear radii";
            env.notes["feasible"] = "E_C < V_B; condition_lhs/rhs = Z^(10/3) vs 25.4 (2s+1) is informational";
            env.notes["sigma90_eq15"] = "33.7 barn (3s+2)^2 / Z^6";
            env.notes["sigma90_direct"] = "2 a^2 (1 + 1/(2s+1)) at E_C";
            env.notes["flag"] = "sigma90_inconsistent: published sigma(90) differs by >10% from both computed values";
            env.columns = {"system",
                           "spin",
                           "e_c_kev",
                           "v_b_kev",
                           "sigma90_eq15_barn",
                           "sigma90_direct_barn",
                           "feasible",
                           "condition_lhs",
                           "condition_rhs",
                           "published_e_c_kev",
                           "published_v_b_kev",
                           "published_sigma90_barn",
                           "flag"};
            auto species_list = catalog_path.empty() ? built_in_catalog(constants) : load_catalog(catalog_path, constants);
            for (const auto& row : table_one(species_list, constants)) {
                ordered_json pub_e = nullptr, pub_v = nullptr, pub_s = nullptr;
                if (row.published) {
                    pub_e = row.published->e_c_kev;
                    pub_v = row.published->v_b_kev;
                    pub_s = row.published->sigma90_barn;
                }
                env.add_row({row.name + "-" + row.name, row.spin.to_string(), row.e_c_kev, row.v_b_kev,
                             row.sigma90_eq15_barn, row.sigma90_direct_barn, row.feasible, row.condition_lhs,
                             row.condition_rhs, pub_e, pub_v, pub_s,
                             row.sigma90_discrepancy ? "sigma90_inconsistent" : ""});
            }
        } else if (*plateau_cmd) {
            env.command = "plateau";
            plateau_grid.echo(env.params);
            env.params["epsilon"] = epsilon;
            const auto grid = plateau_grid.grid();
            CrossSectionCurve curve;
            if (plateau_kr) {
                const Spin spin = Spin::parse(plateau_flags.spin);
                const Statistics stat =
                    plateau_flags.stat.empty() ? spin.statistics() : parse_statistics(plateau_flags.stat);
                const HardSphereParams hp{*plateau_kr, spin, stat, parse_polarization(plateau_flags.polarization),
                                          std::nullopt, 1e-12};
                env.params["model"] = "hard-sphere";
                env.params["kr"] = *plateau_kr;
                env.params["spin"] = spin.to_string();
                env.params["statistics"] = to_string(stat);
                env.params["polarization"] = to_string(hp.polarization);
                curve = build_curve(hp, grid);
            } else {
                const auto resolved = resolve_coulomb(plateau_flags, catalog, constants, env.params);
                env.params["model"] = "mott-coulomb";
                curve = build_curve(resolved.params, resolved.stat, grid);
            }
            const auto report = plateau(curve, epsilon);
            env.columns = {"epsilon", "theta_lo_deg", "theta_hi_deg", "width_deg", "curvature_90", "reference_value"};
            env.add_row({report.epsilon, report.theta_lo, report.theta_hi, report.width,
                         std::isnan(report.curvature_90) ? ordered_json(nullptr) : ordered_json(report.curvature_90),
                         report.reference_value});
        } else if (*sweep) {
            env.command = "sweep";
            const Spin spin = Spin::parse(sweep_spin);
            env.params["spin"] = spin.to_string();
            env.params["delta"] = delta;
            sweep_grid.echo(env.params);
            const auto result = sensitivity_sweep(spin, delta, sweep_grid.grid());
            env.summary["classification"] = to_string(result.shapes[0]) + "," + to_string(result.shapes[1]) + "," +
                                            to_string(result.shapes[2]);
            env.summary["eta_minus"] = result.etas[0];
            env.summary["eta_critical"] = result.etas[1];
            env.summary["eta_plus"] = result.etas[2];
            env.summary["curvature_minus_over_a2"] = result.curvatures[0];
            env.summary["curvature_critical_over_a2"] = result.curvatures[1];
            env.summary["curvature_plus_over_a2"] = result.curvatures[2];
            env.summary["energy_shift_first_order"] = result.energy_shift_first_order;
            env.summary["energy_shift_at_eta_minus"] = result.energy_shift_exact[0];
            env.summary["energy_shift_at_eta_plus"] = result.energy_shift_exact[1];
            env.columns = {"theta_deg", "sigma_minus_over_a2", "sigma_critical_over_a2", "sigma_plus_over_a2"};
            const auto& t = result.curves[1].thetas_deg;
            for (std::size_t i = 0; i < t.size(); ++i)
                env.add_row({t[i], result.curves[0].values[i], result.curves[1].values[i], result.curves[2].values[i]});
        } else if (*hardsphere) {
            env.command = "hardsphere";
            const Spin spin = Spin::parse(hs_spin);
            const Statistics stat = hs_stat.empty() ? spin.statistics() : parse_statistics(hs_stat);
            const Polarization pol = parse_polarization(hs_pol);
            require_consistent(spin, stat);
            env.params["spin"] = spin.to_string();
            env.params["statistics"] = to_string(stat);
            env.params["polarization"] = to_string(pol);
            if (!scan.empty()) {
                env.params["scan_lo"] = scan[0];
                env.params["scan_hi"] = scan[1];
                env.params["step"] = scan_step;
                const auto root = find_critical_kR(spin, stat, {scan[0], scan[1]}, scan_step, pol);
                env.columns = {"spin", "statistics", "critical_kr"};
                env.add_row({spin.to_string(), to_string(stat), number_or_none(root)});
            } else {
                if (!kr)
                    throw DomainError("hardsphere needs --kr or --critical-scan");
                env.params["kr"] = *kr;
                hs_grid.echo(env.params);
                const auto grid = hs_grid.grid();
                const auto curve = build_curve(HardSphereParams{*kr, spin, stat, pol, std::nullopt, 1e-12}, grid);
                env.columns = {"theta_deg", "sigma_over_r2"};
                for (std::size_t i = 0; i < grid.size(); ++i)
                    env.add_row({grid[i], curve.values[i]});
            }
        }
        write(env, fmt, out);
        return exit_ok;
    } catch (const RootNotFound& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace tiso::cli
