#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidqi/braid.hpp"
#include "braidqi/entangle.hpp"
#include "braidqi/gates.hpp"
#include "braidqi/jsonio.hpp"
#include "braidqi/kaon.hpp"
#include "braidqi/qlattice.hpp"
#include "braidqi/report.hpp"
#include "braidqi/susyqm.hpp"

namespace {

using namespace braidqi;

constexpr double kPi = 3.14159265358979323846;

struct CommonOpts {
    std::string out_path;
    std::string format;  // resolved per verb after parsing
    std::uint64_t seed = 42;
    double tol_algebraic = 1e-12;
    double tol_eigen = 1e-10;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool tabular) {
    cmd->add_option("--out", o.out_path, "write the output to this file instead of stdout");
    const std::vector<std::string> formats =
        tabular ? std::vector<std::string>{"json", "csv"} : std::vector<std::string>{"json"};
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    cmd->add_option("--seed", o.seed, "seed for the deterministic state generators");
    cmd->add_option("--tol-algebraic", o.tol_algebraic,
                    "tolerance for identities that hold exactly in the algebra")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-eigen", o.tol_eigen, "tolerance for spectral checks")
        ->check(CLI::PositiveNumber);
}

// Writes the payload byte-exactly and maps the pass flag to the exit status.
int emit(const CommonOpts& o, const std::string& payload, bool pass) {
    if (o.out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file: " << o.out_path << "\n";
            return 1;
        }
        f << payload;
        if (!f.good()) {
            std::cerr << "failed writing output file: " << o.out_path << "\n";
            return 1;
        }
    }
    return pass ? 0 : 1;
}

BraidSign sign_from(const std::string& s) {
    return s == "minus" ? BraidSign::minus : BraidSign::plus;
}

ordered_json state_row(const TwoQubitState& s) {
    ordered_json row;
    row["amplitudes"] = complex_vector_to_json({s.amp[0], s.amp[1], s.amp[2], s.amp[3]});
    const DecomposabilityResult d = is_decomposable(s);
    row["entanglement_entropy_bits"] = entanglement_entropy(s);
    row["product_state"] = d.decomposable;
    row["witness"] = d.witness;
    return row;
}

int run_verify_braid(const CommonOpts& o, double phi, const std::string& sign_s) {
    const BraidOperator b = eight_vertex_braid(sign_from(sign_s), phi);
    const UnitarityCheck u = is_unitary(b.matrix, o.tol_algebraic);
    const double braid_res = braid_relation_residual(b.matrix);
    const double far_res = far_commutativity_residual(b.matrix);
    const auto family = [&b](double z) { return yang_baxterize(b, z); };
    ordered_json grid = ordered_json::array();
    double max_q = 0.0;
    for (const double gx : {0.25, 0.5, 1.0}) {
        for (const double gy : {0.25, 0.5, 1.0}) {
            const double r = qybe_residual(family, gx, gy);
            max_q = std::max(max_q, r);
            ordered_json cell;
            cell["x"] = gx;
            cell["y"] = gy;
            cell["residual"] = r;
            grid.push_back(std::move(cell));
        }
    }
    const bool pass = u.unitary && braid_res < o.tol_algebraic && far_res < o.tol_algebraic &&
                      max_q < o.tol_algebraic;
    ordered_json root;
    root["command"] = "verify braid";
    root["phi"] = phi;
    root["sign"] = sign_s;
    root["unitarity_residual"] = u.residual;
    root["braid_residual"] = braid_res;
    root["far_commutativity_residual"] = far_res;
    root["qybe_residual_grid"] = std::move(grid);
    root["max_qybe_residual"] = max_q;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_verify_qybe(const CommonOpts& o, double phi, const std::string& sign_s, double x,
                    double y) {
    const BraidSign sign = sign_from(sign_s);
    const BraidOperator b = eight_vertex_braid(sign, phi);
    const bool at_zero = (yang_baxterize(b, 0.0) == b.matrix);
    const auto family = [&b](double z) { return yang_baxterize(b, z); };
    const double q = qybe_residual(family, x, y);
    const SpectralParams sp = spectral_params(x);
    const double trig_res = frobenius_distance(scale(sp.cos_theta, yang_baxterize(b, x)),
                                               trig_extension(sign, sp.theta, phi));
    const bool pass = at_zero && q < o.tol_algebraic && trig_res < o.tol_algebraic;
    ordered_json root;
    root["command"] = "verify qybe";
    root["phi"] = phi;
    root["sign"] = sign_s;
    root["x"] = x;
    root["y"] = y;
    root["extension_at_zero_equals_operator"] = at_zero;
    root["qybe_residual"] = q;
    root["trig_form_residual"] = trig_res;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_verify_clifford(const CommonOpts& o) {
    const bool relations = clifford_relations_exact();
    const double square_res = sqrt_not_square_residual();
    const bool pass = relations && square_res == 0.0;
    ordered_json root;
    root["command"] = "verify clifford";
    root["relations_exact"] = relations;
    root["sqrt_not_square_residual"] = square_res;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_gates_decompose(const CommonOpts& o) {
    const CnotDecomposition cd = cnot_decomposition();
    const auto factor_row = [](const FactorCheck& f) {
        ordered_json j;
        j["displayed_unitarity_residual"] = f.displayed_unitarity_residual;
        j["corrected_unitarity_residual"] = f.corrected_unitarity_residual;
        j["altered"] = f.altered;
        return j;
    };
    ordered_json factors;
    factors["m1"] = factor_row(cd.m1);
    factors["m2"] = factor_row(cd.m2);
    factors["n1"] = factor_row(cd.n1);
    factors["n2"] = factor_row(cd.n2);
    factors["r"] = factor_row(cd.r);
    const bool pass = cd.corrected_vs_cnot.frobenius_distance < o.tol_algebraic;
    ordered_json root;
    root["command"] = "gates decompose-cnot";
    root["factors"] = std::move(factors);
    root["displayed_distance_to_cnot"] = cd.displayed_vs_cnot.frobenius_distance;
    root["r_fixed_only_distance_to_cnot"] = cd.r_fixed_only_vs_cnot.frobenius_distance;
    root["corrected_distance_to_cnot"] = cd.corrected_vs_cnot.frobenius_distance;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_gates_sqrt_not(const CommonOpts& o) {
    const ComplexMatrix m = sqrt_not_gate();
    const UnitarityCheck u = is_unitary(m, o.tol_algebraic);
    const double square_res = sqrt_not_square_residual();
    const bool pass = u.unitary && square_res == 0.0;
    ordered_json root;
    root["command"] = "gates sqrt-not";
    root["matrix"] = complex_matrix_to_json(m);
    root["unitarity_residual"] = u.residual;
    root["square_residual"] = square_res;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_bell(const CommonOpts& o, double phi, const std::string& sign_s) {
    const auto states = bell_states(sign_from(sign_s), phi);
    ordered_json rows = ordered_json::array();
    bool pass = true;
    for (const TwoQubitState& s : states) {
        ordered_json row = state_row(s);
        pass = pass && std::abs(row["entanglement_entropy_bits"].get<double>() - 1.0) < 1e-10 &&
               !row["product_state"].get<bool>();
        rows.push_back(std::move(row));
    }
    ordered_json root;
    root["command"] = "bell";
    root["phi"] = phi;
    root["sign"] = sign_s;
    root["states"] = std::move(rows);
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_entangle_check(const CommonOpts& o, const std::vector<double>& amps) {
    ordered_json root;
    root["command"] = "entangle check";
    if (amps.empty()) {
        // Seeded panel: generic states should have entropies in [0, 1] bits and
        // product states should be flagged decomposable with entropy ~ 0.
        const auto generic = random_states(5, o.seed);
        const auto products = random_product_states(5, o.seed);
        ordered_json generic_rows = ordered_json::array();
        ordered_json product_rows = ordered_json::array();
        bool pass = true;
        for (const TwoQubitState& s : generic) {
            ordered_json row = state_row(s);
            const double e = row["entanglement_entropy_bits"].get<double>();
            pass = pass && e > -1e-12 && e < 1.0 + 1e-12;
            generic_rows.push_back(std::move(row));
        }
        for (const TwoQubitState& s : products) {
            ordered_json row = state_row(s);
            pass = pass && row["product_state"].get<bool>() &&
                   row["entanglement_entropy_bits"].get<double>() < 1e-8;
            product_rows.push_back(std::move(row));
        }
        root["seed"] = o.seed;
        root["random_states"] = std::move(generic_rows);
        root["product_states"] = std::move(product_rows);
        root["pass"] = pass;
        return emit(o, json_to_string(root), pass);
    }
    if (amps.size() != 4 && amps.size() != 8) {
        std::cerr << "--amps expects 4 real or 8 interleaved re,im values\n";
        return 2;
    }
    std::array<cxd, 4> c{};
    if (amps.size() == 4) {
        for (int i = 0; i < 4; ++i) c[static_cast<size_t>(i)] = cxd{amps[static_cast<size_t>(i)], 0.0};
    } else {
        for (int i = 0; i < 4; ++i)
            c[static_cast<size_t>(i)] =
                cxd{amps[static_cast<size_t>(2 * i)], amps[static_cast<size_t>(2 * i + 1)]};
    }
    double norm_sq = 0.0;
    for (const cxd& z : c) norm_sq += std::norm(z);
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) {
        std::cerr << "--amps must not be the zero vector\n";
        return 2;
    }
    const bool renormalized = std::abs(norm - 1.0) > 1e-12;
    for (cxd& z : c) z /= norm;
    const TwoQubitState s = make_two_qubit(c[0], c[1], c[2], c[3]);
    ordered_json row = state_row(s);
    root["input_norm"] = norm;
    root["renormalized"] = renormalized;
    root["amplitudes"] = row["amplitudes"];
    root["product_state"] = row["product_state"];
    root["witness"] = row["witness"];
    root["entanglement_entropy_bits"] = row["entanglement_entropy_bits"];
    root["pass"] = true;
    return emit(o, json_to_string(root), true);
}

int run_kaon_states(const CommonOpts& o, double phi, const std::string& sign_s) {
    const auto flavor = kaon_bell_states();
    const auto deformed = deformed_kaon_states(sign_from(sign_s), phi);
    ordered_json flavor_rows = ordered_json::array();
    ordered_json deformed_rows = ordered_json::array();
    bool pass = true;
    for (const TwoQubitState& s : flavor) {
        ordered_json row = state_row(s);
        pass = pass && std::abs(row["entanglement_entropy_bits"].get<double>() - 1.0) < 1e-10;
        flavor_rows.push_back(std::move(row));
    }
    for (const TwoQubitState& s : deformed) {
        ordered_json row = state_row(s);
        pass = pass && std::abs(row["entanglement_entropy_bits"].get<double>() - 1.0) < 1e-10;
        deformed_rows.push_back(std::move(row));
    }
    ordered_json root;
    root["command"] = "kaon states";
    root["phi"] = phi;
    root["sign"] = sign_s;
    root["flavor_states"] = std::move(flavor_rows);
    root["deformed_states"] = std::move(deformed_rows);
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_kaon_mixture(const CommonOpts& o, double eps_re, double eps_im, double lambda) {
    const KaonMixture m{cxd{eps_re, eps_im}, lambda};
    const MixtureDensity md = rho_mixture(m);
    const double big_m = horodecki_M(m);
    const bool pass = md.physical;
    ordered_json root;
    root["command"] = "kaon mixture";
    root["epsilon"] = ordered_json::array({eps_re, eps_im});
    root["lambda"] = lambda;
    root["t"] = mixture_t(m);
    root["horodecki_m"] = big_m;
    root["violates_bell_inequality"] = big_m > 1.0;
    root["eigenvalues"] = real_vector_to_json(md.eigenvalues);
    root["physical"] = md.physical;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_kaon_threshold(const CommonOpts& o, double eps_re, double eps_im) {
    const cxd eps{eps_re, eps_im};
    const ViolationThreshold vt = violation_threshold(eps);
    ordered_json root;
    root["command"] = "kaon threshold";
    root["epsilon"] = ordered_json::array({eps_re, eps_im});
    root["t"] = mixture_t(KaonMixture{eps, 0.0});
    root["verbatim_lambda"] = vt.verbatim_lambda;
    root["derived_lambda"] = vt.derived_lambda;
    root["discrepancy"] = std::abs(vt.verbatim_lambda - vt.derived_lambda);
    root["pass"] = true;
    return emit(o, json_to_string(root), true);
}

int run_kaon_lambda_from_eta(const CommonOpts& o, double eta) {
    ordered_json root;
    root["command"] = "kaon lambda-from-eta";
    root["eta"] = eta;
    root["lambda"] = lambda_from_eta(eta);
    root["pass"] = true;
    return emit(o, json_to_string(root), true);
}

int run_kaon_boundary(const CommonOpts& o, double v) {
    const EntanglementBoundary eb = entanglement_boundary(v);
    ordered_json root;
    root["command"] = "kaon boundary";
    root["v"] = v;
    root["verbatim_crossing_found"] = eb.verbatim_found;
    if (eb.verbatim_found)
        root["alpha_star_verbatim"] = eb.alpha_star_verbatim;
    else
        root["alpha_star_verbatim"] = nullptr;
    root["corrected_crossing_found"] = eb.corrected_found;
    if (eb.corrected_found)
        root["alpha_star_corrected"] = eb.alpha_star_corrected;
    else
        root["alpha_star_corrected"] = nullptr;
    root["criterion_alpha"] = eb.criterion_alpha;
    root["quoted_alpha"] = eb.quoted_alpha;
    root["pass"] = true;
    return emit(o, json_to_string(root), true);
}

int run_kaon_source(const CommonOpts& o, double alpha, double v) {
    const SourceAssembly sa = contaminated_source({alpha, v});
    const bool pass = sa.assembled_check.valid &&
                      std::abs(sa.entropy_direct - sa.entropy_formula_corrected) < 1e-10;
    ordered_json root;
    root["command"] = "kaon source";
    root["alpha"] = alpha;
    root["v"] = v;
    root["layout"] = sa.layout;
    root["displayed_random_block_eigenvalues"] = real_vector_to_json(sa.rho_r_eigenvalues);
    root["displayed_random_block_physical"] = sa.rho_r_physical;
    root["verbatim_single_block_trace"] = sa.verbatim_single_block_trace;
    root["verbatim_trace_deficit"] = sa.verbatim_trace_deficit;
    root["assembled_eigenvalues"] = real_vector_to_json(sa.assembled_eigenvalues);
    root["assembled_valid"] = sa.assembled_check.valid;
    root["assembled_min_eigenvalue"] = sa.assembled_check.min_eigenvalue;
    root["entropy_direct"] = sa.entropy_direct;
    root["entropy_formula_verbatim"] = sa.entropy_formula_verbatim;
    root["entropy_formula_corrected"] = sa.entropy_formula_corrected;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_lattice_solve(const CommonOpts& o, const std::string& potential, double a, double b, int n,
                      int levels) {
    if (std::isnan(a)) a = (potential == "box") ? 0.0 : -8.0;
    if (std::isnan(b)) b = (potential == "box") ? kPi : 8.0;
    if (n == 0) n = (potential == "box") ? 400 : 801;
    const LatticeProblem p =
        (potential == "box") ? box_problem(a, b, n) : harmonic_problem(a, b, n);
    const LatticeSolution sol = solve_lattice_schrodinger(p, levels);
    const double width = b - a;
    ordered_json energies = ordered_json::array();
    ordered_json analytic = ordered_json::array();
    ordered_json errors = ordered_json::array();
    double max_rel = 0.0;
    for (size_t j = 0; j < sol.energies.size(); ++j) {
        const double e = sol.energies[j];
        const double ea = (potential == "box")
                              ? 0.5 * std::pow((static_cast<double>(j) + 1.0) * kPi / width, 2)
                              : static_cast<double>(j) + 0.5;
        energies.push_back(e);
        analytic.push_back(ea);
        errors.push_back(std::abs(e - ea));
        max_rel = std::max(max_rel, std::abs(e - ea) / std::max(std::abs(ea), 1.0));
    }
    const bool pass = max_rel < 1e-3;
    ordered_json root;
    root["command"] = "lattice solve";
    root["potential"] = potential;
    root["a"] = a;
    root["b"] = b;
    root["n"] = n;
    root["dx0"] = p.dx0;
    root["energies"] = std::move(energies);
    root["analytic_energies"] = std::move(analytic);
    root["abs_errors"] = std::move(errors);
    root["max_rel_error"] = max_rel;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_lattice_converge(const CommonOpts& o, const std::string& potential,
                         std::vector<double> dx_list, int level) {
    if (dx_list.empty()) dx_list = {0.08, 0.04, 0.02};
    std::function<LatticeProblem(double)> family;
    double analytic = 0.0;
    if (potential == "box") {
        family = [](double dx) {
            const int n = static_cast<int>(std::lround(kPi / dx)) - 1;
            return box_problem(0.0, kPi, n);
        };
        analytic = 0.5 * std::pow(static_cast<double>(level) + 1.0, 2);
    } else {
        family = [](double dx) {
            const int n = static_cast<int>(std::lround(16.0 / dx)) - 1;
            return harmonic_problem(-8.0, 8.0, n);
        };
        analytic = static_cast<double>(level) + 0.5;
    }
    const std::vector<ConvergenceRow> rows = continuum_limit_study(family, dx_list, level, analytic);
    const bool pass = !rows.empty() && rows.back().has_order &&
                      std::abs(rows.back().observed_order - 2.0) < 0.2;
    if (o.format == "json") {
        ordered_json root;
        root["command"] = "lattice converge";
        root["potential"] = potential;
        root["level"] = level;
        root["analytic_energy"] = analytic;
        ordered_json table = ordered_json::array();
        for (const ConvergenceRow& r : rows) {
            ordered_json row;
            row["dx0"] = r.dx0;
            row["energy"] = r.energy;
            row["abs_error"] = r.abs_error;
            if (r.has_order)
                row["observed_order"] = r.observed_order;
            else
                row["observed_order"] = nullptr;
            table.push_back(std::move(row));
        }
        root["rows"] = std::move(table);
        root["pass"] = pass;
        return emit(o, json_to_string(root), pass);
    }
    std::string csv = "dx0,energy,abs_error,observed_order\n";
    for (const ConvergenceRow& r : rows) {
        csv += format_double(r.dx0) + ',' + format_double(r.energy) + ',' +
               format_double(r.abs_error) + ',' +
               (r.has_order ? format_double(r.observed_order) : std::string()) + '\n';
    }
    return emit(o, csv, pass);
}

int run_qderiv(const CommonOpts& o, int n, double q2) {
    if (q2 == 1.0) {
        std::cerr << "--q2 must differ from 1\n";
        return 2;
    }
    ordered_json rows = ordered_json::array();
    double max_bracket_dev = 0.0;
    double max_identity = 0.0;
    for (int m = 1; m <= n; ++m) {
        const auto f = [m](double y) { return std::pow(y, m); };
        const double bracket = q_bracket(m, q2);
        const double right = q_derivative(f, q2, 1.0);
        const double left = q_left_derivative(f, q2, 1.0);
        max_bracket_dev =
            std::max(max_bracket_dev, std::abs(right - bracket) / std::max(1.0, std::abs(bracket)));
        max_identity =
            std::max(max_identity, std::abs(left + q2 * right) / std::max(1.0, std::abs(right)));
        ordered_json row;
        row["order"] = m;
        row["bracket"] = bracket;
        row["right_derivative"] = right;
        row["left_derivative"] = left;
        rows.push_back(std::move(row));
    }
    const bool pass = max_bracket_dev < 1e-12 && max_identity < 1e-12;
    ordered_json root;
    root["command"] = "qderiv";
    root["q2"] = q2;
    root["rows"] = std::move(rows);
    root["max_bracket_deviation"] = max_bracket_dev;
    root["negation_identity_residual"] = max_identity;
    root["pass"] = pass;
    return emit(o, json_to_string(root), pass);
}

int run_susy_spectrum(const CommonOpts& o, const std::string& potential, int n, int levels) {
    const double dx = 1.0 / 32.0;
    const SuperpotentialProblem prob = (potential == "linear")
                                           ? linear_superpotential(n, dx)
                                           : constant_superpotential(1.0, n, dx);
    const SusyPair pair = build_susy_pair(prob);
    const DegeneracyReport rep = spectrum_degeneracy_report(pair, levels, 0.5, 1e-6);
    const IntertwiningResiduals iw = check_intertwining(pair);
    double max_gap = 0.0;
    for (const DegeneracyRow& r : rep.pairs) max_gap = std::max(max_gap, r.rel_gap);
    const bool pass = !rep.pairs.empty() && max_gap < 1e-6 && rep.h0_unmatched.empty() &&
                      rep.h1_unmatched.empty() && iw.h0_aplus < 1e-8 && iw.h1_aminus < 1e-8;
    if (o.format == "json") {
        ordered_json root;
        root["command"] = "susy spectrum";
        root["potential"] = potential;
        root["n"] = n;
        root["dx"] = dx;
        root["h0_below_floor"] = real_vector_to_json(rep.h0_below_floor);
        root["h1_below_floor"] = real_vector_to_json(rep.h1_below_floor);
        ordered_json table = ordered_json::array();
        for (const DegeneracyRow& r : rep.pairs) {
            ordered_json row;
            row["k"] = r.k;
            row["h0_energy"] = r.e0;
            row["h1_energy"] = r.e1;
            row["rel_gap"] = r.rel_gap;
            table.push_back(std::move(row));
        }
        root["pairs"] = std::move(table);
        root["max_rel_gap"] = max_gap;
        ordered_json iwj;
        iwj["h0_aplus"] = iw.h0_aplus;
        iwj["h1_aminus"] = iw.h1_aminus;
        root["intertwining_residuals"] = std::move(iwj);
        root["pass"] = pass;
        return emit(o, json_to_string(root), pass);
    }
    std::string csv = "kind,h0_energy,h1_energy,rel_gap\n";
    for (const double e : rep.h0_below_floor)
        csv += "below-floor-h0," + format_double(e) + ",,\n";
    for (const double e : rep.h1_below_floor)
        csv += "below-floor-h1,," + format_double(e) + ",\n";
    for (const DegeneracyRow& r : rep.pairs) {
        csv += "pair-" + std::to_string(r.k) + ',' + format_double(r.e0) + ',' +
               format_double(r.e1) + ',' + format_double(r.rel_gap) + '\n';
    }
    return emit(o, csv, pass);
}

int run_report(const CommonOpts& o) {
    const std::vector<Finding> findings = build_findings();
    try {
        ensure_mandatory_findings(findings);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    const std::string payload = (o.format == "csv") ? report_csv(findings) : report_json(findings);
    return emit(o, payload, true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification toolkit: braiding gate algebra, entangled-state "
                 "models, and discrete Schrodinger calculus"};
    app.require_subcommand(1);

    CommonOpts o;
    double phi = 0.0;
    std::string sign_s = "plus";
    double x = 0.3, y = 0.6;
    std::vector<double> amps;
    double eps_re = 0.0, eps_im = 0.0;
    double lambda = 0.0;
    double eta = 0.0;
    double v_weight = 1.0;
    double alpha = 0.5;
    std::string potential = "harmonic";
    double bound_a = std::nan("");
    double bound_b = std::nan("");
    int n_points = 0;
    int levels = 3;
    std::vector<double> dx_list;
    int level = 0;
    int q_orders = 5;
    double q2 = 1.21;
    std::string s_potential = "linear";
    int s_points = 401;
    int s_levels = 6;

    std::function<int()> task;
    const auto sign_check = CLI::IsMember({"plus", "minus"});

    CLI::App* verify = app.add_subcommand("verify", "check the core operator identities");
    verify->require_subcommand(1);
    CLI::App* vb = verify->add_subcommand("braid", "braid relation, unitarity, parameter relation");
    vb->add_option("--phi", phi, "deformation phase");
    vb->add_option("--sign", sign_s, "operator family")->check(sign_check);
    add_common(vb, o, false);
    vb->callback([&]() { task = [&]() { return run_verify_braid(o, phi, sign_s); }; });

    CLI::App* vq = verify->add_subcommand("qybe", "spectral-parameter extension checks");
    vq->add_option("--phi", phi, "deformation phase");
    vq->add_option("--sign", sign_s, "operator family")->check(sign_check);
    vq->add_option("--x", x, "first spectral parameter")->check(CLI::NonNegativeNumber);
    vq->add_option("--y", y, "second spectral parameter")->check(CLI::NonNegativeNumber);
    add_common(vq, o, false);
    vq->callback([&]() { task = [&]() { return run_verify_qybe(o, phi, sign_s, x, y); }; });

    CLI::App* vc = verify->add_subcommand("clifford", "exact gamma-matrix and projector algebra");
    add_common(vc, o, false);
    vc->callback([&]() { task = [&]() { return run_verify_clifford(o); }; });

    CLI::App* gates = app.add_subcommand("gates", "gate constructions");
    gates->require_subcommand(1);
    CLI::App* gd = gates->add_subcommand("decompose-cnot", "evaluate the displayed CNOT product");
    add_common(gd, o, false);
    gd->callback([&]() { task = [&]() { return run_gates_decompose(o); }; });
    CLI::App* gs = gates->add_subcommand("sqrt-not", "square root of NOT");
    add_common(gs, o, false);
    gs->callback([&]() { task = [&]() { return run_gates_sqrt_not(o); }; });

    CLI::App* bell = app.add_subcommand("bell", "phase-deformed maximally entangled states");
    bell->add_option("--phi", phi, "deformation phase");
    bell->add_option("--sign", sign_s, "operator family")->check(sign_check);
    add_common(bell, o, false);
    bell->callback([&]() { task = [&]() { return run_bell(o, phi, sign_s); }; });

    CLI::App* ec = app.add_subcommand("entangle", "entanglement diagnostics");
    ec->require_subcommand(1);
    CLI::App* ecc = ec->add_subcommand("check", "decomposability and entropy of a state");
    ecc->add_option("--amps", amps, "4 real or 8 interleaved re,im amplitudes")->delimiter(',');
    add_common(ecc, o, false);
    ecc->callback([&]() { task = [&]() { return run_entangle_check(o, amps); }; });

    CLI::App* kaon = app.add_subcommand("kaon", "neutral-meson entanglement model");
    kaon->require_subcommand(1);
    CLI::App* ks = kaon->add_subcommand("states", "flavor-basis entangled states");
    ks->add_option("--phi", phi, "deformation phase for the deformed variants");
    ks->add_option("--sign", sign_s, "operator family")->check(sign_check);
    add_common(ks, o, false);
    ks->callback([&]() { task = [&]() { return run_kaon_states(o, phi, sign_s); }; });

    CLI::App* km = kaon->add_subcommand("mixture", "two-parameter mixed state");
    km->add_option("--epsilon", eps_re, "CP-admixture parameter (real part)");
    km->add_option("--epsilon-imag", eps_im, "CP-admixture parameter (imaginary part)");
    km->add_option("--lambda", lambda, "mixing fraction")->check(CLI::Range(0.0, 1.0));
    add_common(km, o, false);
    km->callback([&]() { task = [&]() { return run_kaon_mixture(o, eps_re, eps_im, lambda); }; });

    CLI::App* kt = kaon->add_subcommand("threshold", "mixing fraction where Bell violation starts");
    kt->add_option("--epsilon", eps_re, "CP-admixture parameter (real part)");
    kt->add_option("--epsilon-imag", eps_im, "CP-admixture parameter (imaginary part)");
    add_common(kt, o, false);
    kt->callback([&]() { task = [&]() { return run_kaon_threshold(o, eps_re, eps_im); }; });

    CLI::App* kl = kaon->add_subcommand("lambda-from-eta", "mixing fraction from the decay ratio");
    kl->add_option("--eta", eta, "decay ratio in [0, 1/2]")->check(CLI::Range(0.0, 0.5));
    add_common(kl, o, false);
    kl->callback([&]() { task = [&]() { return run_kaon_lambda_from_eta(o, eta); }; });

    CLI::App* kb = kaon->add_subcommand("boundary", "separability boundary of the mixed source");
    kb->add_option("--v", v_weight, "entangled-pair purity weight")->check(CLI::Range(1e-6, 1.0));
    add_common(kb, o, false);
    kb->callback([&]() { task = [&]() { return run_kaon_boundary(o, v_weight); }; });

    CLI::App* ko = kaon->add_subcommand("source", "contaminated-source density operator");
    ko->add_option("--alpha", alpha, "pair weight")->check(CLI::Range(0.0, 1.0));
    ko->add_option("--v", v_weight, "entangled-pair purity weight")->check(CLI::Range(0.0, 1.0));
    add_common(ko, o, false);
    ko->callback([&]() { task = [&]() { return run_kaon_source(o, alpha, v_weight); }; });

    CLI::App* lattice = app.add_subcommand("lattice", "discrete Schrodinger solver");
    lattice->require_subcommand(1);
    CLI::App* ls = lattice->add_subcommand("solve", "lowest levels of a lattice Hamiltonian");
    ls->add_option("--potential", potential, "box or harmonic")
        ->check(CLI::IsMember({"box", "harmonic"}));
    ls->add_option("--a", bound_a, "left boundary");
    ls->add_option("--b", bound_b, "right boundary");
    ls->add_option("--n", n_points, "number of interior points")->check(CLI::Range(8, 20000));
    ls->add_option("--levels", levels, "number of levels")->check(CLI::Range(1, 12));
    add_common(ls, o, false);
    ls->callback([&]() {
        task = [&]() { return run_lattice_solve(o, potential, bound_a, bound_b, n_points, levels); };
    });

    CLI::App* lc = lattice->add_subcommand("converge", "continuum-limit order study");
    lc->add_option("--potential", potential, "box or harmonic")
        ->check(CLI::IsMember({"box", "harmonic"}));
    lc->add_option("--dx", dx_list, "comma-separated spacings, coarse to fine")->delimiter(',');
    lc->add_option("--level", level, "level index")->check(CLI::Range(0, 8));
    add_common(lc, o, true);
    lc->callback([&]() { task = [&]() { return run_lattice_converge(o, potential, dx_list, level); }; });

    CLI::App* qd = app.add_subcommand("qderiv", "deformed derivative table");
    qd->add_option("--n", q_orders, "highest monomial order")->check(CLI::Range(1, 16));
    qd->add_option("--q2", q2, "squared deformation parameter")->check(CLI::PositiveNumber);
    add_common(qd, o, false);
    qd->callback([&]() { task = [&]() { return run_qderiv(o, q_orders, q2); }; });

    CLI::App* susy = app.add_subcommand("susy", "graded partner Hamiltonians");
    susy->require_subcommand(1);
    CLI::App* ss = susy->add_subcommand("spectrum", "partner spectra and level pairing");
    ss->add_option("--potential", s_potential, "linear or const")
        ->check(CLI::IsMember({"linear", "const"}));
    ss->add_option("--n", s_points, "number of grid points")->check(CLI::Range(16, 4000));
    ss->add_option("--levels", s_levels, "levels per partner")->check(CLI::Range(1, 16));
    add_common(ss, o, true);
    ss->callback([&]() { task = [&]() { return run_susy_spectrum(o, s_potential, s_points, s_levels); }; });

    CLI::App* rep = app.add_subcommand("report", "recompute every tracked discrepancy");
    add_common(rep, o, true);
    rep->callback([&]() { task = [&]() { return run_report(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        if (dynamic_cast<const CLI::CallForHelp*>(&e) != nullptr ||
            dynamic_cast<const CLI::CallForAllHelp*>(&e) != nullptr)
            return code;
        return 2;
    }

    if (o.format.empty()) {
        const bool tabular_default_csv =
            (lc->parsed() && lattice->parsed()) || (ss->parsed() && susy->parsed());
        o.format = tabular_default_csv ? "csv" : "json";
    }

    if (!task) {
        std::cerr << "no command selected\n";
        return 2;
    }
    try {
        return task();
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
