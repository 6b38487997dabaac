// Python bindings: a thin functional surface over the C++ library. Matrices
// cross the boundary as nested lists of complex numbers; structured results
// come back as dicts so the smoke tests stay dependency-free.
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "braidqi/braid.hpp"
#include "braidqi/entangle.hpp"
#include "braidqi/gates.hpp"
#include "braidqi/kaon.hpp"
#include "braidqi/qlattice.hpp"
#include "braidqi/report.hpp"
#include "braidqi/susyqm.hpp"

namespace py = pybind11;
using namespace braidqi;

namespace {

BraidSign parse_sign(const std::string& sign) {
    if (sign == "plus" || sign == "+") return BraidSign::plus;
    if (sign == "minus" || sign == "-") return BraidSign::minus;
    throw std::invalid_argument("sign must be 'plus' or 'minus'");
}

BraidConvention parse_convention(const std::string& convention) {
    if (convention == "normalized") return BraidConvention::normalized;
    if (convention == "verbatim") return BraidConvention::verbatim;
    throw std::invalid_argument("convention must be 'normalized' or 'verbatim'");
}

std::vector<std::vector<cxd>> to_rows(const ComplexMatrix& m) {
    std::vector<std::vector<cxd>> rows(m.rows, std::vector<cxd>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
    return rows;
}

TwoQubitState state_from_amps(const std::vector<cxd>& amps) {
    if (amps.size() != 4) throw std::invalid_argument("expected 4 amplitudes");
    return make_two_qubit(amps[0], amps[1], amps[2], amps[3]);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Numerical checks for braid operators, gate factorizations, entangled "
              "meson states, lattice wave equations, and graded ladder spectra";

    m.def(
        "braid_matrix",
        [](const std::string& sign, double phi, const std::string& convention) {
            return to_rows(eight_vertex_braid(parse_sign(sign), phi,
                                              parse_convention(convention)).matrix);
        },
        py::arg("sign"), py::arg("phi"), py::arg("convention") = "normalized");

    m.def(
        "braid_relation_residual",
        [](const std::string& sign, double phi, const std::string& convention) {
            return braid_relation_residual(
                eight_vertex_braid(parse_sign(sign), phi, parse_convention(convention)).matrix);
        },
        py::arg("sign"), py::arg("phi"), py::arg("convention") = "normalized");

    m.def(
        "braid_unitarity_residual",
        [](const std::string& sign, double phi, const std::string& convention) {
            return is_unitary(eight_vertex_braid(parse_sign(sign), phi,
                                                 parse_convention(convention)).matrix).residual;
        },
        py::arg("sign"), py::arg("phi"), py::arg("convention") = "normalized");

    m.def(
        "qybe_residual",
        [](const std::string& sign, double phi, double x, double y) {
            const BraidOperator b = eight_vertex_braid(parse_sign(sign), phi);
            return qybe_residual([&b](double t) { return yang_baxterize(b, t); }, x, y);
        },
        py::arg("sign"), py::arg("phi"), py::arg("x"), py::arg("y"));

    m.def("cnot_distances", [] {
        const CnotDecomposition cd = cnot_decomposition();
        py::dict out;
        out["displayed"] = cd.displayed_vs_cnot.frobenius_distance;
        out["corrected"] = cd.corrected_vs_cnot.frobenius_distance;
        out["row_sign_fixed_only"] = cd.r_fixed_only_vs_cnot.frobenius_distance;
        return out;
    });

    m.def("sqrt_not_square_residual", &sqrt_not_square_residual);
    m.def("clifford_relations_exact", &clifford_relations_exact);

    m.def(
        "bell_state",
        [](const std::string& sign, double phi, int index) {
            const auto states = bell_states(parse_sign(sign), phi);
            if (index < 0 || index >= 4) throw std::out_of_range("index must be 0..3");
            const TwoQubitState& s = states[static_cast<size_t>(index)];
            return std::vector<cxd>(s.amp.begin(), s.amp.end());
        },
        py::arg("sign"), py::arg("phi"), py::arg("index"));

    m.def(
        "entanglement_entropy",
        [](const std::vector<cxd>& amps) { return entanglement_entropy(state_from_amps(amps)); },
        py::arg("amplitudes"), "Entropy of the one-qubit marginal, in bits");

    m.def(
        "is_decomposable",
        [](const std::vector<cxd>& amps) { return is_decomposable(state_from_amps(amps)).decomposable; },
        py::arg("amplitudes"));

    m.def(
        "horodecki_m",
        [](cxd epsilon, double lam) { return horodecki_M({epsilon, lam}); },
        py::arg("epsilon"), py::arg("lam"));

    m.def(
        "violation_threshold",
        [](cxd epsilon) {
            const ViolationThreshold vt = violation_threshold(epsilon);
            py::dict out;
            out["verbatim_lambda"] = vt.verbatim_lambda;
            out["derived_lambda"] = vt.derived_lambda;
            return out;
        },
        py::arg("epsilon"));

    m.def("lambda_from_eta", &lambda_from_eta, py::arg("eta"));

    m.def(
        "entropy_pair",
        [](double alpha, double v) { return entropy_pair({alpha, v}); },
        py::arg("alpha"), py::arg("v"));
    m.def(
        "entropy_pair_corrected",
        [](double alpha, double v) { return entropy_pair_corrected({alpha, v}); },
        py::arg("alpha"), py::arg("v"));
    m.def(
        "entropy_single",
        [](double alpha, double v) { return entropy_single({alpha, v}); },
        py::arg("alpha"), py::arg("v"));

    m.def(
        "entanglement_boundary",
        [](double v) {
            const EntanglementBoundary eb = entanglement_boundary(v);
            py::dict out;
            out["verbatim_found"] = eb.verbatim_found;
            out["alpha_star_verbatim"] =
                eb.verbatim_found ? py::cast(eb.alpha_star_verbatim) : py::object(py::none());
            out["corrected_found"] = eb.corrected_found;
            out["alpha_star_corrected"] =
                eb.corrected_found ? py::cast(eb.alpha_star_corrected) : py::object(py::none());
            out["criterion_alpha"] = eb.criterion_alpha;
            out["quoted_alpha"] = eb.quoted_alpha;
            return out;
        },
        py::arg("v"));

    m.def(
        "lattice_energies",
        [](const std::string& kind, double a, double b, int n_points, int k_lowest) {
            const LatticeProblem p = kind == "harmonic" ? harmonic_problem(a, b, n_points)
                                   : kind == "box"      ? box_problem(a, b, n_points)
                                   : throw std::invalid_argument("kind must be 'harmonic' or 'box'");
            return solve_lattice_schrodinger(p, k_lowest).energies;
        },
        py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("n_points"), py::arg("k_lowest"));

    m.def(
        "q_derivative",
        [](const std::function<double(double)>& f, double q_squared, double y) {
            return q_derivative(f, q_squared, y);
        },
        py::arg("f"), py::arg("q_squared"), py::arg("y"));
    m.def("q_bracket", &q_bracket, py::arg("n"), py::arg("k"));

    m.def(
        "susy_level_pairs",
        [](int n_points, double dx, int k_lowest) {
            const SusyPair pair = build_susy_pair(linear_superpotential(n_points, dx));
            const DegeneracyReport rep = spectrum_degeneracy_report(pair, k_lowest, 0.5, 1e-6);
            py::list rows;
            for (const DegeneracyRow& row : rep.pairs) {
                py::dict r;
                r["e0"] = row.e0;
                r["e1"] = row.e1;
                r["rel_gap"] = row.rel_gap;
                rows.append(r);
            }
            return rows;
        },
        py::arg("n_points") = 401, py::arg("dx") = 1.0 / 32.0, py::arg("k_lowest") = 6);

    m.def(
        "susy_intertwining",
        [](int n_points, double dx) {
            const IntertwiningResiduals res =
                check_intertwining(build_susy_pair(linear_superpotential(n_points, dx)));
            py::dict out;
            out["h0_aplus"] = res.h0_aplus;
            out["h1_aminus"] = res.h1_aminus;
            return out;
        },
        py::arg("n_points") = 1001, py::arg("dx") = 1.0 / 64.0);

    m.def("report_json", [] { return report_json(build_findings()); });
    m.def("report_csv", [] { return report_csv(build_findings()); });
    m.def("mandatory_sections", [] { return mandatory_sections(); });
}
