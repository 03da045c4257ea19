// Python surface: string-based wrappers around the main operations.
// Callers pass variable names and polynomial strings; results come back as
// plain ints, strings and dicts, with reports mirroring the CLI JSON shape.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "legreuel/ideal_ops.hpp"
#include "legreuel/invariants.hpp"
#include "legreuel/parser.hpp"

namespace py = pybind11;
using namespace legreuel;

namespace {

RingPtr ring_of(const std::vector<std::string>& vars, bool local) {
    int n = (int)vars.size();
    return make_ring(vars, local ? MonomialOrder::local(n) : MonomialOrder::global(n));
}

Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& gens) {
    std::vector<Polynomial> v;
    for (const std::string& s : gens) v.push_back(parse_polynomial(s, R));
    return Ideal(R, std::move(v));
}

PolyMatrix matrix_of(const RingPtr& R, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows[0].empty())
        fail(ErrorKind::structural_error, "matrix needs at least one entry");
    PolyMatrix M(R, (int)rows.size(), (int)rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            fail(ErrorKind::structural_error, "matrix rows have unequal length");
        for (size_t j = 0; j < rows[i].size(); ++j)
            M.at((int)i, (int)j) = parse_polynomial(rows[i][j], R);
    }
    return M;
}

VarietyPresentation presentation(const Ideal& I, std::optional<int> dim) {
    return VarietyPresentation(I, dim ? *dim : krull_dim(I));
}

std::vector<std::string> strings_of(const Ideal& I) { return sorted_generator_strings(I); }

py::dict report_dict(const ComputationReport& rep) {
    py::list terms;
    for (const ReportTerm& t : rep.terms) {
        py::dict d;
        d["label"] = t.label;
        if (t.slice_dim > 0) d["slice_dim"] = t.slice_dim;
        if (t.form) d["form"] = *t.form;
        if (t.sat_exponent) d["sat_exponent"] = *t.sat_exponent;
        d["value"] = t.value;
        d["sign"] = t.sign;
        terms.append(d);
    }
    py::dict r;
    r["seed"] = rep.seed;
    r["resamples"] = rep.resamples;
    r["terms"] = terms;
    return r;
}

} // namespace

PYBIND11_MODULE(_legreuel, m) {
    m.doc() = "exact Le-Greuel type invariants of singularities";

    py::register_exception<Error>(m, "ComputationError");

    m.def(
        "std_basis",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           bool local) {
            RingPtr R = ring_of(vars, local);
            Ideal I = ideal_of(R, gens);
            std::vector<std::string> out;
            for (const Polynomial& p : I.std_basis().elements()) out.push_back(p.to_string());
            return out;
        },
        py::arg("vars"), py::arg("gens"), py::arg("local") = true,
        "Reduced standard basis (Groebner basis for a global order).");

    m.def(
        "vdim",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           bool local) -> std::optional<long> {
            RingPtr R = ring_of(vars, local);
            return vdim(ideal_of(R, gens));
        },
        py::arg("vars"), py::arg("gens"), py::arg("local") = true,
        "Vector space dimension of the quotient, None when infinite.");

    m.def(
        "dim",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           bool local) { return krull_dim(ideal_of(ring_of(vars, local), gens)); },
        py::arg("vars"), py::arg("gens"), py::arg("local") = true,
        "Krull dimension of the quotient, -1 for the unit ideal.");

    m.def(
        "multiplicity",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           bool local) { return hilbert_multiplicity(ideal_of(ring_of(vars, local), gens)); },
        py::arg("vars"), py::arg("gens"), py::arg("local") = true,
        "Hilbert-Samuel multiplicity of the quotient.");

    m.def(
        "saturate",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::string& f, bool local) {
            RingPtr R = ring_of(vars, local);
            auto [S, k] = ideal_saturate(ideal_of(R, gens), parse_polynomial(f, R));
            return py::make_tuple(strings_of(S), k);
        },
        py::arg("vars"), py::arg("gens"), py::arg("f"), py::arg("local") = true,
        "Saturation I : f^infinity; returns (generators, stabilizing exponent).");

    m.def(
        "colon",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::string& f, bool local) {
            RingPtr R = ring_of(vars, local);
            return strings_of(ideal_colon(ideal_of(R, gens), parse_polynomial(f, R)));
        },
        py::arg("vars"), py::arg("gens"), py::arg("f"), py::arg("local") = true,
        "Colon ideal I : f.");

    m.def(
        "intersect",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& a,
           const std::vector<std::string>& b, bool local) {
            RingPtr R = ring_of(vars, local);
            return strings_of(ideal_intersect(ideal_of(R, a), ideal_of(R, b)));
        },
        py::arg("vars"), py::arg("a"), py::arg("b"), py::arg("local") = true,
        "Intersection of two ideals.");

    m.def(
        "euler_diff",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& X,
           const std::string& f, const std::string& g, std::optional<int> dim) {
            RingPtr R = ring_of(vars, true);
            EulerDiffResult r = euler_diff(presentation(ideal_of(R, X), dim),
                                           parse_polynomial(f, R), parse_polynomial(g, R));
            py::dict d;
            d["value"] = r.value;
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("vars"), py::arg("X"), py::arg("f"), py::arg("g"),
        py::arg("dim") = std::nullopt,
        "Difference chi(F_f) - chi(F_{g,f}) on the germ X (empty X: whole space).");

    m.def(
        "chi",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& X,
           const std::string& f, std::optional<int> dim, uint64_t seed, int retries) {
            RingPtr R = ring_of(vars, true);
            ChiResult r = chi_fiber(presentation(ideal_of(R, X), dim), parse_polynomial(f, R),
                                    {seed, retries});
            py::dict d;
            d["value"] = r.value;
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("vars"), py::arg("X"), py::arg("f"), py::arg("dim") = std::nullopt,
        py::arg("seed") = 0, py::arg("retries") = 8,
        "Euler characteristic of the Milnor fibre of f on the germ X.");

    m.def(
        "icis",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& fs) {
            RingPtr R = ring_of(vars, true);
            std::vector<Polynomial> v;
            for (const std::string& s : fs) v.push_back(parse_polynomial(s, R));
            return icis_milnor_sum(v);
        },
        py::arg("vars"), py::arg("fs"),
        "Sum mu(X) + mu(X') for the complete intersection cut by fs.");

    m.def(
        "curve_mu",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& X,
           const std::string& pi, const std::string& f, std::optional<int> dim, uint64_t seed,
           int retries) {
            RingPtr R = ring_of(vars, true);
            CurveResult r = curve_invariants(presentation(ideal_of(R, X), dim),
                                             parse_polynomial(pi, R), parse_polynomial(f, R),
                                             {seed, retries});
            py::dict d;
            d["mu_f"] = r.mu_f;
            d["mu_X"] = r.mu_X;
            d["deg_f"] = r.deg_f;
            d["mult"] = r.mult;
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("vars"), py::arg("X"), py::arg("pi"), py::arg("f"),
        py::arg("dim") = std::nullopt, py::arg("seed") = 0, py::arg("retries") = 8,
        "Milnor numbers of a smoothable curve: X is the total space, pi the parameter.");

    m.def(
        "ids",
        [](const std::vector<std::string>& vars, const std::vector<std::vector<std::string>>& F,
           const std::vector<std::vector<std::string>>& A, int s, std::optional<std::string> f,
           uint64_t seed, int retries) {
            RingPtr R = ring_of(vars, true);
            std::optional<Polynomial> fb;
            if (f) fb = parse_polynomial(*f, R);
            IdsResult r = ids_invariants(matrix_of(R, F), matrix_of(R, A), s, fb,
                                         {seed, retries});
            py::dict d;
            d["nu_X"] = r.nu_X;
            d["dim"] = r.dim_X;
            d["mult"] = r.mult;
            if (r.mu_f) d["mu_f"] = *r.mu_f;
            if (r.nu_slice) d["nu_slice"] = *r.nu_slice;
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("vars"), py::arg("F"), py::arg("A"), py::arg("s"),
        py::arg("f") = std::nullopt, py::arg("seed") = 0, py::arg("retries") = 8,
        "Vanishing Euler characteristic of the determinantal germ rank(F) < s.");

    m.def(
        "gorenstein_mu",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& X,
           const std::string& pi, std::optional<int> dim, uint64_t seed, int retries) {
            RingPtr R = ring_of(vars, true);
            GorensteinResult r = gorenstein_mu(presentation(ideal_of(R, X), dim),
                                               parse_polynomial(pi, R), {seed, retries});
            py::dict d;
            d["mu"] = r.mu;
            d["mult"] = r.mult;
            d["report"] = report_dict(r.report);
            return d;
        },
        py::arg("vars"), py::arg("X"), py::arg("pi"), py::arg("dim") = std::nullopt,
        py::arg("seed") = 0, py::arg("retries") = 8,
        "Milnor number of a smoothable Gorenstein surface from its total space X.");

    m.def(
        "pfaffians",
        [](const std::vector<std::string>& vars, const std::vector<std::vector<std::string>>& M,
           bool local) {
            RingPtr R = ring_of(vars, local);
            std::vector<std::string> out;
            for (const Polynomial& p : pfaffians(matrix_of(R, M))) out.push_back(p.to_string());
            return out;
        },
        py::arg("vars"), py::arg("M"), py::arg("local") = true,
        "Principal Pfaffians of a skew-symmetric matrix.");
}
