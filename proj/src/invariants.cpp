#include "legreuel/invariants.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace legreuel {

namespace {

uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int64_t draw_coeff(uint64_t& state) {
    state = splitmix(state);
    return (int64_t)(state % 195) - 97;
}

void check_function(const RingPtr& ring, const Polynomial& f, const char* what) {
    if (!f.ring())
        fail(ErrorKind::structural_error, std::string(what) + " has no ring");
    check_same_ring(ring, f.ring());
    if (f.is_zero())
        fail(ErrorKind::structural_error, std::string(what) + " must be nonzero");
    if (!f.vanishes_at_origin())
        fail(ErrorKind::structural_error, std::string(what) + " must vanish at the origin");
}

// Draws successive distinct generic forms. Every form ever handed out is
// remembered, so a resample can never return a repeat.
struct FormSampler {
    RingPtr ring;
    uint64_t seed;
    int attempt = 0;
    std::vector<bool> allowed;
    std::set<std::string> used;

    Polynomial next() {
        for (;;) {
            LinearForm lf = sample_generic_linear(ring, seed, attempt, &allowed);
            attempt = lf.attempt + 1;
            if (used.insert(lf.poly.to_string()).second) return lf.poly;
        }
    }
};

std::vector<bool> vars_off_support(const RingPtr& ring, const Polynomial& pi) {
    std::vector<bool> allowed(ring->nvars(), true);
    std::vector<bool> sup = pi.support_vars();
    for (int i = 0; i < ring->nvars(); ++i)
        if (sup[i]) allowed[i] = false;
    if (std::none_of(allowed.begin(), allowed.end(), [](bool b) { return b; }))
        fail(ErrorKind::structural_error, "no variables left to sample a slice form from");
    return allowed;
}

// I plus the (N - d + r)-minors of the Jacobian of (generators of I, fs),
// where d is the pure dimension attached to I by the caller
Ideal jacobian_minors(const Ideal& I, int d, const std::vector<Polynomial>& fs) {
    const RingPtr& R = I.ring();
    int N = R->nvars();
    int r = (int)fs.size();
    std::vector<Polynomial> rows = I.gens();
    rows.insert(rows.end(), fs.begin(), fs.end());
    int k = N - d + r;
    if (k < 1 || k > N || k > (int)rows.size())
        fail(ErrorKind::structural_error,
             "Jacobian minor size " + std::to_string(k) + " out of range for a " +
                 std::to_string(rows.size()) + " x " + std::to_string(N) + " matrix");
    PolyMatrix M = jacobian(R, rows);
    std::vector<Polynomial> gens = I.gens();
    for (Polynomial& m : minors(M, k)) gens.push_back(std::move(m));
    return Ideal(R, std::move(gens));
}

struct SliceTerm {
    bool ok = false;
    ErrorKind kind = ErrorKind::internal_error;
    std::string why;
    int sat_exponent = 0;
    long value = 0;
};

// dim O/((f) + (I + Jacobian minors of (f, second)) : f^inf) on a slice of
// dimension d, guarded by the polar dimension check
SliceTerm polar_slice_value(const Ideal& I, int d, const Polynomial& f,
                            const Polynomial& second) {
    SliceTerm out;
    Ideal J = jacobian_minors(I, d, {f, second});
    auto [sat, k] = ideal_saturate(J, f);
    out.sat_exponent = k;
    int pdim = krull_dim(sat);
    if (pdim > 1) {
        out.kind = ErrorKind::polar_dim_too_high;
        out.why = "relative polar ideal at slice dimension " + std::to_string(d) +
                  " has dimension " + std::to_string(pdim);
        return out;
    }
    std::optional<long> v = vdim(sat + Ideal(I.ring(), {f}));
    if (!v) {
        out.kind = ErrorKind::infinite_dimension;
        out.why = "saturated Jacobian term at slice dimension " + std::to_string(d) +
                  " is not finite dimensional";
        return out;
    }
    out.ok = true;
    out.value = *v;
    return out;
}

} // namespace

LinearForm sample_generic_linear(const RingPtr& ring, uint64_t seed, int attempt,
                                 const std::vector<bool>* allowed_vars) {
    int n = ring->nvars();
    if (allowed_vars && (int)allowed_vars->size() != n)
        fail(ErrorKind::internal_error, "variable mask arity mismatch");
    for (;; ++attempt) {
        uint64_t state = splitmix(seed ^ (0x9e3779b97f4a7c15ULL * (uint64_t)(attempt + 1)));
        Polynomial p(ring);
        for (int i = 0; i < n; ++i) {
            int64_t c = draw_coeff(state);
            if (allowed_vars && !(*allowed_vars)[i]) continue;
            if (c == 0) continue;
            p += Polynomial::variable(ring, i).scaled(Rational(c));
        }
        if (!p.is_zero()) return {p, seed, attempt};
    }
}

VarietyPresentation::VarietyPresentation(Ideal ideal, int pure_dim)
    : ideal_(std::move(ideal)), pure_dim_(pure_dim) {
    const RingPtr& R = ideal_.ring();
    if (!R->order().is_local())
        fail(ErrorKind::structural_error,
             "germ computations need a local order, got " + R->describe());
    if (pure_dim_ < 0 || pure_dim_ > R->nvars())
        fail(ErrorKind::structural_error, "pure dimension out of range");
    for (const Polynomial& g : ideal_.gens())
        if (!g.vanishes_at_origin())
            fail(ErrorKind::structural_error,
                 "generator does not vanish at the origin: " + g.to_string());
    int dim = krull_dim(ideal_);
    if (dim != pure_dim_)
        fail(ErrorKind::structural_error,
             "leading ideal has dimension " + std::to_string(dim) + ", expected " +
                 std::to_string(pure_dim_));
}

Ideal jacobian_ideal(const VarietyPresentation& X, const std::vector<Polynomial>& fs) {
    if (fs.empty())
        fail(ErrorKind::structural_error, "jacobian_ideal needs at least one map component");
    for (const Polynomial& f : fs) check_function(X.ring(), f, "map component");
    return jacobian_minors(X.ideal(), X.pure_dim(), fs);
}

bool isolated_check(const VarietyPresentation& X) {
    const Ideal& I = X.ideal();
    int c = X.ring()->nvars() - X.pure_dim();
    if (c == 0) return true;
    if ((int)I.gens().size() < c) return false;
    PolyMatrix M = jacobian(X.ring(), I.gens());
    std::vector<Polynomial> gens = I.gens();
    for (Polynomial& m : minors(M, c)) gens.push_back(std::move(m));
    return krull_dim(Ideal(X.ring(), std::move(gens))) <= 0;
}

EulerDiffResult euler_diff(const VarietyPresentation& X, const Polynomial& f,
                           const Polynomial& g) {
    check_function(X.ring(), f, "f");
    check_function(X.ring(), g, "g");
    int d = X.pure_dim();
    if (d < 2)
        fail(ErrorKind::structural_error, "euler_diff needs a germ of dimension at least 2");
    SliceTerm t = polar_slice_value(X.ideal(), d, f, g);
    if (!t.ok) fail(t.kind, t.why);
    int sign = (d % 2 == 1) ? +1 : -1; // (-1)^(d-1)
    EulerDiffResult res;
    res.value = sign * t.value;
    res.report.value = res.value;
    res.report.terms.push_back({"slice", d, g.to_string(), t.sat_exponent, t.value, sign});
    return res;
}

ChiResult chi_fiber(const VarietyPresentation& X, const Polynomial& f,
                    const SampleOptions& opt, const ChiOverrides* ovr) {
    const RingPtr& R = X.ring();
    check_function(R, f, "f");
    int d0 = X.pure_dim();
    if (d0 < 1)
        fail(ErrorKind::structural_error, "chi_fiber needs a germ of positive dimension");

    if (ovr) {
        if ((int)ovr->forms.size() != d0 - 1)
            fail(ErrorKind::structural_error,
                 "override must pin exactly " + std::to_string(d0 - 1) + " slice forms");
        for (const Polynomial& l : ovr->forms) {
            check_function(R, l, "slice form");
            if (l.total_degree() != 1)
                fail(ErrorKind::structural_error, "slice form is not linear: " + l.to_string());
        }
        if (ovr->reduced_slice) check_same_ring(R, ovr->reduced_slice->ring());
    }

    FormSampler sampler{R, opt.seed, 0, std::vector<bool>(R->nvars(), true), {}};
    std::string last_fail;
    for (int round = 0;; ++round) {
        if (!ovr && round > opt.max_retries)
            fail(ErrorKind::retries_exhausted,
                 "no generic slice sequence found after " + std::to_string(round) +
                     " attempts; last failure: " + last_fail);
        ChiResult res;
        res.report.seed = opt.seed;
        res.report.resamples = round;
        Ideal cur = X.ideal();
        long total = 0;
        bool restart = false;
        for (int i = d0; i >= 2; --i) {
            Polynomial ell = ovr ? ovr->forms[(size_t)(d0 - i)] : sampler.next();
            SliceTerm t = polar_slice_value(cur, i, f, ell);
            if (!t.ok) {
                if (ovr) fail(t.kind, t.why);
                last_fail = t.why;
                restart = true;
                break;
            }
            Ideal next = cur + Ideal(R, {ell});
            int ndim = krull_dim(next);
            if (ndim != i - 1) {
                std::string why = "slice by " + ell.to_string() + " has dimension " +
                                  std::to_string(ndim) + ", expected " + std::to_string(i - 1);
                if (ovr) fail(ErrorKind::structural_error, why);
                last_fail = why;
                restart = true;
                break;
            }
            int sign = (i % 2 == 0) ? -1 : +1; // (-1)^(i-1)
            res.report.terms.push_back({"slice", i, ell.to_string(), t.sat_exponent, t.value, sign});
            total += (long)sign * t.value;
            cur = next;
        }
        if (restart) continue;
        const Ideal& base = (ovr && ovr->reduced_slice) ? *ovr->reduced_slice : cur;
        std::optional<long> b = vdim(base + Ideal(R, {f}));
        if (!b) {
            std::string why = "degree term on the final curve slice is not finite dimensional";
            if (ovr) fail(ErrorKind::infinite_dimension, why);
            last_fail = why;
            continue;
        }
        res.report.terms.push_back({"base", 1, std::nullopt, std::nullopt, *b, +1});
        total += *b;
        res.value = total;
        res.report.value = total;
        return res;
    }
}

long icis_milnor_sum(const std::vector<Polynomial>& fs) {
    if (fs.empty())
        fail(ErrorKind::structural_error, "need at least one map component");
    const RingPtr& R = fs[0].ring();
    if (!R)
        fail(ErrorKind::structural_error, "map component has no ring");
    if (!R->order().is_local())
        fail(ErrorKind::structural_error,
             "Milnor numbers need a local order, got " + R->describe());
    int k = (int)fs.size();
    if (k > R->nvars())
        fail(ErrorKind::structural_error, "more map components than variables");
    for (const Polynomial& f : fs) check_function(R, f, "map component");
    PolyMatrix M = jacobian(R, fs);
    std::vector<Polynomial> gens(fs.begin(), fs.end() - 1);
    for (Polynomial& m : minors(M, k)) gens.push_back(std::move(m));
    std::optional<long> v = vdim(Ideal(R, std::move(gens)));
    if (!v)
        fail(ErrorKind::infinite_dimension,
             "the map does not define an isolated complete intersection singularity");
    return *v;
}

CurveResult curve_invariants(const VarietyPresentation& smoothing, const Polynomial& pi,
                             const Polynomial& fbar, const SampleOptions& opt) {
    const RingPtr& R = smoothing.ring();
    check_function(R, pi, "smoothing parameter");
    check_function(R, fbar, "f");
    if (smoothing.pure_dim() != 2)
        fail(ErrorKind::structural_error,
             "the total space of a curve smoothing must have dimension 2");
    const Ideal& I = smoothing.ideal();

    SliceTerm mf = polar_slice_value(I, 2, pi, fbar);
    if (!mf.ok) fail(mf.kind, mf.why);

    std::optional<long> degf = vdim(I + Ideal(R, {pi, fbar}));
    if (!degf)
        fail(ErrorKind::infinite_dimension, "f is not finite on the central curve");

    long m0 = hilbert_multiplicity(I + Ideal(R, {pi}));

    FormSampler sampler{R, opt.seed, 0, vars_off_support(R, pi), {}};
    std::string last_fail;
    bool last_was_identity = false;
    for (int round = 0;; ++round) {
        if (round > opt.max_retries) {
            if (last_was_identity)
                fail(ErrorKind::consistency_violation, last_fail);
            fail(ErrorKind::retries_exhausted,
                 "no generic line found after " + std::to_string(round) +
                     " attempts; last failure: " + last_fail);
        }
        Polynomial ell = sampler.next();
        last_was_identity = false;

        // a generic line must realize the multiplicity as its local degree
        std::optional<long> degl = vdim(I + Ideal(R, {pi, ell}));
        if (!degl) {
            last_fail = "degree of " + ell.to_string() + " on the central curve is not finite";
            continue;
        }
        if (*degl != m0) {
            last_fail = "line " + ell.to_string() + " has degree " + std::to_string(*degl) +
                        ", multiplicity is " + std::to_string(m0);
            continue;
        }
        SliceTerm pt = polar_slice_value(I, 2, pi, ell);
        if (!pt.ok) {
            last_fail = pt.why;
            continue;
        }
        long mu_X = pt.value - m0 + 1;
        if (mf.value != mu_X + *degf - 1) {
            last_was_identity = true;
            last_fail = "mu(f) = " + std::to_string(mf.value) + " but mu(X) + deg(f) - 1 = " +
                        std::to_string(mu_X + *degf - 1) + " with line " + ell.to_string();
            continue;
        }

        CurveResult res;
        res.mu_f = mf.value;
        res.mu_X = mu_X;
        res.deg_f = *degf;
        res.mult = m0;
        res.report.value = mu_X;
        res.report.seed = opt.seed;
        res.report.resamples = round;
        res.report.terms = {
            {"polar", 2, ell.to_string(), pt.sat_exponent, pt.value, +1},
            {"multiplicity", 0, std::nullopt, std::nullopt, m0, -1},
            {"constant", 0, std::nullopt, std::nullopt, 1, +1},
        };
        return res;
    }
}

IdsResult ids_invariants(const PolyMatrix& F, const PolyMatrix& A, int s,
                         const std::optional<Polynomial>& fbar, const SampleOptions& opt) {
    const RingPtr& R = F.ring();
    check_same_ring(R, A.ring());
    if (!R->order().is_local())
        fail(ErrorKind::structural_error,
             "determinantal germs need a local order, got " + R->describe());
    int m = F.rows(), n = F.cols();
    if (A.rows() != m || A.cols() != n)
        fail(ErrorKind::structural_error, "perturbation matrix shape differs from F");
    if (s < 1 || s > std::min(m, n))
        fail(ErrorKind::structural_error, "minor size s out of range");
    bool a_nonzero = false;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (!A.at(i, j).is_constant())
                fail(ErrorKind::structural_error, "perturbation entries must be constants");
            if (!A.at(i, j).is_zero()) a_nonzero = true;
        }
    if (!a_nonzero)
        fail(ErrorKind::codim_mismatch, "perturbation matrix is zero, the family is constant");

    int N = R->nvars();
    int c = (m - s + 1) * (n - s + 1);
    Ideal IX(R, minors(F, s));
    int d = krull_dim(IX);
    if (N - d != c)
        fail(ErrorKind::codim_mismatch, "X has codimension " + std::to_string(N - d) +
                                            ", the rank condition needs " + std::to_string(c));
    if (d < 1)
        fail(ErrorKind::structural_error, "X must have positive dimension");

    // family ring with the smoothing parameter appended; the name cannot
    // collide with user variables, the parser rejects @ in identifiers
    std::vector<std::string> names = R->var_names();
    names.push_back("@t");
    RingPtr Rt = make_ring(names, MonomialOrder::local(N + 1));
    std::vector<int> up(N);
    for (int i = 0; i < N; ++i) up[i] = i;
    Polynomial tv = Polynomial::variable(Rt, N);

    PolyMatrix Ft(Rt, m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            Ft.at(i, j) = transport(F.at(i, j), Rt, up) + tv * transport(A.at(i, j), Rt, up);

    Ideal Itot(Rt, minors(Ft, s));
    int dtot = krull_dim(Itot);
    if (dtot != d + 1)
        fail(ErrorKind::codim_mismatch, "family has dimension " + std::to_string(dtot) +
                                            ", expected " + std::to_string(d + 1));

    // Fibres at t != 0 must be smooth. For s >= 2 the construction needs the
    // rank of F + tA to stay s - 1 on them, so the rank degeneracy locus must
    // saturate away; for s = 1 the same certificate uses the Jacobian of the
    // entries.
    {
        std::vector<Polynomial> w = Itot.gens();
        if (s >= 2) {
            for (Polynomial& q : minors(Ft, s - 1)) w.push_back(std::move(q));
        } else {
            PolyMatrix Jac = jacobian(Rt, Itot.gens());
            if (c <= std::min((int)Itot.gens().size(), N + 1))
                for (Polynomial& q : minors(Jac, c)) w.push_back(std::move(q));
        }
        auto [wsat, wk] = ideal_saturate(Ideal(Rt, std::move(w)), tv);
        (void)wk;
        if (!wsat.std_basis().is_unit())
            fail(ErrorKind::codim_mismatch,
                 "rank degeneracy locus survives off the central fibre; "
                 "the family is not a determinantal smoothing");
    }

    long m0 = hilbert_multiplicity(IX);

    FormSampler sampler{Rt, opt.seed, 0, [&] {
                            std::vector<bool> al(N + 1, true);
                            al[N] = false;
                            return al;
                        }(),
                        {}};
    long dsign = (d % 2 == 0) ? 1 : -1;
    std::string last_fail;
    for (int round = 0;; ++round) {
        if (round > opt.max_retries)
            fail(ErrorKind::retries_exhausted,
                 "no generic slice sequence found after " + std::to_string(round) +
                     " attempts; last failure: " + last_fail);
        std::vector<ReportTerm> terms;
        long inner = 0; // sum over slices of (-1)^(i+1) D_i
        Ideal cur = Itot;
        bool restart = false;
        for (int i = d + 1; i >= 2; --i) {
            Polynomial ell = sampler.next();
            SliceTerm t = polar_slice_value(cur, i, tv, ell);
            if (!t.ok) {
                last_fail = t.why;
                restart = true;
                break;
            }
            Ideal next = cur + Ideal(Rt, {ell});
            int ndim = krull_dim(next);
            if (ndim != i - 1) {
                last_fail = "slice by " + ell.to_string() + " has dimension " +
                            std::to_string(ndim) + ", expected " + std::to_string(i - 1);
                restart = true;
                break;
            }
            int isign = (i % 2 == 1) ? +1 : -1; // (-1)^(i+1)
            terms.push_back(
                {"slice", i, ell.to_string(), t.sat_exponent, t.value, (int)(dsign * isign)});
            inner += (long)isign * t.value;
            cur = next;
        }
        if (restart) continue;

        IdsResult res;
        res.dim_X = d;
        res.mult = m0;
        res.nu_X = dsign * (inner + m0 - 1);
        terms.push_back({"multiplicity", 0, std::nullopt, std::nullopt, m0, (int)dsign});
        terms.push_back({"constant", 0, std::nullopt, std::nullopt, 1, (int)-dsign});
        res.report.value = res.nu_X;
        res.report.seed = opt.seed;
        res.report.resamples = round;
        res.report.terms = std::move(terms);

        if (fbar) {
            check_function(R, *fbar, "f");
            Polynomial fb = transport(*fbar, Rt, up);
            SliceTerm mu = polar_slice_value(Itot, d + 1, tv, fb);
            if (!mu.ok) fail(mu.kind, mu.why);
            res.mu_f = mu.value;
            res.nu_slice = mu.value - res.nu_X;
        }
        return res;
    }
}

GorensteinResult gorenstein_mu(const VarietyPresentation& smoothing, const Polynomial& pi,
                               const SampleOptions& opt) {
    const RingPtr& R = smoothing.ring();
    check_function(R, pi, "smoothing parameter");
    if (smoothing.pure_dim() != 3)
        fail(ErrorKind::structural_error,
             "the total space of a surface smoothing must have dimension 3");
    const Ideal& I = smoothing.ideal();

    long m0 = hilbert_multiplicity(I + Ideal(R, {pi}));

    FormSampler sampler{R, opt.seed, 0, vars_off_support(R, pi), {}};
    std::string last_fail;
    for (int round = 0;; ++round) {
        if (round > opt.max_retries)
            fail(ErrorKind::retries_exhausted,
                 "no generic slice pair found after " + std::to_string(round) +
                     " attempts; last failure: " + last_fail);
        Polynomial ell2 = sampler.next();
        SliceTerm t3 = polar_slice_value(I, 3, pi, ell2);
        if (!t3.ok) {
            last_fail = t3.why;
            continue;
        }
        Ideal X2 = I + Ideal(R, {ell2});
        int d2 = krull_dim(X2);
        if (d2 != 2) {
            last_fail = "slice by " + ell2.to_string() + " has dimension " +
                        std::to_string(d2) + ", expected 2";
            continue;
        }
        Polynomial ell1 = sampler.next();
        SliceTerm t2 = polar_slice_value(X2, 2, pi, ell1);
        if (!t2.ok) {
            last_fail = t2.why;
            continue;
        }
        int d1 = krull_dim(X2 + Ideal(R, {ell1}));
        if (d1 != 1) {
            last_fail = "slice by " + ell1.to_string() + " has dimension " +
                        std::to_string(d1) + ", expected 1";
            continue;
        }

        GorensteinResult res;
        res.mu = t3.value - t2.value + m0 - 1;
        res.mult = m0;
        res.report.value = res.mu;
        res.report.seed = opt.seed;
        res.report.resamples = round;
        res.report.terms = {
            {"slice", 3, ell2.to_string(), t3.sat_exponent, t3.value, +1},
            {"slice", 2, ell1.to_string(), t2.sat_exponent, t2.value, -1},
            {"multiplicity", 0, std::nullopt, std::nullopt, m0, +1},
            {"constant", 0, std::nullopt, std::nullopt, 1, -1},
        };
        return res;
    }
}

} // namespace legreuel
