#include "legreuel/ideal_ops.hpp"

#include <algorithm>
#include <map>

namespace legreuel {

Ideal ideal_sum(const Ideal& a, const Ideal& b) { return a + b; }

// ---------------------------------------------------------------- elimination

namespace {

// aux ring: the listed variables moved to the front under a global block,
// remaining variables keep the base ring's order kind
struct ElimSetup {
    RingPtr aux;
    int nelim = 0;
    std::vector<int> fwd;  // base index -> aux index
    std::vector<int> back; // aux index -> base index
};

ElimSetup build_elim_ring(const RingPtr& base, const std::vector<int>& vars) {
    int n = base->nvars();
    std::vector<bool> elim(n, false);
    for (int v : vars) {
        if (v < 0 || v >= n)
            fail(ErrorKind::structural_error, "eliminate: variable index out of range");
        elim[v] = true;
    }
    OrderKind rest_kind;
    if (base->order().is_local()) rest_kind = OrderKind::neg_deg_rev_lex;
    else if (base->order().is_global()) rest_kind = OrderKind::deg_rev_lex;
    else fail(ErrorKind::structural_error, "eliminate: base order must be local or global");
    std::vector<std::string> names;
    ElimSetup s;
    s.fwd.assign(n, -1);
    for (int i = 0; i < n; ++i)
        if (elim[i]) { s.fwd[i] = (int)names.size(); names.push_back(base->var_name(i)); }
    int nelim = (int)names.size();
    for (int i = 0; i < n; ++i)
        if (!elim[i]) { s.fwd[i] = (int)names.size(); names.push_back(base->var_name(i)); }
    if (nelim == 0 || nelim == n)
        fail(ErrorKind::structural_error, "eliminate: variable set must be a proper nonempty subset");
    std::vector<MonomialOrder::Block> blocks{{OrderKind::deg_rev_lex, 0, nelim},
                                             {rest_kind, nelim, n}};
    s.aux = make_ring(std::move(names), MonomialOrder(std::move(blocks)));
    s.nelim = nelim;
    s.back.assign(n, -1);
    for (int i = 0; i < n; ++i) s.back[s.fwd[i]] = i;
    return s;
}

} // namespace

Ideal eliminate_vars(const Ideal& I, const std::vector<int>& vars) {
    const RingPtr& base = I.ring();
    ElimSetup s = build_elim_ring(base, vars);
    int nelim = s.nelim;
    std::vector<Polynomial> aux_gens;
    aux_gens.reserve(I.gens().size());
    for (const Polynomial& g : I.gens())
        aux_gens.push_back(transport(g, s.aux, s.fwd));
    std::vector<Polynomial> G = std_basis_raw(Ideal(s.aux, std::move(aux_gens)));
    std::vector<Polynomial> out;
    std::vector<int> back_map(s.aux->nvars(), -1);
    for (int i = nelim; i < s.aux->nvars(); ++i) back_map[i] = s.back[i];
    for (const Polynomial& g : G) {
        const Monomial& lm = g.leading_monomial();
        bool lead_free = true;
        for (int i = 0; i < nelim; ++i)
            if (lm[i] > 0) { lead_free = false; break; }
        if (!lead_free) continue;
        // under the elimination block a monomial containing an eliminated
        // variable beats every free one, so the whole element is free
        std::vector<bool> sup = g.support_vars();
        for (int i = 0; i < nelim; ++i)
            if (sup[i])
                fail(ErrorKind::internal_error, "eliminate: stray variable below the lead");
        out.push_back(transport(g, base, back_map));
    }
    return Ideal(base, std::move(out));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring());
    const RingPtr& base = a.ring();
    int n = base->nvars();
    OrderKind rest_kind;
    if (base->order().is_local()) rest_kind = OrderKind::neg_deg_rev_lex;
    else if (base->order().is_global()) rest_kind = OrderKind::deg_rev_lex;
    else fail(ErrorKind::structural_error, "intersect: base order must be local or global");
    // fresh auxiliary name: the base ring may itself carry an @-variable from
    // an enclosing construction
    std::string tname = "@t";
    while (base->var_index(tname) >= 0) tname += "t";
    std::vector<std::string> names{tname};
    for (int i = 0; i < n; ++i) names.push_back(base->var_name(i));
    std::vector<MonomialOrder::Block> blocks{{OrderKind::deg_rev_lex, 0, 1},
                                             {rest_kind, 1, n + 1}};
    RingPtr aux = make_ring(std::move(names), MonomialOrder(std::move(blocks)));
    std::vector<int> fwd(n);
    for (int i = 0; i < n; ++i) fwd[i] = i + 1;

    Polynomial t = Polynomial::variable(aux, 0);
    Polynomial one_minus_t = Polynomial::constant(aux, Rational(1)) - t;
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size() + b.gens().size());
    for (const Polynomial& g : a.gens()) gens.push_back(t * transport(g, aux, fwd));
    for (const Polynomial& g : b.gens()) gens.push_back(one_minus_t * transport(g, aux, fwd));

    std::vector<Polynomial> G = std_basis_raw(Ideal(aux, std::move(gens)));
    std::vector<int> back(n + 1, -1);
    for (int i = 0; i < n; ++i) back[i + 1] = i;
    std::vector<Polynomial> out;
    for (const Polynomial& g : G) {
        if (g.leading_monomial()[0] > 0) continue;
        if (g.support_vars()[0])
            fail(ErrorKind::internal_error, "intersect: stray auxiliary variable below the lead");
        out.push_back(transport(g, base, back));
    }
    return Ideal(base, std::move(out));
}

Polynomial poly_divexact(const Polynomial& p, const Polynomial& f) {
    if (f.is_zero())
        fail(ErrorKind::zero_divisor, "division by the zero polynomial");
    if (p.is_zero()) return p;
    check_same_ring(p.ring(), f.ring());
    // divide against a fixed global order so the loop terminates; exactness
    // keeps every intermediate lead divisible
    int n = p.ring()->nvars();
    MonomialOrder dp = MonomialOrder::global(n);
    auto lead = [&](const Polynomial& q) {
        size_t best = 0;
        for (size_t i = 1; i < q.terms().size(); ++i)
            if (dp.greater(q.terms()[i].mono, q.terms()[best].mono)) best = i;
        return q.terms()[best];
    };
    Term lf = lead(f);
    Polynomial rem = p;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        Term lr = lead(rem);
        if (!lf.mono.divides(lr.mono))
            fail(ErrorKind::internal_error, "divexact: division is not exact");
        Rational c = lr.coeff / lf.coeff;
        Monomial q = lf.mono.quotient_into(lr.mono);
        rem = sub_scaled(rem, c, q, f);
        quot.push_back({std::move(c), std::move(q)});
    }
    return Polynomial(p.ring(), std::move(quot));
}

Ideal ideal_colon(const Ideal& I, const Polynomial& f) {
    if (f.is_zero())
        fail(ErrorKind::zero_divisor, "colon by the zero polynomial");
    check_same_ring(I.ring(), f.ring());
    Ideal inter = ideal_intersect(I, Ideal(I.ring(), {f}));
    std::vector<Polynomial> out;
    out.reserve(inter.gens().size());
    for (const Polynomial& g : inter.gens())
        out.push_back(poly_divexact(g, f));
    return Ideal(I.ring(), std::move(out));
}

std::pair<Ideal, int> ideal_saturate(const Ideal& I, const Polynomial& f) {
    if (f.is_zero())
        fail(ErrorKind::zero_divisor, "saturation by the zero polynomial");
    Ideal cur = I;
    int changes = 0;
    for (;;) {
        Ideal next = ideal_colon(cur, f);
        if (ideal_equal(next, cur)) break;
        cur = std::move(next);
        ++changes;
        if (changes > 512)
            fail(ErrorKind::internal_error, "saturation failed to stabilize");
    }
    return {std::move(cur), changes > 0 ? changes : 1};
}

// ---------------------------------------------------------------- dimensions

int krull_dim(const StdBasis& B) {
    int n = B.ring()->nvars();
    if (B.is_unit()) return -1;
    if (n > 24)
        fail(ErrorKind::structural_error, "dimension search limited to 24 variables");
    std::vector<uint32_t> supports;
    for (const Polynomial& g : B.elements()) {
        uint32_t m = 0;
        const Monomial& lm = g.leading_monomial();
        for (int i = 0; i < n; ++i)
            if (lm[i] > 0) m |= 1u << i;
        supports.push_back(m);
    }
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc <= best) continue;
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~mask) == 0) { independent = false; break; }
        if (independent) best = pc;
    }
    return best;
}

int krull_dim(const Ideal& I) { return krull_dim(I.std_basis()); }

std::optional<long> vdim(const StdBasis& B) {
    int n = B.ring()->nvars();
    if (B.is_unit()) return 0;
    int d = krull_dim(B);
    if (d != 0) return std::nullopt;
    std::vector<Monomial> lms = B.leading_monomials();
    // zero-dimensional leading ideals contain a pure power of every variable
    std::vector<int32_t> bound(n, -1);
    for (const Monomial& m : lms) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (m[i] > 0) {
                if (var >= 0) { pure = false; break; }
                var = i;
            }
        }
        if (pure && var >= 0 && (bound[var] < 0 || m[var] < bound[var]))
            bound[var] = m[var];
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0)
            fail(ErrorKind::internal_error, "zero-dimensional staircase lacks a pure power");
    long count = 0;
    std::vector<int32_t> e(n, 0);
    // enumerate the box under the pure-power bounds, skipping multiples
    int at = 0;
    for (;;) {
        if (at == n) {
            Monomial m{std::vector<int32_t>(e)};
            bool divisible = false;
            for (const Monomial& l : lms)
                if (l.divides(m)) { divisible = true; break; }
            if (!divisible) ++count;
            --at;
            if (at < 0) break;
            ++e[at];
        } else if (e[at] >= bound[at]) {
            e[at] = 0;
            --at;
            if (at < 0) break;
            ++e[at];
        } else {
            ++at;
        }
    }
    return count;
}

std::optional<long> vdim(const Ideal& I) { return vdim(I.std_basis()); }

// ------------------------------------------------------------ hilbert series

namespace {

using Expo = std::vector<int32_t>;

std::vector<Expo> minimalize_monomials(std::vector<Expo> gens) {
    auto divides = [](const Expo& a, const Expo& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::vector<Expo> out;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const Expo& g : gens) {
        bool dom = false;
        for (const Expo& k : out)
            if (divides(k, g)) { dom = true; break; }
        if (!dom) {
            out.erase(std::remove_if(out.begin(), out.end(),
                                     [&](const Expo& k) { return divides(g, k); }),
                      out.end());
            out.push_back(g);
        }
    }
    return out;
}

void poly1_mul(std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    a = std::move(r);
}

void poly1_add_shifted(std::vector<long>& a, const std::vector<long>& b, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
}

// first Hilbert numerator of a monomial ideal by pivot splitting:
// HN(I) = HN(I + (x)) + t * HN(I : x)
std::vector<long> hilbert_numerator(std::vector<Expo> gens, int n) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    for (const Expo& g : gens) {
        int32_t deg = 0;
        for (int32_t e : g) deg += e;
        if (deg == 0) return {0}; // unit ideal
    }
    // count variables that appear in some generator of mixed support
    std::vector<int> freq(n, 0);
    bool all_pure = true;
    for (const Expo& g : gens) {
        int sup = 0;
        for (int i = 0; i < n; ++i)
            if (g[i] > 0) ++sup;
        if (sup > 1) {
            all_pure = false;
            for (int i = 0; i < n; ++i)
                if (g[i] > 0) ++freq[i];
        }
    }
    if (all_pure) {
        // product of (1 - t^deg) over the pure powers
        std::vector<long> acc{1};
        for (const Expo& g : gens) {
            int32_t deg = 0;
            for (int32_t e : g) deg += e;
            std::vector<long> f(deg + 1, 0);
            f[0] = 1;
            f[deg] = -1;
            poly1_mul(acc, f);
        }
        return acc;
    }
    int pivot = 0;
    for (int i = 1; i < n; ++i)
        if (freq[i] > freq[pivot]) pivot = i;
    // branch 1: I + (x_pivot)
    std::vector<Expo> plus;
    Expo pv(n, 0);
    pv[pivot] = 1;
    plus.push_back(pv);
    for (const Expo& g : gens)
        if (g[pivot] == 0) plus.push_back(g);
    // branch 2: I : x_pivot
    std::vector<Expo> colon;
    for (const Expo& g : gens) {
        Expo h = g;
        if (h[pivot] > 0) --h[pivot];
        colon.push_back(std::move(h));
    }
    std::vector<long> a = hilbert_numerator(std::move(plus), n);
    std::vector<long> b = hilbert_numerator(std::move(colon), n);
    poly1_add_shifted(a, b, 1);
    return a;
}

} // namespace

HilbertSeries hilbert_series(const StdBasis& B) {
    int n = B.ring()->nvars();
    if (B.is_unit())
        fail(ErrorKind::unit_ideal, "hilbert data of the unit ideal");
    std::vector<Expo> gens;
    for (const Monomial& m : B.leading_monomials())
        gens.push_back(m.exponents());
    HilbertSeries hs;
    hs.numerator = hilbert_numerator(std::move(gens), n);
    hs.dim = krull_dim(B);
    // cancel (1-t)^(n-dim); the quotient at t=1 is the multiplicity
    std::vector<long> q = hs.numerator;
    for (int round = 0; round < n - hs.dim; ++round) {
        long total = 0;
        for (long c : q) total += c;
        if (total != 0)
            fail(ErrorKind::internal_error, "hilbert numerator not divisible by 1-t");
        // synthetic division by (1 - t): q'_i = q_i + q'_(i-1)
        std::vector<long> next(q.size() > 1 ? q.size() - 1 : 0, 0);
        long carry = 0;
        for (size_t i = 0; i < next.size(); ++i) {
            carry += q[i];
            next[i] = carry;
        }
        q = std::move(next);
    }
    long deg = 0;
    for (long c : q) deg += c;
    hs.degree = deg;
    return hs;
}

long hilbert_multiplicity(const Ideal& I) { return hilbert_series(I.std_basis()).degree; }

// ------------------------------------------------------------ squarefree part

namespace {

int deg_in(const Polynomial& p, int v) {
    int32_t d = -1;
    for (const Term& t : p.terms())
        if (t.mono[v] > d) d = t.mono[v];
    return d;
}

// coefficients of p as a univariate polynomial in x_v, index = degree
std::vector<Polynomial> univar_coeffs(const Polynomial& p, int v) {
    int d = deg_in(p, v);
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const Term& t : p.terms()) {
        Monomial m = t.mono;
        int32_t e = m[v];
        m.set(v, 0);
        buckets[e].push_back({t.coeff, std::move(m)});
    }
    std::vector<Polynomial> out;
    out.reserve(d + 1);
    for (auto& b : buckets) out.push_back(Polynomial(p.ring(), std::move(b)));
    return out;
}

// pseudo-remainder of f by g in the variable v
Polynomial prem(Polynomial f, const Polynomial& g, int v, const RingPtr& ring) {
    int dg = deg_in(g, v);
    std::vector<Polynomial> gc = univar_coeffs(g, v);
    const Polynomial& lg = gc[dg];
    int guard = 0;
    while (!f.is_zero()) {
        int df = deg_in(f, v);
        if (df < dg) break;
        std::vector<Polynomial> fc = univar_coeffs(f, v);
        Polynomial lf = fc[df];
        Monomial shift(ring->nvars());
        shift.set(v, df - dg);
        f = lg * f - (lf.term_multiple(Rational(1), shift)) * g;
        if (++guard > 10000)
            fail(ErrorKind::internal_error, "pseudo-division failed to terminate");
    }
    return f;
}

Polynomial gcd_list(const std::vector<Polynomial>& ps, const RingPtr& ring) {
    Polynomial g(ring);
    for (const Polynomial& p : ps) {
        g = poly_gcd(g, p);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive();
    if (b.is_zero()) return a.primitive();
    check_same_ring(a.ring(), b.ring());
    const RingPtr& ring = a.ring();
    int n = ring->nvars();
    std::vector<bool> sa = a.support_vars(), sb = b.support_vars();
    int v = -1;
    for (int i = n - 1; i >= 0; --i)
        if (sa[i] || sb[i]) { v = i; break; }
    if (v < 0) return Polynomial::constant(ring, Rational(1));
    if (!sa[v]) {
        // a is free of v: fold v out of b through its content
        Polynomial cb = gcd_list(univar_coeffs(b, v), ring);
        return poly_gcd(a, cb);
    }
    if (!sb[v]) {
        Polynomial ca = gcd_list(univar_coeffs(a, v), ring);
        return poly_gcd(ca, b);
    }
    std::vector<Polynomial> ac = univar_coeffs(a, v), bc = univar_coeffs(b, v);
    Polynomial ca = gcd_list(ac, ring), cb = gcd_list(bc, ring);
    Polynomial pa = poly_divexact(a, ca), pb = poly_divexact(b, cb);
    Polynomial cont = poly_gcd(ca, cb);
    // primitive PRS on the primitive parts
    Polynomial F = pa, G = pb;
    if (deg_in(F, v) < deg_in(G, v)) std::swap(F, G);
    for (;;) {
        if (G.is_zero()) break;
        if (deg_in(G, v) == 0) {
            // primitive and v-free: coprime primitive parts
            return cont.primitive();
        }
        Polynomial R = prem(F, G, v, ring);
        F = G;
        if (R.is_zero()) { G = R; break; }
        Polynomial cR = gcd_list(univar_coeffs(R, v), ring);
        G = poly_divexact(R, cR);
    }
    Polynomial pp = F.primitive();
    return (cont * pp).primitive();
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero())
        fail(ErrorKind::structural_error, "squarefree part of the zero polynomial");
    if (f.is_constant()) return Polynomial::constant(f.ring(), Rational(1));
    Polynomial g = f;
    for (int v = 0; v < f.ring()->nvars(); ++v) {
        Polynomial d = derivative(f, v);
        if (!d.is_zero()) g = poly_gcd(g, d);
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return f.monic();
    return poly_divexact(f, g).monic();
}

} // namespace legreuel
