#include "legreuel/stdbasis.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <iostream>

namespace legreuel {

static std::atomic<bool> g_trace{false};
void set_trace(bool on) { g_trace = on; }
bool trace_enabled() { return g_trace; }

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
        if (g.is_zero()) continue;
        check_same_ring(ring_, g.ring());
        gens_.push_back(std::move(g));
    }
}

Ideal operator+(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.gens();
    for (const Polynomial& g : b.gens()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

const StdBasis& Ideal::std_basis() const {
    if (!std_cache_)
        std_cache_ = std::make_shared<const StdBasis>(legreuel::std_basis(*this));
    return *std_cache_;
}

bool StdBasis::contains(const Polynomial& p) const {
    if (p.is_zero()) return true;
    check_same_ring(ring_, p.ring());
    return weak_normal_form(p, elems_).is_zero();
}

Polynomial weak_normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                            StdStats* stats) {
    if (p.is_zero() || G.empty()) return p;
    // reducer set starts as G and grows by partial remainders that have
    // strictly smaller ecart than every usable reducer (Mora's condition);
    // deque keeps stored remainders at stable addresses
    std::vector<const Polynomial*> T;
    T.reserve(G.size());
    for (const Polynomial& g : G)
        if (!g.is_zero()) T.push_back(&g);
    std::deque<Polynomial> extra;
    Polynomial h = p.primitive();
    while (!h.is_zero()) {
        const Monomial& lm = h.leading_monomial();
        const Polynomial* best = nullptr;
        int32_t best_ecart = 0;
        for (const Polynomial* g : T) {
            if (!g->leading_monomial().divides(lm)) continue;
            int32_t e = g->ecart();
            if (!best || e < best_ecart) { best = g; best_ecart = e; }
        }
        if (!best) break;
        if (best_ecart > h.ecart()) {
            extra.push_back(h);
            T.push_back(&extra.back());
        }
        Rational c = h.leading_coeff() / best->leading_coeff();
        Monomial q = best->leading_monomial().quotient_into(lm);
        h = sub_scaled(h, c, q, *best);
        if (!h.is_zero()) h = h.primitive();
        if (stats) ++stats->nf_steps;
    }
    return h;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       StdStats* stats) {
    if (p.is_zero() || G.empty()) return p;
    if (!p.ring()->order().is_global()) return weak_normal_form(p, G, stats);
    // global order: reduction never rescales, so peeled terms and remainder
    // stay coherently scaled and p minus the result lies in (G)
    std::vector<const Polynomial*> T;
    T.reserve(G.size());
    for (const Polynomial& g : G)
        if (!g.is_zero()) T.push_back(&g);
    if (T.empty()) return p;
    std::vector<Term> kept;
    Polynomial h = p;
    while (!h.is_zero()) {
        const Monomial& lm = h.leading_monomial();
        const Polynomial* red = nullptr;
        for (const Polynomial* g : T)
            if (g->leading_monomial().divides(lm)) { red = g; break; }
        if (!red) {
            kept.push_back(h.leading_term());
            h = h.tail();
            continue;
        }
        Rational c = h.leading_coeff() / red->leading_coeff();
        Monomial q = red->leading_monomial().quotient_into(lm);
        h = sub_scaled(h, c, q, *red);
        if (stats) ++stats->nf_steps;
    }
    return Polynomial::from_sorted_terms(p.ring(), std::move(kept));
}

Polynomial normal_form(const Polynomial& p, const StdBasis& B) {
    return normal_form(p, B.elements());
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm_m;
    int32_t lcm_deg;
    int32_t sugar;
};

struct PairOrder {
    const MonomialOrder* ord;
    PairStrategy strategy;
    bool operator()(const Pair& a, const Pair& b) const {
        if (strategy == PairStrategy::sugar && a.sugar != b.sugar)
            return a.sugar < b.sugar;
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
        int c = ord->compare(a.lcm_m, b.lcm_m);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace

// Gebauer-Moller style pair update: drops pairs by the product criterion and
// the chain (lcm) criterion as the new element arrives.
static void update_pairs(std::vector<Pair>& pairs, std::vector<Pair>& fresh,
                         const std::vector<Polynomial>& basis,
                         const std::vector<int32_t>& sugars, int t) {
    const Monomial& lt = basis[t].leading_monomial();
    fresh.clear();
    for (int i = 0; i < t; ++i) {
        if (basis[i].is_zero()) continue;
        Pair p;
        p.i = i;
        p.j = t;
        p.lcm_m = lcm(basis[i].leading_monomial(), lt);
        p.lcm_deg = p.lcm_m.degree();
        int32_t si = sugars[i] + (p.lcm_deg - basis[i].leading_monomial().degree());
        int32_t st = sugars[t] + (p.lcm_deg - lt.degree());
        p.sugar = si > st ? si : st;
        fresh.push_back(std::move(p));
    }
    // chain criterion against existing pairs: (i,j) dies when lt divides its
    // lcm strictly on both sides
    std::vector<Pair> survivors;
    survivors.reserve(pairs.size());
    for (Pair& p : pairs) {
        bool drop = lt.divides(p.lcm_m) &&
                    lcm(basis[p.i].leading_monomial(), lt) != p.lcm_m &&
                    lcm(basis[p.j].leading_monomial(), lt) != p.lcm_m;
        if (!drop) survivors.push_back(std::move(p));
    }
    pairs = std::move(survivors);
    // among the fresh pairs keep one representative per minimal lcm
    std::vector<char> dead(fresh.size(), 0);
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (dead[a]) continue;
        for (size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || dead[b] || dead[a]) continue;
            if (fresh[b].lcm_m == fresh[a].lcm_m) {
                if (b > a) dead[b] = 1;
            } else if (fresh[b].lcm_m.divides(fresh[a].lcm_m)) {
                dead[a] = 1;
            }
        }
    }
    // product criterion last: a coprime pair kills itself but still shields
    // pairs removed above
    for (size_t a = 0; a < fresh.size(); ++a) {
        if (dead[a]) continue;
        if (coprime(basis[fresh[a].i].leading_monomial(),
                    basis[fresh[a].j].leading_monomial()))
            dead[a] = 1;
    }
    for (size_t a = 0; a < fresh.size(); ++a)
        if (!dead[a]) pairs.push_back(std::move(fresh[a]));
}

static Polynomial spolynomial(const Polynomial& f, const Polynomial& g, const Monomial& l) {
    Monomial mf = f.leading_monomial().quotient_into(l);
    Monomial mg = g.leading_monomial().quotient_into(l);
    Polynomial a = f.term_multiple(g.leading_coeff(), mf);
    Polynomial b = g.term_multiple(f.leading_coeff(), mg);
    return a - b;
}

// Buchberger loop with Mora normal form, then minimalization. Tail
// reduction is left to the caller.
static std::vector<Polynomial> buchberger_minimal(const Ideal& I, PairStrategy strategy,
                                                  StdStats& stats) {
    const RingPtr& ring = I.ring();
    const MonomialOrder& ord = ring->order();

    std::vector<Polynomial> basis;
    std::vector<int32_t> sugars;
    std::vector<Pair> pairs, fresh;
    for (const Polynomial& g : I.gens()) {
        basis.push_back(g.primitive());
        sugars.push_back(g.total_degree());
        update_pairs(pairs, fresh, basis, sugars, (int)basis.size() - 1);
    }

    PairOrder po{&ord, strategy};
    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (po(pairs[k], pairs[best])) best = k;
        Pair p = std::move(pairs[best]);
        pairs.erase(pairs.begin() + (long)best);
        ++stats.pairs_considered;

        Polynomial s = spolynomial(basis[p.i], basis[p.j], p.lcm_m);
        Polynomial h = weak_normal_form(s, basis, &stats);
        ++stats.pairs_reduced;
        if (h.is_zero()) {
            ++stats.zero_reductions;
            continue;
        }
        h = h.primitive();
        basis.push_back(h);
        sugars.push_back(p.sugar > h.total_degree() ? p.sugar : h.total_degree());
        update_pairs(pairs, fresh, basis, sugars, (int)basis.size() - 1);
        if (trace_enabled())
            std::cerr << "[std] basis " << basis.size() << " pairs " << pairs.size()
                      << " lead " << Polynomial::term(ring, Rational(1), h.leading_monomial()).to_string()
                      << "\n";
    }

    // minimalize: keep elements whose leading monomial no kept element divides
    std::vector<int> order_idx(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) order_idx[i] = (int)i;
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        const Monomial &ma = basis[a].leading_monomial(), &mb = basis[b].leading_monomial();
        if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
        int c = ord.compare(ma, mb);
        if (c != 0) return c > 0;
        return a < b;
    });
    std::vector<Polynomial> kept;
    for (int idx : order_idx) {
        const Monomial& m = basis[idx].leading_monomial();
        bool dominated = false;
        for (const Polynomial& k : kept)
            if (k.leading_monomial().divides(m)) { dominated = true; break; }
        if (!dominated) kept.push_back(basis[idx]);
    }
    std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(a.leading_monomial(), b.leading_monomial());
    });
    return kept;
}

std::vector<Polynomial> std_basis_raw(const Ideal& I) {
    StdStats stats;
    std::vector<Polynomial> kept = buchberger_minimal(I, PairStrategy::normal, stats);
    for (Polynomial& g : kept) g = g.monic();
    return kept;
}

StdBasis std_basis(const Ideal& I, PairStrategy strategy) {
    const RingPtr& ring = I.ring();
    const MonomialOrder& ord = ring->order();
    StdStats stats;
    std::vector<Polynomial> kept = buchberger_minimal(I, strategy, stats);

    std::vector<Polynomial> reduced;
    reduced.reserve(kept.size());
    if (ord.is_global()) {
        // tail reduction against the full kept set; an element's own lead
        // cannot divide its strictly smaller tail monomials, so including the
        // element among the reducers is harmless
        for (size_t i = 0; i < kept.size(); ++i) {
            Polynomial t = normal_form(kept[i].tail(), kept, &stats);
            std::vector<Term> terms;
            terms.push_back(kept[i].leading_term());
            for (const Term& tt : t.terms()) terms.push_back(tt);
            reduced.push_back(Polynomial(ring, std::move(terms)).monic());
        }
    } else {
        // local orders: a reduced tail is only defined up to a unit factor,
        // and replacing an element by a unit-scaled reduction changes the
        // ideal, so the minimal basis is kept as computed
        for (const Polynomial& g : kept) reduced.push_back(g.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(a.leading_monomial(), b.leading_monomial());
    });
    stats.basis_size = (int)reduced.size();
    if (trace_enabled())
        std::cerr << "[std] done: " << stats.basis_size << " elements, "
                  << stats.pairs_considered << " pairs, " << stats.zero_reductions
                  << " zero reductions, " << stats.nf_steps << " nf steps\n";
    return StdBasis(ring, std::move(reduced), stats);
}

bool ideal_contains(const Ideal& I, const Polynomial& p) {
    if (p.is_zero()) return true;
    return I.std_basis().contains(p);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring());
    for (const Polynomial& g : b.gens())
        if (!ideal_contains(a, g)) return false;
    for (const Polynomial& g : a.gens())
        if (!ideal_contains(b, g)) return false;
    return true;
}

} // namespace legreuel
