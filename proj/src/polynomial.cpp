#include "legreuel/polynomial.hpp"

#include <algorithm>

namespace legreuel {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse_error: return "parse_error";
        case ErrorKind::structural_error: return "structural_error";
        case ErrorKind::zero_divisor: return "zero_divisor";
        case ErrorKind::unit_ideal: return "unit_ideal";
        case ErrorKind::infinite_dimension: return "infinite_dimension";
        case ErrorKind::polar_dim_too_high: return "polar_dimension_too_high";
        case ErrorKind::retries_exhausted: return "retries_exhausted";
        case ErrorKind::codim_mismatch: return "codim_mismatch";
        case ErrorKind::consistency_violation: return "consistency_violation";
        case ErrorKind::internal_error: return "internal_error";
    }
    return "unknown";
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    const MonomialOrder& ord = ring_->order();
    for (Term& t : terms_)
        if (t.mono.nvars() != ring_->nvars())
            fail(ErrorKind::structural_error, "monomial arity does not match ring");
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mono, b.mono);
    });
    // combine equal monomials, drop zeros
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
    Polynomial p(ring);
    if (!c.is_zero())
        p.terms_.push_back({std::move(c), Monomial(ring->nvars())});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars())
        fail(ErrorKind::structural_error, "variable index out of range");
    Monomial m(ring->nvars());
    m.set(i, 1);
    Polynomial p(ring);
    p.terms_.push_back({Rational(1), std::move(m)});
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Rational c, Monomial m) {
    Polynomial p(ring);
    if (!c.is_zero()) {
        if (m.nvars() != ring->nvars())
            fail(ErrorKind::structural_error, "monomial arity does not match ring");
        p.terms_.push_back({std::move(c), std::move(m)});
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        fail(ErrorKind::structural_error, "leading term of zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::tail() const {
    Polynomial p(ring_);
    if (terms_.size() > 1)
        p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
}

int32_t Polynomial::total_degree() const {
    int32_t d = -1;
    for (const Term& t : terms_)
        if (t.mono.degree() > d) d = t.mono.degree();
    return d;
}

int32_t Polynomial::ecart() const {
    if (terms_.empty()) return 0;
    return total_degree() - terms_.front().mono.degree();
}

Rational Polynomial::constant_term() const {
    for (const Term& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return Rational(0);
}

std::vector<bool> Polynomial::support_vars() const {
    std::vector<bool> s(ring_ ? ring_->nvars() : 0, false);
    for (const Term& t : terms_)
        for (int i = 0; i < t.mono.nvars(); ++i)
            if (t.mono[i] > 0) s[i] = true;
    return s;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({-t.coeff, t.mono});
    return p;
}

// merge with b's terms scaled by c and shifted by m (m may be trivial)
static Polynomial merge_scaled(const Polynomial& a, int sign_b, const Rational& c,
                               const Monomial* m, const Polynomial& b) {
    check_same_ring(a.ring(), b.ring());
    const MonomialOrder& ord = a.ring()->order();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<Monomial> shifted;
    if (m) {
        shifted.reserve(tb.size());
        for (const Term& t : tb) shifted.push_back(*m * t.mono);
    }
    auto bmono = [&](size_t j) -> const Monomial& { return m ? shifted[j] : tb[j].mono; };
    std::vector<Term> r;
    r.reserve(ta.size() + tb.size());
    size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        int cmp;
        if (i >= ta.size()) cmp = -1;
        else if (j >= tb.size()) cmp = 1;
        else cmp = ord.compare(ta[i].mono, bmono(j));
        if (cmp > 0) {
            r.push_back(ta[i]);
            ++i;
        } else if (cmp < 0) {
            Rational cc = c * tb[j].coeff;
            if (sign_b < 0) cc = -cc;
            if (!cc.is_zero())
                r.push_back({std::move(cc), m ? std::move(shifted[j]) : tb[j].mono});
            ++j;
        } else {
            Rational cc = c * tb[j].coeff;
            if (sign_b < 0) cc = -cc;
            cc += ta[i].coeff;
            if (!cc.is_zero()) r.push_back({std::move(cc), ta[i].mono});
            ++i;
            ++j;
        }
    }
    return Polynomial::from_sorted_terms(a.ring(), std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge_scaled(a, +1, Rational(1), nullptr, b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return a;
    return merge_scaled(a, -1, Rational(1), nullptr, b);
}

Polynomial sub_scaled(const Polynomial& a, const Rational& c, const Monomial& m,
                      const Polynomial& b) {
    return merge_scaled(a, -1, c, &m, b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a.ring(), b.ring());
    Polynomial acc(a.ring());
    const Polynomial& outer = a.term_count() <= b.term_count() ? a : b;
    const Polynomial& inner = a.term_count() <= b.term_count() ? b : a;
    for (const Term& t : outer.terms())
        acc = merge_scaled(acc, +1, t.coeff, &t.mono, inner);
    return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms().size() != b.terms().size()) return false;
    for (size_t i = 0; i < a.terms().size(); ++i)
        if (a.terms()[i].coeff != b.terms()[i].coeff || a.terms()[i].mono != b.terms()[i].mono)
            return false;
    if (!a.terms().empty()) check_same_ring(a.ring(), b.ring());
    return true;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({c * t.coeff, t.mono});
    return p;
}

Polynomial Polynomial::term_multiple(const Rational& c, const Monomial& m) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({c * t.coeff, m * t.mono});
    return p;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0)
        fail(ErrorKind::structural_error, "negative exponent");
    Polynomial r = Polynomial::constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    // lcm of denominators over gcd of numerators, sign fixed by the lead
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const Term& t : terms_) {
        mpz_class d = t.coeff.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
        mpz_class n = t.coeff.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale((mpq_class(den_lcm) / mpq_class(num_gcd)));
    if ((leading_coeff() * scale).sign() < 0) scale = -scale;
    return scaled(scale);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if ((int)point.size() != (ring_ ? ring_->nvars() : 0))
        fail(ErrorKind::structural_error, "evaluation point arity mismatch");
    Rational acc(0);
    for (const Term& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < t.mono.nvars(); ++i)
            for (int32_t k = 0; k < t.mono[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

Polynomial derivative(const Polynomial& p, int var) {
    if (!p.ring() || var < 0 || var >= p.ring()->nvars())
        fail(ErrorKind::structural_error, "derivative variable index out of range");
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        int32_t e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({t.coeff * Rational(e), std::move(m)});
    }
    // dividing every survivor by the same variable preserves descending order
    return Polynomial::from_sorted_terms(p.ring(), std::move(out));
}

Polynomial transport(const Polynomial& p, const RingPtr& target,
                     const std::vector<int>& var_map) {
    if (!p.ring()) return Polynomial(target);
    if ((int)var_map.size() != p.ring()->nvars())
        fail(ErrorKind::structural_error, "transport map arity mismatch");
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        Monomial m(target->nvars());
        for (int i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            int j = var_map[i];
            if (j < 0 || j >= target->nvars())
                fail(ErrorKind::structural_error, "transport map index out of range");
            m.set(j, m[j] + t.mono[i]);
        }
        out.push_back({t.coeff, std::move(m)});
    }
    return Polynomial(target, std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        Rational c = t.coeff;
        if (k == 0) {
            if (c.sign() < 0) { s += "-"; c = -c; }
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        std::string mono;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var_name(i);
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty()) {
            s += c.to_string();
        } else {
            if (!c.is_one()) s += c.to_string() + "*";
            s += mono;
        }
    }
    return s;
}

} // namespace legreuel
