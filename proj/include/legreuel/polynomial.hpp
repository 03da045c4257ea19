#ifndef LEGREUEL_POLYNOMIAL_HPP
#define LEGREUEL_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "legreuel/monomial.hpp"
#include "legreuel/rational.hpp"
#include "legreuel/ring.hpp"

namespace legreuel {

struct Term {
    Rational coeff;
    Monomial mono;
};

// Polynomial over QQ in a fixed ring. Terms are kept strictly descending in
// the ring's monomial order with no zero coefficients; the zero polynomial
// has an empty term list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Rational c);
    static Polynomial variable(RingPtr ring, int i);
    static Polynomial term(RingPtr ring, Rational c, Monomial m);
    // caller guarantees terms are strictly descending with no zero coefficients
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(terms);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    int term_count() const { return (int)terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }
    Polynomial tail() const;

    // max total degree over terms; -1 for the zero polynomial
    int32_t total_degree() const;
    // total_degree() - degree(leading monomial); 0 for zero
    int32_t ecart() const;

    Rational constant_term() const;
    bool vanishes_at_origin() const { return constant_term().is_zero(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    std::vector<bool> support_vars() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial scaled(const Rational& c) const;
    Polynomial term_multiple(const Rational& c, const Monomial& m) const;
    Polynomial pow(int e) const;

    // leading coefficient scaled to 1
    Polynomial monic() const;
    // scaled by a positive rational so coefficients are coprime integers
    // with positive leading coefficient
    Polynomial primitive() const;

    Rational evaluate(const std::vector<Rational>& point) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial derivative(const Polynomial& p, int var);

// a - c * (m * b), computed in one merge pass; the reduction step of NF
Polynomial sub_scaled(const Polynomial& a, const Rational& c, const Monomial& m,
                      const Polynomial& b);

// Maps p into target, sending variable i of p's ring to variable var_map[i].
// Target order may differ; terms are re-sorted.
Polynomial transport(const Polynomial& p, const RingPtr& target,
                     const std::vector<int>& var_map);

} // namespace legreuel

#endif
