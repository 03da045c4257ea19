#ifndef LEGREUEL_STDBASIS_HPP
#define LEGREUEL_STDBASIS_HPP

#include <memory>
#include <vector>

#include "legreuel/polynomial.hpp"

namespace legreuel {

enum class PairStrategy { normal, sugar };

struct StdStats {
    long pairs_considered = 0;
    long pairs_reduced = 0;
    long zero_reductions = 0;
    long nf_steps = 0;
    int basis_size = 0;
};

class StdBasis;

// Finite generating set in a fixed ring. Generator order is preserved; zero
// polynomials are stripped at construction. The reduced standard basis for
// the normal strategy is cached on the handle.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    int size() const { return (int)gens_.size(); }
    bool is_zero_ideal() const { return gens_.empty(); }

    const StdBasis& std_basis() const;

    friend Ideal operator+(const Ideal& a, const Ideal& b);

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const StdBasis> std_cache_;
};

// Minimal standard basis: elements monic, no leading monomial divides
// another, sorted with descending leading monomials. For global orders the
// tails are fully reduced, giving the unique reduced Groebner basis. For
// local orders the tails stay as computed: a reduced tail is only defined up
// to a unit factor there, and swapping in a unit-scaled tail changes the
// ideal. Deterministic for a fixed strategy.
class StdBasis {
public:
    StdBasis(RingPtr ring, std::vector<Polynomial> elements, StdStats stats)
        : ring_(std::move(ring)), elems_(std::move(elements)), stats_(stats) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& elements() const { return elems_; }
    int size() const { return (int)elems_.size(); }
    bool is_unit() const {
        return elems_.size() == 1 && elems_[0].leading_monomial().is_one();
    }
    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> r;
        r.reserve(elems_.size());
        for (const Polynomial& g : elems_) r.push_back(g.leading_monomial());
        return r;
    }
    const StdStats& stats() const { return stats_; }

    bool contains(const Polynomial& p) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> elems_;
    StdStats stats_;
};

// Mora weak normal form: the leading term of the result is not divisible by
// any leading monomial of G; the result is a unit multiple of p modulo (G) in
// the localization selected by the order. Intermediate partial reductions may
// join the reducer set, which is what makes local orders terminate. For
// global orders this is ordinary leading-term reduction.
Polynomial weak_normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                            StdStats* stats = nullptr);

// Fully reduced remainder for global orders: no term of the result is
// divisible by a leading monomial of G, and p minus the result lies in (G).
// Unique when G is a Groebner basis. For local orders a fully reduced
// polynomial representative need not exist (the true normal form can be an
// infinite series), so the weak normal form is returned instead.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       StdStats* stats = nullptr);
Polynomial normal_form(const Polynomial& p, const StdBasis& B);

StdBasis std_basis(const Ideal& I, PairStrategy strategy = PairStrategy::normal);

// Minimal monic standard basis without tail reduction. Elimination-based
// operations need this form: every element is then a polynomial combination
// of the input generators, which keeps exact divisibility arguments valid.
std::vector<Polynomial> std_basis_raw(const Ideal& I);

bool ideal_contains(const Ideal& I, const Polynomial& p);
bool ideal_equal(const Ideal& a, const Ideal& b);

// opt-in reduction trace on stderr
void set_trace(bool on);
bool trace_enabled();

} // namespace legreuel

#endif
