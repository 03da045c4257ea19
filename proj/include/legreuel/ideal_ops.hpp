#ifndef LEGREUEL_IDEAL_OPS_HPP
#define LEGREUEL_IDEAL_OPS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "legreuel/stdbasis.hpp"

namespace legreuel {

Ideal ideal_sum(const Ideal& a, const Ideal& b);

// I cap J over the ring picked out by the order, via one auxiliary variable
// and an elimination block order
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

// I : (f); division of the intersection generators by f is exact by
// construction
Ideal ideal_colon(const Ideal& I, const Polynomial& f);

// I : f^infinity by iterated colon. Returns the stable ideal and the
// stabilization exponent k >= 1 with I : f^k already stable.
std::pair<Ideal, int> ideal_saturate(const Ideal& I, const Polynomial& f);

// generators free of the listed variables generating the elimination ideal
Ideal eliminate_vars(const Ideal& I, const std::vector<int>& vars);

// Krull dimension of the quotient by the leading ideal: the largest
// cardinality of a variable set meeting no leading monomial's support.
// Unit ideal: -1. Zero ideal in n variables: n.
int krull_dim(const StdBasis& B);
int krull_dim(const Ideal& I);

// Number of standard monomials; nullopt when infinite.
std::optional<long> vdim(const StdBasis& B);
std::optional<long> vdim(const Ideal& I);

struct HilbertSeries {
    std::vector<long> numerator; // first numerator, over (1-t)^nvars
    int dim = 0;
    long degree = 0; // numerator evaluated at 1 after cancelling to (1-t)^dim
};

HilbertSeries hilbert_series(const StdBasis& B);
long hilbert_multiplicity(const Ideal& I);

// p / f, valid only when f divides p exactly
Polynomial poly_divexact(const Polynomial& p, const Polynomial& f);

// Primitive-PRS gcd; only intended for the small inputs squarefree_part sees.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// f / gcd(f, df/dx_1, ..., df/dx_n), monic
Polynomial squarefree_part(const Polynomial& f);

} // namespace legreuel

#endif
