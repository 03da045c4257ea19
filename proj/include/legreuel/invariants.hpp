#ifndef LEGREUEL_INVARIANTS_HPP
#define LEGREUEL_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legreuel/ideal_ops.hpp"
#include "legreuel/matrix.hpp"

namespace legreuel {

// Linear form with integer coefficients in [-97, 97], drawn deterministically
// from (seed, attempt). Never the zero form.
struct LinearForm {
    Polynomial poly;
    uint64_t seed = 0;
    int attempt = 0;
};

// allowed_vars restricts which variables may carry nonzero coefficients;
// null means all of them
LinearForm sample_generic_linear(const RingPtr& ring, uint64_t seed, int attempt,
                                 const std::vector<bool>* allowed_vars = nullptr);

struct ReportTerm {
    std::string label; // "slice", "base", "polar", "multiplicity", "constant"
    int slice_dim = 0;
    std::optional<std::string> form;
    std::optional<int> sat_exponent;
    long value = 0;
    int sign = 0;
};

struct ComputationReport {
    long value = 0;
    uint64_t seed = 0;
    int resamples = 0;
    std::vector<ReportTerm> terms;

    bool consistent() const {
        long s = 0;
        for (const ReportTerm& t : terms) s += (long)t.sign * t.value;
        return s == value;
    }
};

// Germ of an analytic set at the origin: ideal in a local ring together with
// its asserted pure dimension. Construction verifies the dimension of the
// leading ideal and that every generator vanishes at the origin.
class VarietyPresentation {
public:
    VarietyPresentation(Ideal ideal, int pure_dim);

    const Ideal& ideal() const { return ideal_; }
    const RingPtr& ring() const { return ideal_.ring(); }
    int pure_dim() const { return pure_dim_; }

private:
    Ideal ideal_;
    int pure_dim_;
};

// I_X plus the (N - d + r)-minors of the Jacobian of (generators of I_X,
// f_1, ..., f_r)
Ideal jacobian_ideal(const VarietyPresentation& X, const std::vector<Polynomial>& fs);

// best effort: the (N - d)-minors of the Jacobian of the generators, added
// to I_X, cut out a set of dimension <= 0
bool isolated_check(const VarietyPresentation& X);

struct SampleOptions {
    uint64_t seed = 0;
    int max_retries = 8;
};

struct EulerDiffResult {
    long value = 0;
    ComputationReport report;
};

EulerDiffResult euler_diff(const VarietyPresentation& X, const Polynomial& f,
                           const Polynomial& g);

// Pinned data for chi_fiber: every slice form in sampling order (dimension
// descending), optionally a reduced replacement for the final curve slice.
// With overrides present a genericity failure is an error, not a resample.
struct ChiOverrides {
    std::vector<Polynomial> forms;
    std::optional<Ideal> reduced_slice;
};

struct ChiResult {
    long value = 0;
    ComputationReport report;
};

ChiResult chi_fiber(const VarietyPresentation& X, const Polynomial& f,
                    const SampleOptions& opt = {}, const ChiOverrides* ovr = nullptr);

// dim O/((f_1..f_(k-1)) + k-minors of jacobian(f_1..f_k)); the sum of the
// Milnor numbers of consecutive slices for an ICIS
long icis_milnor_sum(const std::vector<Polynomial>& fs);

struct CurveResult {
    long mu_f = 0;
    long mu_X = 0;
    long deg_f = 0;
    long mult = 0;
    ComputationReport report; // value = mu_X
};

CurveResult curve_invariants(const VarietyPresentation& smoothing, const Polynomial& pi,
                             const Polynomial& fbar, const SampleOptions& opt = {});

struct IdsResult {
    long nu_X = 0;
    int dim_X = 0;
    long mult = 0;
    std::optional<long> mu_f;
    std::optional<long> nu_slice;
    ComputationReport report; // value = nu_X
};

IdsResult ids_invariants(const PolyMatrix& F, const PolyMatrix& A, int s,
                         const std::optional<Polynomial>& fbar,
                         const SampleOptions& opt = {});

struct GorensteinResult {
    long mu = 0;
    long mult = 0;
    ComputationReport report; // value = mu
};

GorensteinResult gorenstein_mu(const VarietyPresentation& smoothing, const Polynomial& pi,
                               const SampleOptions& opt = {});

} // namespace legreuel

#endif
