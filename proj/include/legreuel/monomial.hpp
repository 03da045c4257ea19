#ifndef LEGREUEL_MONOMIAL_HPP
#define LEGREUEL_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "legreuel/error.hpp"

namespace legreuel {

// Exponent vector of fixed length with cached total degree. Exponents are
// non-negative; degree stays in sync with the exponents at all times.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int32_t> exps) : e_(std::move(exps)) {
        deg_ = 0;
        for (int32_t x : e_) {
            if (x < 0)
                fail(ErrorKind::structural_error, "negative exponent");
            deg_ += x;
        }
    }

    int nvars() const { return (int)e_.size(); }
    int32_t degree() const { return deg_; }
    int32_t operator[](int i) const { return e_[i]; }
    const std::vector<int32_t>& exponents() const { return e_; }

    bool is_one() const { return deg_ == 0; }

    void set(int i, int32_t v) {
        if (v < 0)
            fail(ErrorKind::structural_error, "negative exponent");
        deg_ += v - e_[i];
        e_[i] = v;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (int i = 0; i < r.nvars(); ++i) r.e_[i] += b.e_[i];
        r.deg_ += b.deg_;
        return r;
    }

    bool divides(const Monomial& m) const {
        if (deg_ > m.deg_) return false;
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    // quotient m / this, valid only when this divides m
    Monomial quotient_into(const Monomial& m) const {
        Monomial r = m;
        for (int i = 0; i < r.nvars(); ++i) r.e_[i] -= e_[i];
        r.deg_ -= deg_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            r.deg_ += r.e_[i];
        }
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
            r.deg_ += r.e_[i];
        }
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int32_t> e_;
    int32_t deg_ = 0;
};

} // namespace legreuel

#endif
