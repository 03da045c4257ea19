#ifndef LEGREUEL_RING_HPP
#define LEGREUEL_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "legreuel/order.hpp"

namespace legreuel {

// Polynomial ring QQ[x_1..x_n] with a fixed monomial order. Rings are
// immutable and shared; equality is structural.
class Ring {
public:
    Ring(std::vector<std::string> vars, MonomialOrder order)
        : vars_(std::move(vars)), order_(std::move(order)) {
        if ((int)vars_.size() != order_.nvars())
            fail(ErrorKind::structural_error, "order arity does not match variable count");
        if (vars_.empty())
            fail(ErrorKind::structural_error, "ring needs at least one variable");
        for (size_t i = 0; i < vars_.size(); ++i)
            for (size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    fail(ErrorKind::structural_error, "duplicate variable name: " + vars_[i]);
    }

    int nvars() const { return (int)vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[i]; }
    const MonomialOrder& order() const { return order_; }

    // -1 when the name is not a variable of this ring
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return (int)i;
        return -1;
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ && a.order_ == b.order_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

    std::string describe() const {
        std::string s = "(";
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (i) s += ",";
            s += vars_[i];
        }
        s += ")";
        if (order_.is_local()) s += " local";
        else if (order_.is_global()) s += " global";
        else s += " block";
        return s;
    }

private:
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order) {
    return std::make_shared<const Ring>(std::move(vars), std::move(order));
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || *a != *b)
        fail(ErrorKind::structural_error, "operands live in different rings");
}

} // namespace legreuel

#endif
