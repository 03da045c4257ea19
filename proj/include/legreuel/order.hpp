#ifndef LEGREUEL_ORDER_HPP
#define LEGREUEL_ORDER_HPP

#include <vector>

#include "legreuel/monomial.hpp"

namespace legreuel {

// Order kinds on a contiguous variable span.
//   deg_rev_lex:     degree first (bigger wins), revlex tiebreak; 1 is smallest.
//   neg_deg_rev_lex: smaller degree wins, same revlex tiebreak; 1 is largest.
enum class OrderKind { deg_rev_lex, neg_deg_rev_lex };

// A monomial order is an ordered list of blocks whose spans partition
// [0, nvars) in order. Comparison proceeds block by block.
class MonomialOrder {
public:
    struct Block {
        OrderKind kind;
        int begin;
        int end; // exclusive
    };

    static MonomialOrder global(int nvars) {
        return MonomialOrder({{OrderKind::deg_rev_lex, 0, nvars}});
    }
    static MonomialOrder local(int nvars) {
        return MonomialOrder({{OrderKind::neg_deg_rev_lex, 0, nvars}});
    }
    explicit MonomialOrder(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        int at = 0;
        for (const Block& b : blocks_) {
            if (b.begin != at || b.end <= b.begin)
                fail(ErrorKind::structural_error, "order blocks must partition the variables in order");
            at = b.end;
        }
        nvars_ = at;
    }

    int nvars() const { return nvars_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    // True when every variable is smaller than 1 (pure local order).
    bool is_local() const {
        for (const Block& b : blocks_)
            if (b.kind != OrderKind::neg_deg_rev_lex) return false;
        return true;
    }
    // True when every variable is larger than 1 (well-order).
    bool is_global() const {
        for (const Block& b : blocks_)
            if (b.kind != OrderKind::deg_rev_lex) return false;
        return true;
    }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        for (const Block& blk : blocks_) {
            int32_t da = 0, db = 0;
            for (int i = blk.begin; i < blk.end; ++i) { da += a[i]; db += b[i]; }
            if (da != db) {
                bool bigger = (blk.kind == OrderKind::deg_rev_lex) ? (da > db) : (da < db);
                return bigger ? 1 : -1;
            }
            for (int i = blk.end - 1; i >= blk.begin; --i) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        if (a.blocks_.size() != b.blocks_.size()) return false;
        for (size_t i = 0; i < a.blocks_.size(); ++i) {
            const Block &x = a.blocks_[i], &y = b.blocks_[i];
            if (x.kind != y.kind || x.begin != y.begin || x.end != y.end) return false;
        }
        return true;
    }

private:
    std::vector<Block> blocks_;
    int nvars_ = 0;
};

} // namespace legreuel

#endif
