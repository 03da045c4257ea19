#ifndef LEGREUEL_MATRIX_HPP
#define LEGREUEL_MATRIX_HPP

#include <vector>

#include "legreuel/polynomial.hpp"

namespace legreuel {

// Dense matrix of polynomials over one ring, row-major.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols) {
        if (rows <= 0 || cols <= 0)
            fail(ErrorKind::structural_error, "matrix dimensions must be positive");
        data_.assign((size_t)rows * cols, Polynomial(ring_));
    }

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Polynomial& at(int i, int j) const { return data_[(size_t)i * cols_ + j]; }
    Polynomial& at(int i, int j) { return data_[(size_t)i * cols_ + j]; }

private:
    RingPtr ring_;
    int rows_, cols_;
    std::vector<Polynomial> data_;
};

// rows = polynomials, columns = ring variables
PolyMatrix jacobian(const RingPtr& ring, const std::vector<Polynomial>& fs);

Polynomial det(const PolyMatrix& m);

// All k x k minors, one per ascending row set R and column set C, with (R, C)
// pairs enumerated lexicographically. Zero minors and duplicates are kept.
std::vector<Polynomial> minors(const PolyMatrix& m, int k);

// Skew-symmetric input. Even size: the single Pfaffian. Odd size n: the n
// principal sub-Pfaffians, entry i from deleting row and column i.
std::vector<Polynomial> pfaffians(const PolyMatrix& m);

} // namespace legreuel

#endif
