#include "legreuel/matrix.hpp"

#include <cstdint>
#include <unordered_map>

namespace legreuel {

PolyMatrix jacobian(const RingPtr& ring, const std::vector<Polynomial>& fs) {
    if (fs.empty())
        fail(ErrorKind::structural_error, "jacobian of an empty polynomial list");
    PolyMatrix m(ring, (int)fs.size(), ring->nvars());
    for (int i = 0; i < (int)fs.size(); ++i) {
        check_same_ring(ring, fs[i].ring() ? fs[i].ring() : ring);
        for (int j = 0; j < ring->nvars(); ++j)
            m.at(i, j) = derivative(fs[i], j);
    }
    return m;
}

// Laplace expansion along the topmost remaining row, memoized on the column
// mask so each submatrix determinant is computed once.
static Polynomial det_sub(const PolyMatrix& m, const std::vector<int>& rows,
                          const std::vector<int>& cols, size_t level, uint32_t colmask,
                          std::unordered_map<uint32_t, Polynomial>& memo) {
    if (level == rows.size())
        return Polynomial::constant(m.ring(), Rational(1));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Polynomial acc(m.ring());
    int pos = 0;
    for (size_t c = 0; c < cols.size(); ++c) {
        if (!(colmask & (1u << c))) continue;
        const Polynomial& entry = m.at(rows[level], cols[c]);
        if (!entry.is_zero()) {
            Polynomial sub = det_sub(m, rows, cols, level + 1, colmask & ~(1u << c), memo);
            Polynomial prod = entry * sub;
            acc = (pos % 2 == 0) ? acc + prod : acc - prod;
        }
        ++pos;
    }
    memo.emplace(colmask, acc);
    return acc;
}

static Polynomial det_of(const PolyMatrix& m, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    std::unordered_map<uint32_t, Polynomial> memo;
    uint32_t full = cols.size() >= 32 ? ~0u : ((1u << cols.size()) - 1);
    return det_sub(m, rows, cols, 0, full, memo);
}

Polynomial det(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        fail(ErrorKind::structural_error, "determinant of a non-square matrix");
    std::vector<int> idx;
    for (int i = 0; i < m.rows(); ++i) idx.push_back(i);
    return det_of(m, idx, idx);
}

// next ascending k-subset of [0, n) in lexicographic order; false when done
static bool next_subset(std::vector<int>& s, int n) {
    int k = (int)s.size();
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<Polynomial> minors(const PolyMatrix& m, int k) {
    if (k <= 0 || k > m.rows() || k > m.cols())
        fail(ErrorKind::structural_error, "minor size out of range");
    if (k > 30)
        fail(ErrorKind::structural_error, "minor size too large");
    std::vector<Polynomial> out;
    std::vector<int> rows(k), cols(k);
    for (int i = 0; i < k; ++i) rows[i] = i;
    do {
        for (int i = 0; i < k; ++i) cols[i] = i;
        do {
            out.push_back(det_of(m, rows, cols));
        } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
    return out;
}

// positions = active row/column indices, ascending
static Polynomial pf_rec(const PolyMatrix& m, std::vector<int> active) {
    if (active.empty())
        return Polynomial::constant(m.ring(), Rational(1));
    int i0 = active[0];
    Polynomial acc(m.ring());
    for (size_t t = 1; t < active.size(); ++t) {
        const Polynomial& entry = m.at(i0, active[t]);
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (size_t s = 1; s < active.size(); ++s)
            if (s != t) rest.push_back(active[s]);
        Polynomial sub = entry * pf_rec(m, std::move(rest));
        acc = (t % 2 == 1) ? acc + sub : acc - sub;
    }
    return acc;
}

std::vector<Polynomial> pfaffians(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        fail(ErrorKind::structural_error, "pfaffian of a non-square matrix");
    int n = m.rows();
    for (int i = 0; i < n; ++i) {
        if (!m.at(i, i).is_zero())
            fail(ErrorKind::structural_error, "matrix is not skew-symmetric");
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != -m.at(j, i))
                fail(ErrorKind::structural_error, "matrix is not skew-symmetric");
    }
    std::vector<Polynomial> out;
    if (n % 2 == 0) {
        std::vector<int> all;
        for (int i = 0; i < n; ++i) all.push_back(i);
        out.push_back(pf_rec(m, std::move(all)));
    } else {
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> rest;
            for (int i = 0; i < n; ++i)
                if (i != drop) rest.push_back(i);
            out.push_back(pf_rec(m, std::move(rest)));
        }
    }
    return out;
}

} // namespace legreuel
