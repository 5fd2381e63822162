#include "brq/mod2.hpp"

namespace brq {

BitMat BitMat::identity(std::size_t n) {
    BitMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BitMat BitMat::from_integer(const IntMat& m) {
    BitMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = static_cast<Bit>(abs(m.at(i, j)) % 2);
    return out;
}

BitVec BitMat::apply(const BitVec& v) const {
    if (v.size() != cols_) throw DimensionError("BitMat::apply: length mismatch");
    BitVec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Bit s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s ^= at(i, j) & v[j];
        out[i] = s;
    }
    return out;
}

BitMat BitMat::operator*(const BitMat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("BitMat product shape mismatch");
    BitMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (at(i, k))
                for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) ^= rhs.at(k, j);
    return out;
}

BitMat BitMat::transposed() const {
    BitMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

// Row echelon form; returns pivot columns. Optionally reduces a companion
// matrix with the same row operations.
std::vector<std::size_t> echelon(BitMat& m, BitMat* companion = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.at(p, c)) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
        if (companion)
            for (std::size_t j = 0; j < companion->cols(); ++j)
                std::swap(companion->at(r, j), companion->at(p, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || !m.at(i, c)) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) ^= m.at(r, j);
            if (companion)
                for (std::size_t j = 0; j < companion->cols(); ++j)
                    companion->at(i, j) ^= companion->at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t BitMat::rank() const {
    BitMat m = *this;
    return echelon(m).size();
}

std::vector<BitVec> BitMat::kernel() const {
    BitMat m = *this;
    std::vector<std::size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<BitVec> basis;
    for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
        if (is_pivot[free_c]) continue;
        BitVec v(cols_, 0);
        v[free_c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m.at(r, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

BitMat BitMat::inverse() const {
    if (rows_ != cols_) throw DimensionError("BitMat::inverse: matrix not square");
    BitMat m = *this;
    BitMat inv = identity(rows_);
    std::vector<std::size_t> pivots = echelon(m, &inv);
    if (pivots.size() != rows_) throw std::invalid_argument("BitMat::inverse: singular matrix");
    return inv;
}

BitVec bitvec_add(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw DimensionError("bitvec_add: length mismatch");
    BitVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

bool bitvec_is_zero(const BitVec& v) {
    for (Bit b : v)
        if (b) return false;
    return true;
}

BitVec reduce_vec_mod2(const Vec& v) {
    BitVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<Bit>(abs(v[i]) % 2);
    return out;
}

Mod2QuadraticSpace::Mod2QuadraticSpace(BitMat pairing, std::optional<BitVec> q_on_basis)
    : pairing_(std::move(pairing)), q_on_basis_(std::move(q_on_basis)) {
    if (pairing_.rows() != pairing_.cols())
        throw DimensionError("Mod2QuadraticSpace: pairing not square");
    if (pairing_ != pairing_.transposed())
        throw std::invalid_argument("Mod2QuadraticSpace: pairing not symmetric");
    if (q_on_basis_ && q_on_basis_->size() != pairing_.rows())
        throw DimensionError("Mod2QuadraticSpace: q length != dimension");
}

const BitVec& Mod2QuadraticSpace::q_on_basis() const {
    if (!q_on_basis_) throw std::logic_error("Mod2QuadraticSpace: q not available");
    return *q_on_basis_;
}

Bit Mod2QuadraticSpace::pair(const BitVec& x, const BitVec& y) const {
    if (x.size() != dimension() || y.size() != dimension())
        throw DimensionError("pair: length mismatch");
    Bit s = 0;
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dimension(); ++j) s ^= pairing_.at(i, j) & y[j];
    }
    return s;
}

Bit Mod2QuadraticSpace::q_value(const BitVec& x) const {
    const BitVec& q = q_on_basis();
    if (x.size() != dimension()) throw DimensionError("q_value: length mismatch");
    Bit s = 0;
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (!x[i]) continue;
        s ^= q[i];
        for (std::size_t j = i + 1; j < dimension(); ++j) s ^= x[j] & pairing_.at(i, j);
    }
    return s;
}

std::optional<BitVec> Mod2QuadraticSpace::find_q_one_witness() const {
    const BitVec& q = q_on_basis();
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i)
        if (q[i]) {
            BitVec w(n, 0);
            w[i] = 1;
            return w;
        }
    // q vanishes on the basis; by polarization q(e_i + e_j) = (e_i . e_j).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pairing_.at(i, j)) {
                BitVec w(n, 0);
                w[i] = w[j] = 1;
                return w;
            }
    return std::nullopt;
}

Mod2QuadraticSpace reduce_mod2(const Lattice& l) {
    if (!l.is_even())
        throw std::invalid_argument("reduce_mod2: lattice '" + l.name() + "' is not even");
    BitVec q(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        Int half = l.gram().at(i, i) / 2;
        q[i] = static_cast<Bit>(abs(half) % 2);
    }
    return Mod2QuadraticSpace(BitMat::from_integer(l.gram()), std::move(q));
}

int pontryagin_even(const Lattice& l, const BitVec& x) {
    if (!l.is_even())
        throw std::invalid_argument("pontryagin_even: lattice '" + l.name() + "' is not even");
    if (x.size() != l.rank()) throw DimensionError("pontryagin_even: length mismatch");
    Vec lift(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) lift[i] = x[i];
    Int n = l.norm(lift) % 4;
    if (n < 0) n += 4;
    return static_cast<int>(n);
}

}  // namespace brq
