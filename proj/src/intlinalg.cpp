#include "brq/intlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace brq {

namespace {

// Floor division for cpp_int (operator/ truncates toward zero).
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

// Quotient minimizing |a - q*b|.
Int nearest_div(const Int& a, const Int& b) {
    Int q = fdiv(a, b);
    Int r = a - q * b;
    if (2 * r > abs(b)) ++q;
    return q;
}

}  // namespace

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (const auto& f : invariant_factors) o *= f;
    return o;
}

std::string FiniteAbelianGroup::to_string() const {
    if (invariant_factors.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        os << (i ? " + " : "") << "Z/" << invariant_factors[i];
    return os.str();
}

FiniteAbelianGroup FiniteAbelianGroup::torsion_part(const Int& n) const {
    std::vector<Int> fs;
    for (const auto& f : invariant_factors) {
        Int g = boost::multiprecision::gcd(f, n);
        if (g > 1) fs.push_back(g);
    }
    std::sort(fs.begin(), fs.end());
    return FiniteAbelianGroup{fs};
}

SmithDecomposition smith_normal_form(const IntMat& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithDecomposition s;
    s.D = m;
    s.U = IntMat::identity(rows);
    s.V = IntMat::identity(cols);
    s.Vinv = IntMat::identity(cols);
    IntMat& D = s.D;

    const std::size_t nmin = std::min(rows, cols);
    std::size_t t = 0;
    while (t < nmin) {
        // Pivot: minimal absolute value in the trailing submatrix, lowest
        // row-major index on ties, so output is reproducible.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& x = D.at(i, j);
                if (x == 0) continue;
                if (!found || abs(x) < abs(D.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) {
            D.swap_rows(t, pi);
            s.U.swap_rows(t, pi);
        }
        if (pj != t) {
            D.swap_cols(t, pj);
            s.V.swap_cols(t, pj);
            s.Vinv.swap_rows(t, pj);
        }

        for (;;) {
            bool restarted = false;
            for (std::size_t i = t + 1; i < rows && !restarted; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = nearest_div(D.at(i, t), D.at(t, t));
                D.add_row_multiple(i, t, -q);
                s.U.add_row_multiple(i, t, -q);
                if (D.at(i, t) != 0) {
                    // Remainder smaller than the pivot: promote it.
                    D.swap_rows(t, i);
                    s.U.swap_rows(t, i);
                    restarted = true;
                }
            }
            if (restarted) continue;
            for (std::size_t j = t + 1; j < cols && !restarted; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = nearest_div(D.at(t, j), D.at(t, t));
                D.add_col_multiple(j, t, -q);
                s.V.add_col_multiple(j, t, -q);
                s.Vinv.add_row_multiple(t, j, q);
                if (D.at(t, j) != 0) {
                    D.swap_cols(t, j);
                    s.V.swap_cols(t, j);
                    s.Vinv.swap_rows(t, j);
                    restarted = true;
                }
            }
            if (restarted) continue;

            // Row and column are clear; enforce that the pivot divides the
            // rest of the submatrix before moving on.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        D.add_row_multiple(t, i, 1);
                        s.U.add_row_multiple(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }

        if (D.at(t, t) < 0) {
            D.negate_row(t);
            s.U.negate_row(t);
        }
        ++t;
    }
    s.rank = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (D.at(i, i) != 0) ++s.rank;
    return s;
}

std::optional<Vec> solve_integral(const SmithDecomposition& snf, const Vec& b) {
    const std::size_t rows = snf.U.rows(), cols = snf.V.rows();
    if (b.size() != rows) throw DimensionError("solve_integral: rhs length mismatch");
    Vec y = snf.U.apply(b);
    Vec x(cols);
    const std::size_t nmin = std::min(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < nmin && snf.D.at(i, i) != 0) {
            if (y[i] % snf.D.at(i, i) != 0) return std::nullopt;
            x[i] = y[i] / snf.D.at(i, i);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V.apply(x);
}

std::optional<Vec> solve_integral(const IntMat& a, const Vec& b) {
    return solve_integral(smith_normal_form(a), b);
}

std::vector<Vec> kernel_saturated(const IntMat& a) {
    SmithDecomposition s = smith_normal_form(a);
    std::vector<Vec> out;
    for (std::size_t j = s.rank; j < a.cols(); ++j) {
        Vec v(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) v[i] = s.V.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> row_basis(const IntMat& s) {
    SmithDecomposition snf = smith_normal_form(s);
    // rows(S) and rows(U*S) = D*Vinv span the same lattice.
    std::vector<Vec> out;
    for (std::size_t i = 0; i < snf.rank; ++i)
        out.push_back(scaled(snf.Vinv.row(i), snf.D.at(i, i)));
    return out;
}

IntMat saturation(const IntMat& s) {
    SmithDecomposition snf = smith_normal_form(s);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < snf.rank; ++i) rows.push_back(snf.Vinv.row(i));
    return IntMat::from_rows(rows, s.cols());
}

QuotientStructure quotient_invariants(std::size_t ambient_rank,
                                      const IntMat& numerator_gens,
                                      const IntMat& denominator_gens) {
    if (numerator_gens.cols() != ambient_rank || denominator_gens.cols() != ambient_rank)
        throw DimensionError("quotient_invariants: generator width != ambient rank");
    std::vector<Vec> basis = row_basis(numerator_gens);
    const std::size_t r = basis.size();
    IntMat bt(ambient_rank, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < ambient_rank; ++i) bt.at(i, j) = basis[j][i];
    SmithDecomposition bt_snf = smith_normal_form(bt);

    IntMat coeffs(denominator_gens.rows(), r);
    for (std::size_t k = 0; k < denominator_gens.rows(); ++k) {
        auto c = solve_integral(bt_snf, denominator_gens.row(k));
        if (!c) {
            std::ostringstream os;
            os << "quotient_invariants: denominator generator " << k
               << " is not in the numerator span: "
               << IntMat::from_rows({denominator_gens.row(k)}, ambient_rank).to_string();
            throw std::invalid_argument(os.str());
        }
        for (std::size_t j = 0; j < r; ++j) coeffs.at(k, j) = (*c)[j];
    }

    SmithDecomposition q = smith_normal_form(coeffs);
    QuotientStructure out;
    for (std::size_t i = 0; i < q.rank; ++i)
        if (q.D.at(i, i) > 1) out.torsion.invariant_factors.push_back(q.D.at(i, i));
    out.free_rank = r - q.rank;
    return out;
}

bool is_primitive_vector(const Vec& v) {
    if (is_zero_vec(v)) throw std::invalid_argument("is_primitive_vector: zero vector");
    return gcd_vec(v) == 1;
}

bool is_primitive_vector(const Vec& v, const IntMat& basis) {
    if (is_zero_vec(v)) throw std::invalid_argument("is_primitive_vector: zero vector");
    auto c = row_span_coefficients(basis, v);
    if (!c) throw std::invalid_argument("is_primitive_vector: vector not in the sublattice");
    return gcd_vec(*c) == 1;
}

std::optional<Vec> row_span_coefficients(const IntMat& gens, const Vec& v) {
    return solve_integral(gens.transposed(), v);
}

bool in_row_span(const IntMat& gens, const Vec& v) {
    return row_span_coefficients(gens, v).has_value();
}

std::vector<Vec> lattice_intersection(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.cols()) throw DimensionError("lattice_intersection: ambient mismatch");
    const std::size_t n = a.cols(), ra = a.rows(), rb = b.rows();
    // Columns (u, w) with u^T A = w^T B; the intersection is the set of u^T A.
    IntMat m(n, ra + rb);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < ra; ++k) m.at(i, k) = a.at(k, i);
        for (std::size_t k = 0; k < rb; ++k) m.at(i, ra + k) = -b.at(k, i);
    }
    std::vector<Vec> gens;
    for (const Vec& uw : kernel_saturated(m)) {
        Vec u(uw.begin(), uw.begin() + static_cast<std::ptrdiff_t>(ra));
        gens.push_back(a.apply_left(u));
    }
    if (gens.empty()) return {};
    return row_basis(IntMat::from_rows(gens, n));
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    // Bareiss fraction-free elimination.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

}  // namespace brq
