#include "brq/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace brq {

std::string Signature::to_string() const {
    std::ostringstream os;
    os << "(" << positive << "," << negative;
    if (null) os << "," << null;
    os << ")";
    return os.str();
}

Lattice::Lattice(std::string name, IntMat gram) : name_(std::move(name)), gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionError("Lattice: Gram matrix not square");
    if (!gram_.is_symmetric())
        throw std::invalid_argument("Lattice '" + name_ + "': Gram matrix not symmetric");
}

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_.at(i, i) % 2 != 0) return false;
    return true;
}

Int Lattice::inner(const Vec& v, const Vec& w) const {
    if (v.size() != rank() || w.size() != rank())
        throw DimensionError("inner: vector length != lattice rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_.at(i, j) * w[j];
    }
    return s;
}

IntMat e8_negative_gram() {
    // Dynkin basis: chain a1-...-a7 with a8 attached to a5; Cartan matrix
    // negated. det = 1, all diagonal entries -2.
    IntMat g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = -2;
    const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
    for (auto [i, j] : edges) {
        g.at(i, j) = 1;
        g.at(j, i) = 1;
    }
    return g;
}

Lattice e8_negative() { return Lattice("-E8", e8_negative_gram()); }

Lattice hyperbolic_h() { return Lattice("H", IntMat{{0, 1}, {1, 0}}); }

Lattice direct_sum(const std::vector<Lattice>& parts, const std::string& name) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.rank();
    IntMat g(n, n);
    std::size_t off = 0;
    std::string autoname;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rank(); ++i)
            for (std::size_t j = 0; j < p.rank(); ++j) g.at(off + i, off + j) = p.gram().at(i, j);
        off += p.rank();
        if (!autoname.empty()) autoname += "+";
        autoname += p.name();
    }
    return Lattice(name.empty() ? autoname : name, std::move(g));
}

Lattice twist(const Lattice& l, const Int& n) {
    if (n < 1) throw std::invalid_argument("twist: factor must be >= 1");
    std::ostringstream os;
    os << l.name() << "(" << n << ")";
    return Lattice(os.str(), l.gram().scaled(n));
}

Signature signature_of_gram(const IntMat& gram) {
    const std::size_t n = gram.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(gram.at(i, j));

    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Symmetric pivot search; if the whole diagonal of the trailing
            // block vanishes, fold in a row with a nonzero off-diagonal entry.
            std::size_t p = k;
            while (p < n && a[p][p] == 0) ++p;
            if (p < n) {
                std::swap(a[k], a[p]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
            } else {
                std::size_t j = k + 1;
                while (j < n && a[k][j] == 0) ++j;
                if (j == n) {
                    ++sig.null;
                    continue;
                }
                for (std::size_t i = 0; i < n; ++i) a[k][i] += a[j][i];
                for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][j];
            }
        }
        const Rat pivot = a[k][k];
        if (pivot > 0)
            ++sig.positive;
        else
            ++sig.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rat c = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= c * a[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[k][i] == 0) continue;
            const Rat c = a[k][i] / pivot;
            for (std::size_t j = k; j < n; ++j) a[j][i] -= c * a[j][k];
        }
    }
    return sig;
}

Signature signature(const Lattice& l) { return signature_of_gram(l.gram()); }

IntMat orthogonal_complement(const Lattice& l, const IntMat& s) {
    if (s.rows() > 0 && s.cols() != l.rank())
        throw DimensionError("orthogonal_complement: generator width != rank");
    // v is orthogonal to all rows of S iff (S*G) v = 0.
    IntMat constraints = s.rows() ? s * l.gram() : IntMat(0, l.rank());
    return IntMat::from_rows(kernel_saturated(constraints), l.rank());
}

FiniteAbelianGroup discriminant_group(const Lattice& l) {
    SmithDecomposition s = smith_normal_form(l.gram());
    if (s.rank != l.rank())
        throw std::invalid_argument("discriminant_group: degenerate form on '" + l.name() + "'");
    FiniteAbelianGroup g;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.D.at(i, i) > 1) g.invariant_factors.push_back(s.D.at(i, i));
    return g;
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

struct NormEnumerator {
    std::size_t n;
    std::vector<Rat> diag;                  // c_i > 0
    std::vector<std::vector<Rat>> upper;    // u_ij for j > i
    std::vector<Vec>& out;

    // Q(x) = sum_i c_i (x_i + sum_{j>i} u_ij x_j)^2; descend i = n-1 .. 0.
    void search(std::size_t level, Vec& x, const Rat& budget) {
        const std::size_t i = level - 1;
        Rat s = 0;
        for (std::size_t j = i + 1; j < n; ++j) s += upper[i][j] * Rat(x[j]);
        const Rat radius2 = budget / diag[i];  // (x_i + s)^2 <= radius2
        if (radius2 < 0) return;

        // With s = p/q and radius2 = a/b, x is admissible iff b(xq+p)^2 <= aq^2,
        // i.e. |xq + p| <= B := isqrt(floor(aq^2/b)); both cuts are exact.
        const Int p = numerator(s), q = denominator(s);
        const Int a = numerator(radius2), b = denominator(radius2);
        const Int bound = boost::multiprecision::sqrt(Int((a * q * q) / b));
        const Int lo = ceil_div(-bound - p, q), hi = floor_div(bound - p, q);

        for (Int t = lo; t <= hi; ++t) {
            x[i] = t;
            const Rat term = diag[i] * (Rat(t) + s) * (Rat(t) + s);
            if (i == 0) {
                if (budget == term) out.push_back(x);
            } else {
                search(i, x, budget - term);
            }
        }
        x[i] = 0;
    }
};

}  // namespace

std::vector<Vec> vectors_of_norm(const Lattice& l, const Int& target, std::size_t limit) {
    const std::size_t n = l.rank();
    Signature sig = signature(l);
    if (sig.null > 0 || (sig.positive > 0 && sig.negative > 0))
        throw std::invalid_argument("vectors_of_norm: lattice '" + l.name() +
                                    "' is not definite; enumeration is not well-founded");
    if (n == 0) return target == 0 ? std::vector<Vec>{Vec{}} : std::vector<Vec>{};

    const bool negative = sig.negative == n;
    Int goal = negative ? Int(-target) : target;
    if (goal < 0) return {};
    if (goal == 0) return {Vec(n)};

    // Exact rational Cholesky of the (positive) form.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int g = l.gram().at(i, j);
            a[i][j] = Rat(negative ? -g : g);
        }
    std::vector<Rat> diag(n);
    std::vector<std::vector<Rat>> upper(n, std::vector<Rat>(n));
    for (std::size_t k = 0; k < n; ++k) {
        diag[k] = a[k][k];
        for (std::size_t j = k + 1; j < n; ++j) upper[k][j] = a[k][j] / diag[k];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                a[i][j] -= a[k][i] * a[k][j] / diag[k];
                a[j][i] = a[i][j];
            }
    }

    std::vector<Vec> out;
    NormEnumerator en{n, std::move(diag), std::move(upper), out};
    Vec x(n);
    en.search(n, x, Rat(goal));

    std::sort(out.begin(), out.end(), lex_less);
    if (limit && out.size() > limit) out.resize(limit);
    return out;
}

}  // namespace brq
