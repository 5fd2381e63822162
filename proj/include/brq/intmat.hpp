#ifndef BRQ_INTMAT_HPP
#define BRQ_INTMAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace brq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense integer matrix, row-major, arbitrary precision.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMat(std::initializer_list<std::initializer_list<long long>> init);

    static IntMat identity(std::size_t n);
    static IntMat zero(std::size_t rows, std::size_t cols) { return IntMat(rows, cols); }
    static IntMat from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    std::vector<Vec> row_list() const;

    IntMat transposed() const;
    IntMat operator*(const IntMat& rhs) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat operator-(const IntMat& rhs) const;
    IntMat scaled(const Int& c) const;
    bool operator==(const IntMat& rhs) const = default;

    Vec apply(const Vec& v) const;       // M * v
    Vec apply_left(const Vec& v) const;  // v^T * M, returned as a vector

    bool is_symmetric() const;
    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

Int dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
Vec negated(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Int& c);
Int gcd_vec(const Vec& v);

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace brq

#endif
