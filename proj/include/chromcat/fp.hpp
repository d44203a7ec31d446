#ifndef CHROMCAT_FP_HPP
#define CHROMCAT_FP_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromcat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input that lies outside the supported class of groups or rings.
class UnsupportedInput : public Error {
public:
    using Error::Error;
};

/// Group closure grew past the configured order cap.
class OrderCapExceeded : public Error {
public:
    using Error::Error;
};

inline bool is_prime(long long n)
{
    if (n < 2) {
        return false;
    }
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline int mod_p(long long a, int p)
{
    const long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

inline int inv_mod(int a, int p)
{
    a = mod_p(a, p);
    if (a == 0) {
        throw Error("inv_mod: zero has no inverse");
    }
    // Fermat; p is small.
    long long result = 1;
    long long base = a;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(result);
}

inline std::size_t ipow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

/// Coordinates of `index` in base p, least significant digit first.
inline std::vector<int> digits(std::size_t index, int p, std::size_t length)
{
    std::vector<int> out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out[i] = static_cast<int>(index % static_cast<std::size_t>(p));
        index /= static_cast<std::size_t>(p);
    }
    return out;
}

inline std::size_t from_digits(std::span<const int> coords, int p)
{
    std::size_t index = 0;
    for (std::size_t i = coords.size(); i-- > 0;) {
        index = index * static_cast<std::size_t>(p) + static_cast<std::size_t>(coords[i]);
    }
    return index;
}

/// Dense matrix over the prime field F_p. Entries are kept in [0, p).
class FpMatrix {
public:
    FpMatrix() = default;

    FpMatrix(int p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0)
    {
        if (!is_prime(p)) {
            throw Error("FpMatrix: modulus " + std::to_string(p) + " is not prime");
        }
    }

    static FpMatrix identity(int p, std::size_t n)
    {
        FpMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, i, 1);
        }
        return m;
    }

    static FpMatrix from_rows(int p, const std::vector<std::vector<int>>& rows)
    {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        FpMatrix m(p, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) {
                throw Error("FpMatrix::from_rows: ragged rows");
            }
            for (std::size_t j = 0; j < c; ++j) {
                m.set(i, j, rows[i][j]);
            }
        }
        return m;
    }

    static FpMatrix from_columns(int p, std::size_t rows, const std::vector<std::vector<int>>& cols)
    {
        FpMatrix m(p, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) {
                throw Error("FpMatrix::from_columns: column length mismatch");
            }
            for (std::size_t i = 0; i < rows; ++i) {
                m.set(i, j, cols[j][i]);
            }
        }
        return m;
    }

    int prime() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long value) { data_[r * cols_ + c] = mod_p(value, p_); }

    std::vector<int> column(std::size_t c) const
    {
        std::vector<int> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            out[r] = (*this)(r, c);
        }
        return out;
    }

    FpMatrix operator*(const FpMatrix& rhs) const
    {
        if (cols_ != rhs.rows_ || p_ != rhs.p_) {
            throw Error("FpMatrix: dimension or modulus mismatch in product");
        }
        FpMatrix out(p_, rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                long long acc = 0;
                for (std::size_t k = 0; k < cols_; ++k) {
                    acc += static_cast<long long>((*this)(i, k)) * rhs(k, j);
                }
                out.set(i, j, acc);
            }
        }
        return out;
    }

    std::vector<int> apply(std::span<const int> v) const
    {
        if (v.size() != cols_) {
            throw Error("FpMatrix::apply: vector length mismatch");
        }
        std::vector<int> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            long long acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                acc += static_cast<long long>((*this)(i, k)) * v[k];
            }
            out[i] = mod_p(acc, p_);
        }
        return out;
    }

    FpMatrix transpose() const
    {
        FpMatrix out(p_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out.set(j, i, (*this)(i, j));
            }
        }
        return out;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> row_reduce()
    {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && (*this)(sel, col) == 0) {
                ++sel;
            }
            if (sel == rows_) {
                continue;
            }
            swap_rows(sel, row);
            const int inv = inv_mod((*this)(row, col), p_);
            for (std::size_t j = 0; j < cols_; ++j) {
                set(row, j, static_cast<long long>((*this)(row, j)) * inv);
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, col) == 0) {
                    continue;
                }
                const int factor = (*this)(i, col);
                for (std::size_t j = 0; j < cols_; ++j) {
                    set(i, j, (*this)(i, j) - static_cast<long long>(factor) * (*this)(row, j));
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const
    {
        FpMatrix copy = *this;
        return copy.row_reduce().size();
    }

    std::optional<FpMatrix> inverse() const
    {
        if (rows_ != cols_) {
            return std::nullopt;
        }
        const std::size_t n = rows_;
        FpMatrix aug(p_, n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                aug.set(i, j, (*this)(i, j));
            }
            aug.set(i, n + i, 1);
        }
        const auto pivots = aug.row_reduce();
        if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
            return std::nullopt;
        }
        FpMatrix out(p_, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out.set(i, j, aug(i, n + j));
            }
        }
        return out;
    }

    /// Basis of the right kernel {v : M v = 0}, one vector per free column,
    /// in increasing free-column order.
    std::vector<std::vector<int>> kernel_basis() const
    {
        FpMatrix red = *this;
        const auto pivots = red.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) {
            is_pivot[c] = true;
        }
        std::vector<std::vector<int>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) {
                continue;
            }
            std::vector<int> v(cols_, 0);
            v[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                v[pivots[r]] = mod_p(-static_cast<long long>(red(r, free)), p_);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    bool is_identity() const { return rows_ == cols_ && *this == identity(p_, rows_); }

    std::string to_string() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < cols_; ++j) {
                os << (j ? "," : "") << (*this)(i, j);
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

    std::vector<std::vector<int>> to_rows() const
    {
        std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out[i][j] = (*this)(i, j);
            }
        }
        return out;
    }

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
    friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;

private:
    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
        }
    }

    int p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> data_;
};

/// Multiplicative order of an invertible square matrix.
inline std::size_t matrix_order(const FpMatrix& m)
{
    const FpMatrix id = FpMatrix::identity(m.prime(), m.rows());
    FpMatrix power = m;
    std::size_t k = 1;
    while (power != id) {
        power = power * m;
        if (++k > 1'000'000) {
            throw Error("matrix_order: matrix is not invertible");
        }
    }
    return k;
}

/// All k-dimensional subspaces of F_p^dim, each given by the rows of its
/// reduced row echelon basis. Order: pivot sets lexicographically, then
/// free entries in base-p counting order.
inline std::vector<std::vector<std::vector<int>>> subspaces_of_dimension(int p, std::size_t dim, std::size_t k)
{
    std::vector<std::vector<std::vector<int>>> out;
    if (k > dim) {
        return out;
    }
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) {
        pivots[i] = i;
    }
    while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        std::vector<bool> is_pivot(dim, false);
        for (auto c : pivots) {
            is_pivot[c] = true;
        }
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = pivots[r] + 1; c < dim; ++c) {
                if (!is_pivot[c]) {
                    free_slots.emplace_back(r, c);
                }
            }
        }
        const std::size_t fillings = ipow(static_cast<std::size_t>(p), free_slots.size());
        for (std::size_t f = 0; f < fillings; ++f) {
            const auto values = digits(f, p, free_slots.size());
            std::vector<std::vector<int>> basis(k, std::vector<int>(dim, 0));
            for (std::size_t r = 0; r < k; ++r) {
                basis[r][pivots[r]] = 1;
            }
            for (std::size_t s = 0; s < free_slots.size(); ++s) {
                basis[free_slots[s].first][free_slots[s].second] = values[s];
            }
            out.push_back(std::move(basis));
        }
        // next combination of pivot columns
        std::size_t i = k;
        while (i > 0 && pivots[i - 1] == dim - k + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pivots[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
    return out;
}

} // namespace chromcat

#endif // CHROMCAT_FP_HPP
