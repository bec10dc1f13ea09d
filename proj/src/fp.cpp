#include <modp/errors.hpp>
#include <modp/fp.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace modp {

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t p) noexcept
{
    auto r = value % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept
{
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t inverse_residue(std::uint32_t a, std::uint32_t p) noexcept
{
    // Extended Euclid on (a, p); p is prime and a != 0.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        auto q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t, p);
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t next_prime_after(std::uint64_t n)
{
    if (n == std::numeric_limits<std::uint64_t>::max())
        throw DomainError("next_prime_after: overflow");
    auto candidate = n + 1;
    while (! is_prime(candidate))
        ++candidate;
    return candidate;
}

Prime::Prime(std::uint32_t value) : value_(value)
{
    if (! is_prime(value))
        throw DomainError("modulus " + std::to_string(value) + " is not prime");
}

FpScalar::FpScalar(std::int64_t value, Prime p) : residue_(reduce(value, p.value())), p_(p) {}

void FpScalar::require_same_modulus(FpScalar rhs) const
{
    if (p_ != rhs.p_)
        throw ShapeError("scalar moduli differ");
}

FpScalar FpScalar::operator+(FpScalar rhs) const
{
    require_same_modulus(rhs);
    auto s = residue_ + rhs.residue_;
    if (s >= p_.value())
        s -= p_.value();
    return {s, p_, 0};
}

FpScalar FpScalar::operator-(FpScalar rhs) const
{
    return *this + (-rhs);
}

FpScalar FpScalar::operator*(FpScalar rhs) const
{
    require_same_modulus(rhs);
    return {mul_mod(residue_, rhs.residue_, p_.value()), p_, 0};
}

FpScalar FpScalar::operator-() const
{
    return {residue_ == 0 ? 0 : p_.value() - residue_, p_, 0};
}

FpScalar scalar_inverse(FpScalar a)
{
    if (a.is_zero())
        throw DomainError("scalar_inverse: zero has no inverse");
    auto p = a.modulus();
    return FpScalar{inverse_residue(a.residue(), p.value()), p};
}

FpVector::FpVector(Prime p, std::size_t n) : p_(p), coords_(n, 0) {}

FpVector::FpVector(Prime p, std::vector<std::int64_t> coords) : p_(p), coords_(coords.size())
{
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords_[i] = reduce(coords[i], p.value());
}

FpVector::FpVector(Prime p, std::initializer_list<std::int64_t> coords) :
    FpVector(p, std::vector<std::int64_t>(coords))
{
}

FpVector FpVector::unit(Prime p, std::size_t n, std::size_t i)
{
    if (i >= n)
        throw ShapeError("unit vector index out of range");
    FpVector v{p, n};
    v.coords_[i] = 1;
    return v;
}

FpScalar FpVector::at(std::size_t i) const
{
    return FpScalar{coords_.at(i), p_};
}

void FpVector::set(std::size_t i, std::int64_t value)
{
    coords_.at(i) = reduce(value, p_.value());
}

bool FpVector::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

void FpVector::require_compatible(const FpVector & rhs) const
{
    if (p_ != rhs.p_)
        throw ShapeError("vector moduli differ");
    if (coords_.size() != rhs.coords_.size())
        throw ShapeError("vector lengths differ");
}

FpVector FpVector::operator+(const FpVector & rhs) const
{
    require_compatible(rhs);
    FpVector out{*this};
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        auto s = coords_[i] + rhs.coords_[i];
        out.coords_[i] = s >= p_.value() ? s - p_.value() : s;
    }
    return out;
}

FpVector FpVector::operator*(FpScalar c) const
{
    if (c.modulus() != p_)
        throw ShapeError("scalar and vector moduli differ");
    FpVector out{*this};
    for (auto & x : out.coords_)
        x = mul_mod(x, c.residue(), p_.value());
    return out;
}

std::size_t FpVector::leading_index() const noexcept
{
    auto it = std::find_if(coords_.begin(), coords_.end(), [](auto c) { return c != 0; });
    return static_cast<std::size_t>(it - coords_.begin());
}

std::string FpVector::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::strong_ordering operator<=>(const FpVector & a, const FpVector & b)
{
    if (auto c = a.p_.value() <=> b.p_.value(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(
        a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::ostream & operator<<(std::ostream & os, const FpVector & v)
{
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os << ')';
}

std::vector<std::size_t> support(const FpVector & v)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.push_back(i);
    return out;
}

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols) :
    p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

FpMatrix FpMatrix::from_columns(Prime p, std::size_t n, std::span<const FpVector> columns)
{
    FpMatrix m{p, n, columns.size()};
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const auto & c = columns[j];
        if (c.modulus() != p)
            throw ShapeError("column modulus differs from matrix modulus");
        if (c.size() != n)
            throw ShapeError("column length " + std::to_string(c.size()) + " != " + std::to_string(n));
        for (std::size_t i = 0; i < n; ++i)
            m.data_[i * m.cols_ + j] = c[i];
    }
    return m;
}

FpMatrix FpMatrix::from_rows(Prime p, const std::vector<std::vector<std::int64_t>> & rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FpMatrix m{p, rows.size(), cols};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw ShapeError("ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::identity(Prime p, std::size_t n)
{
    FpMatrix m{p, n, n};
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, std::int64_t value)
{
    if (i >= rows_ || j >= cols_)
        throw ShapeError("matrix index out of range");
    data_[i * cols_ + j] = reduce(value, p_.value());
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t{p_, cols_, rows_};
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

void FpMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a >= rows_ || b >= rows_)
        throw ShapeError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

void FpMatrix::scale_row(std::size_t row, FpScalar c)
{
    if (row >= rows_)
        throw ShapeError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j)
        data_[row * cols_ + j] = mul_mod(data_[row * cols_ + j], c.residue(), p_.value());
}

void FpMatrix::add_row_multiple(std::size_t target, std::size_t source, FpScalar c)
{
    if (target >= rows_ || source >= rows_)
        throw ShapeError("row index out of range");
    auto p = p_.value();
    for (std::size_t j = 0; j < cols_; ++j) {
        auto s = data_[target * cols_ + j] + mul_mod(data_[source * cols_ + j], c.residue(), p);
        data_[target * cols_ + j] = s >= p ? s - p : s;
    }
}

namespace {

// Forward elimination in place. Returns the rank; `sign_flips` counts row
// swaps and `pivots` collects pivot entries in order (for the determinant).
std::size_t eliminate(std::vector<std::uint32_t> & a, std::size_t rows, std::size_t cols, std::uint32_t p,
    std::size_t * sign_flips, std::vector<std::uint32_t> * pivots)
{
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = pivot_row;
        while (found < rows && a[found * cols + col] == 0)
            ++found;
        if (found == rows)
            continue;
        if (found != pivot_row) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[found * cols + j], a[pivot_row * cols + j]);
            if (sign_flips)
                ++*sign_flips;
        }
        auto pivot = a[pivot_row * cols + col];
        if (pivots)
            pivots->push_back(pivot);
        auto inv = inverse_residue(pivot, p);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            auto f = a[i * cols + col];
            if (f == 0)
                continue;
            auto factor = mul_mod(f, inv, p);
            for (std::size_t j = col; j < cols; ++j) {
                auto sub = mul_mod(factor, a[pivot_row * cols + j], p);
                auto v = a[i * cols + j];
                a[i * cols + j] = v >= sub ? v - sub : v + p - sub;
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace

std::size_t rank(const FpMatrix & m)
{
    std::vector<std::uint32_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i * m.cols() + j] = m(i, j);
    return eliminate(a, m.rows(), m.cols(), m.modulus().value(), nullptr, nullptr);
}

FpScalar determinant(const FpMatrix & m)
{
    if (m.rows() != m.cols())
        throw ShapeError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
            std::to_string(m.cols()) + " matrix");
    auto p = m.modulus();
    std::size_t n = m.rows();
    std::vector<std::uint32_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = m(i, j);
    std::size_t flips = 0;
    std::vector<std::uint32_t> pivots;
    if (eliminate(a, n, n, p.value(), &flips, &pivots) < n)
        return FpScalar{0, p};
    FpScalar det{flips % 2 ? -1 : 1, p};
    for (auto piv : pivots)
        det = det * FpScalar{piv, p};
    return det;
}

} // namespace modp
