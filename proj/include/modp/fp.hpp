#pragma once

// Exact linear algebra over the prime field F_p.
//
// Residues are machine integers reduced eagerly after every operation. All
// types are immutable-by-value friendly and safe to share across threads.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace modp {

bool is_prime(std::uint64_t n) noexcept;

// Least prime strictly greater than n.
std::uint64_t next_prime_after(std::uint64_t n);

class Prime {
public:
    // Throws DomainError unless value is prime.
    explicit Prime(std::uint32_t value);

    std::uint32_t value() const noexcept { return value_; }

    friend bool operator==(Prime, Prime) = default;

private:
    std::uint32_t value_;
};

class FpScalar {
public:
    FpScalar(std::int64_t value, Prime p);

    std::uint32_t residue() const noexcept { return residue_; }
    Prime modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return residue_ == 0; }

    FpScalar operator+(FpScalar rhs) const;
    FpScalar operator-(FpScalar rhs) const;
    FpScalar operator*(FpScalar rhs) const;
    FpScalar operator-() const;

    friend bool operator==(FpScalar, FpScalar) = default;

private:
    FpScalar(std::uint32_t residue, Prime p, int) noexcept : residue_(residue), p_(p) {}
    void require_same_modulus(FpScalar rhs) const;

    std::uint32_t residue_;
    Prime p_;
};

// Multiplicative inverse; throws DomainError on zero.
FpScalar scalar_inverse(FpScalar a);

class FpVector {
public:
    // Zero vector of length n.
    FpVector(Prime p, std::size_t n);
    // Coordinates are reduced mod p (negative values allowed).
    FpVector(Prime p, std::vector<std::int64_t> coords);
    FpVector(Prime p, std::initializer_list<std::int64_t> coords);

    static FpVector unit(Prime p, std::size_t n, std::size_t i);

    Prime modulus() const noexcept { return p_; }
    std::size_t size() const noexcept { return coords_.size(); }
    std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
    FpScalar at(std::size_t i) const;
    void set(std::size_t i, std::int64_t value);
    std::span<const std::uint32_t> coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;

    FpVector operator+(const FpVector & rhs) const;
    FpVector operator*(FpScalar c) const;

    // Index of the first nonzero coordinate, or size() for the zero vector.
    std::size_t leading_index() const noexcept;

    std::string to_string() const;

    friend bool operator==(const FpVector &, const FpVector &) = default;
    // Lexicographic on coordinates (first coordinate most significant).
    friend std::strong_ordering operator<=>(const FpVector & a, const FpVector & b);

private:
    void require_compatible(const FpVector & rhs) const;

    Prime p_;
    std::vector<std::uint32_t> coords_;
};

std::ostream & operator<<(std::ostream & os, const FpVector & v);

// 0-based indices of the nonzero coordinates, increasing.
std::vector<std::size_t> support(const FpVector & v);

class FpMatrix {
public:
    FpMatrix(Prime p, std::size_t rows, std::size_t cols);

    // n x m matrix whose columns are the given vectors. An empty span yields
    // an n x 0 matrix.
    static FpMatrix from_columns(Prime p, std::size_t n, std::span<const FpVector> columns);
    static FpMatrix from_rows(Prime p, const std::vector<std::vector<std::int64_t>> & rows);
    static FpMatrix identity(Prime p, std::size_t n);

    Prime modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t value);

    FpMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t row, FpScalar c);
    // row[target] += c * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, FpScalar c);

    friend bool operator==(const FpMatrix &, const FpMatrix &) = default;

private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

// Rank by Gaussian elimination (first nonzero pivot in column order).
std::size_t rank(const FpMatrix & m);

// Throws ShapeError for a non-square matrix. The 0x0 determinant is 1.
FpScalar determinant(const FpMatrix & m);

} // namespace modp
