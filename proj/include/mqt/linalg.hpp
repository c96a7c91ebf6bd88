#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mqt/field.hpp"

namespace mqt {

/// Dense exact vector over a finite field. Coefficients are canonical element
/// indices of the owning field; all arithmetic is exact.
class Vector {
  public:
    Vector(FieldPtr field, std::vector<uint32_t> coeffs);
    static Vector zero(FieldPtr field, size_t dim);
    static Vector unit(FieldPtr field, size_t dim, size_t i);

    const FieldPtr& field() const { return field_; }
    size_t dim() const { return coeffs_.size(); }
    uint32_t operator[](size_t i) const { return coeffs_.at(i); }
    std::span<const uint32_t> coeffs() const { return coeffs_; }

    bool is_zero() const;

    Vector operator+(const Vector& other) const;
    Vector operator-(const Vector& other) const;
    Vector scaled(uint32_t c) const;

    /// Plain bilinear pairing sum_i a_i b_i. This is functional application
    /// (row against column), not an inner product; the theory has none.
    uint32_t dot(const Vector& other) const;

    bool operator==(const Vector& other) const;
    bool operator!=(const Vector& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    FieldPtr field_;
    std::vector<uint32_t> coeffs_;
};

/// Dense exact matrix, row-major. Rows may be zero (for subspace bases).
class Matrix {
  public:
    Matrix(FieldPtr field, size_t rows, size_t cols, std::vector<uint32_t> entries);
    static Matrix zero(FieldPtr field, size_t rows, size_t cols);
    static Matrix identity(FieldPtr field, size_t d);
    static Matrix from_rows(FieldPtr field, size_t cols, std::span<const Vector> rows);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t at(size_t r, size_t c) const;
    void set(size_t r, size_t c, uint32_t v);
    Vector row(size_t r) const;

    Matrix transpose() const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<uint32_t> entries_;
};

struct RrefResult {
    Matrix matrix;
    size_t rank;
};

/// Exact Gauss-Jordan reduction; input is untouched.
RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

/// Exact inverse, or nullopt when singular. Singularity is a value-level
/// signal because callers (evolution validation, basis checks) branch on it.
/// Non-square input is an error.
std::optional<Matrix> invert(const Matrix& m);

/// Canonical subspace of GF(q)^d: the reduced row echelon form of any
/// spanning set, with zero rows dropped. Two subspaces are equal iff their
/// canonical bases are identical.
class Subspace {
  public:
    static Subspace span(FieldPtr field, size_t ambient_dim, std::span<const Vector> vectors);
    static Subspace zero(FieldPtr field, size_t ambient_dim);
    static Subspace full(FieldPtr field, size_t ambient_dim);

    const FieldPtr& field() const { return basis_.field(); }
    size_t ambient_dim() const { return basis_.cols(); }
    size_t rank() const { return basis_.rows(); }

    /// rank() x ambient_dim() matrix in exact RREF with no zero rows.
    const Matrix& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    /// Every vector in the subspace (q^rank of them), canonical order.
    std::vector<Vector> enumerate() const;

  private:
    explicit Subspace(Matrix basis);
    Matrix basis_;
};

/// Null space of m, as a canonical subspace of the domain.
Subspace kernel(const Matrix& m);

/// For a basis given as d row vectors, the d dual functionals <a_i| with
/// <a_i|b_j> = delta_ij, i.e. the inverse transpose. Throws SingularError
/// when the rows are not a basis. Applying it twice returns the input.
Matrix dual_basis(const Matrix& basis);

Vector apply(const Matrix& m, const Vector& v);
Matrix multiply(const Matrix& a, const Matrix& b);

/// Tensor products in left-factor-major order: component (i, j) of u (x) v
/// sits at flat index i * dim(v) + j, and likewise blockwise for matrices.
Vector tensor(const Vector& u, const Vector& v);
Matrix tensor(const Matrix& a, const Matrix& b);

/// Swaps the two factors of a d1 x d2 flattened vector: (i, j) -> (j, i).
Vector swap_pair_factors(const Vector& v, size_t d1, size_t d2);

}  // namespace mqt
