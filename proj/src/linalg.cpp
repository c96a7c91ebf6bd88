#include "mqt/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace mqt {

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    a->require_same(*b);
}

}  // namespace

Vector::Vector(FieldPtr field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) {
        throw std::invalid_argument("vector requires a field");
    }
    if (coeffs_.empty()) {
        throw std::invalid_argument("vector dimension must be >= 1");
    }
    for (uint32_t c : coeffs_) {
        if (c >= field_->order()) {
            throw std::invalid_argument("vector coefficient out of range for " +
                                        field_->to_string());
        }
    }
}

Vector Vector::zero(FieldPtr field, size_t dim) {
    return Vector(std::move(field), std::vector<uint32_t>(dim, 0));
}

Vector Vector::unit(FieldPtr field, size_t dim, size_t i) {
    std::vector<uint32_t> c(dim, 0);
    c.at(i) = 1;
    return Vector(std::move(field), std::move(c));
}

bool Vector::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

Vector Vector::operator+(const Vector& other) const {
    require_same_field(field_, other.field_);
    if (dim() != other.dim()) {
        throw MismatchError("vector dimension mismatch: " + std::to_string(dim()) + " vs " +
                            std::to_string(other.dim()));
    }
    std::vector<uint32_t> out(dim());
    for (size_t i = 0; i < dim(); ++i) {
        out[i] = field_->add(coeffs_[i], other.coeffs_[i]);
    }
    return Vector(field_, std::move(out));
}

Vector Vector::operator-(const Vector& other) const {
    return *this + other.scaled(field_->neg(1));
}

Vector Vector::scaled(uint32_t c) const {
    std::vector<uint32_t> out(dim());
    for (size_t i = 0; i < dim(); ++i) {
        out[i] = field_->mul(coeffs_[i], c);
    }
    return Vector(field_, std::move(out));
}

uint32_t Vector::dot(const Vector& other) const {
    require_same_field(field_, other.field_);
    if (dim() != other.dim()) {
        throw MismatchError("vector dimension mismatch in pairing");
    }
    uint32_t acc = 0;
    for (size_t i = 0; i < dim(); ++i) {
        acc = field_->add(acc, field_->mul(coeffs_[i], other.coeffs_[i]));
    }
    return acc;
}

bool Vector::operator==(const Vector& other) const {
    return field_->same(*other.field_) && coeffs_ == other.coeffs_;
}

std::string Vector::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < dim(); ++i) {
        out << (i ? "," : "") << field_->format_element(coeffs_[i]);
    }
    out << "]";
    return out.str();
}

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols, std::vector<uint32_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (!field_) {
        throw std::invalid_argument("matrix requires a field");
    }
    if (cols_ == 0) {
        throw std::invalid_argument("matrix must have at least one column");
    }
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("matrix entry count does not match its shape");
    }
    for (uint32_t c : entries_) {
        if (c >= field_->order()) {
            throw std::invalid_argument("matrix entry out of range for " + field_->to_string());
        }
    }
}

Matrix Matrix::zero(FieldPtr field, size_t rows, size_t cols) {
    return Matrix(std::move(field), rows, cols, std::vector<uint32_t>(rows * cols, 0));
}

Matrix Matrix::identity(FieldPtr field, size_t d) {
    Matrix m = zero(std::move(field), d, d);
    for (size_t i = 0; i < d; ++i) {
        m.set(i, i, 1);
    }
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, size_t cols, std::span<const Vector> rows) {
    std::vector<uint32_t> entries;
    entries.reserve(rows.size() * cols);
    for (const Vector& r : rows) {
        require_same_field(field, r.field());
        if (r.dim() != cols) {
            throw MismatchError("row dimension mismatch building matrix");
        }
        entries.insert(entries.end(), r.coeffs().begin(), r.coeffs().end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

uint32_t Matrix::at(size_t r, size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    return entries_[r * cols_ + c];
}

void Matrix::set(size_t r, size_t c, uint32_t v) {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    if (v >= field_->order()) {
        throw std::invalid_argument("matrix entry out of range for " + field_->to_string());
    }
    entries_[r * cols_ + c] = v;
}

Vector Matrix::row(size_t r) const {
    if (r >= rows_) {
        throw std::out_of_range("matrix row out of range");
    }
    return Vector(field_, std::vector<uint32_t>(entries_.begin() + r * cols_,
                                                entries_.begin() + (r + 1) * cols_));
}

Matrix Matrix::transpose() const {
    Matrix out = zero(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            out.set(c, r, at(r, c));
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_->same(*other.field_) && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t r = 0; r < rows_; ++r) {
        out << (r ? "," : "") << row(r).to_string();
    }
    out << "]";
    return out.str();
}

RrefResult rref(const Matrix& m) {
    const FieldPtr& f = m.field();
    Matrix r = m;
    size_t pivot_row = 0;
    for (size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        size_t found = r.rows();
        for (size_t i = pivot_row; i < r.rows(); ++i) {
            if (r.at(i, col) != 0) {
                found = i;
                break;
            }
        }
        if (found == r.rows()) {
            continue;
        }
        if (found != pivot_row) {
            for (size_t c = 0; c < r.cols(); ++c) {
                uint32_t tmp = r.at(pivot_row, c);
                r.set(pivot_row, c, r.at(found, c));
                r.set(found, c, tmp);
            }
        }
        uint32_t scale = f->inv(r.at(pivot_row, col));
        for (size_t c = 0; c < r.cols(); ++c) {
            r.set(pivot_row, c, f->mul(r.at(pivot_row, c), scale));
        }
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col) == 0) {
                continue;
            }
            uint32_t factor = r.at(i, col);
            for (size_t c = 0; c < r.cols(); ++c) {
                uint32_t sub = f->mul(factor, r.at(pivot_row, c));
                r.set(i, c, f->sub(r.at(i, c), sub));
            }
        }
        ++pivot_row;
    }
    return {std::move(r), pivot_row};
}

size_t rank(const Matrix& m) {
    return rref(m).rank;
}

std::optional<Matrix> invert(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("only square matrices can be inverted");
    }
    const size_t d = m.rows();
    Matrix aug = Matrix::zero(m.field(), d, 2 * d);
    for (size_t r = 0; r < d; ++r) {
        for (size_t c = 0; c < d; ++c) {
            aug.set(r, c, m.at(r, c));
        }
        aug.set(r, d + r, 1);
    }
    RrefResult reduced = rref(aug);
    // Invertible iff the left block reduced to the identity.
    Matrix out = Matrix::zero(m.field(), d, d);
    for (size_t r = 0; r < d; ++r) {
        for (size_t c = 0; c < d; ++c) {
            if (reduced.matrix.at(r, c) != (r == c ? 1u : 0u)) {
                return std::nullopt;
            }
            out.set(r, c, reduced.matrix.at(r, d + c));
        }
    }
    return out;
}

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {}

Subspace Subspace::span(FieldPtr field, size_t ambient_dim, std::span<const Vector> vectors) {
    Matrix stacked = Matrix::from_rows(field, ambient_dim, vectors);
    RrefResult reduced = rref(stacked);
    Matrix canonical = Matrix::zero(field, reduced.rank, ambient_dim);
    for (size_t r = 0; r < reduced.rank; ++r) {
        for (size_t c = 0; c < ambient_dim; ++c) {
            canonical.set(r, c, reduced.matrix.at(r, c));
        }
    }
    return Subspace(std::move(canonical));
}

Subspace Subspace::zero(FieldPtr field, size_t ambient_dim) {
    return span(std::move(field), ambient_dim, {});
}

Subspace Subspace::full(FieldPtr field, size_t ambient_dim) {
    std::vector<Vector> units;
    units.reserve(ambient_dim);
    for (size_t i = 0; i < ambient_dim; ++i) {
        units.push_back(Vector::unit(field, ambient_dim, i));
    }
    return span(std::move(field), ambient_dim, units);
}

bool Subspace::contains(const Vector& v) const {
    field()->require_same(*v.field());
    if (v.dim() != ambient_dim()) {
        throw MismatchError("vector dimension does not match the subspace ambient dimension");
    }
    // Eliminate against the RREF rows; membership iff the residual vanishes.
    Vector residual = v;
    for (size_t r = 0; r < basis_.rows(); ++r) {
        size_t pivot = 0;
        while (pivot < ambient_dim() && basis_.at(r, pivot) == 0) {
            ++pivot;
        }
        uint32_t coeff = residual[pivot];
        if (coeff != 0) {
            residual = residual - basis_.row(r).scaled(coeff);
        }
    }
    return residual.is_zero();
}

bool Subspace::operator==(const Subspace& other) const {
    return basis_ == other.basis_;
}

std::vector<Vector> Subspace::enumerate() const {
    const FieldPtr& f = field();
    const uint32_t q = f->order();
    std::vector<Vector> out;
    std::vector<uint32_t> combo(rank(), 0);
    while (true) {
        Vector v = Vector::zero(f, ambient_dim());
        for (size_t r = 0; r < rank(); ++r) {
            if (combo[r] != 0) {
                v = v + basis_.row(r).scaled(combo[r]);
            }
        }
        out.push_back(std::move(v));
        size_t k = 0;
        while (k < combo.size() && combo[k] == q - 1) {
            combo[k++] = 0;
        }
        if (k == combo.size()) {
            break;
        }
        ++combo[k];
    }
    return out;
}

Subspace kernel(const Matrix& m) {
    RrefResult reduced = rref(m);
    const FieldPtr& f = m.field();
    // Pivot columns of the RREF, in row order.
    std::vector<size_t> pivots;
    for (size_t r = 0; r < reduced.rank; ++r) {
        size_t c = 0;
        while (c < m.cols() && reduced.matrix.at(r, c) == 0) {
            ++c;
        }
        pivots.push_back(c);
    }
    std::vector<Vector> basis_vectors;
    for (size_t freec = 0; freec < m.cols(); ++freec) {
        if (std::find(pivots.begin(), pivots.end(), freec) != pivots.end()) {
            continue;
        }
        std::vector<uint32_t> v(m.cols(), 0);
        v[freec] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = f->neg(reduced.matrix.at(r, freec));
        }
        basis_vectors.emplace_back(f, std::move(v));
    }
    return Subspace::span(f, m.cols(), basis_vectors);
}

Matrix dual_basis(const Matrix& basis) {
    if (basis.rows() != basis.cols()) {
        throw std::invalid_argument("a basis matrix must be square");
    }
    std::optional<Matrix> inv = invert(basis);
    if (!inv) {
        throw SingularError("rows do not form a basis (matrix is singular)");
    }
    return inv->transpose();
}

Vector apply(const Matrix& m, const Vector& v) {
    require_same_field(m.field(), v.field());
    if (m.cols() != v.dim()) {
        throw MismatchError("matrix-vector shape mismatch: " + std::to_string(m.cols()) +
                            " columns vs dimension " + std::to_string(v.dim()));
    }
    const FieldPtr& f = m.field();
    std::vector<uint32_t> out(m.rows(), 0);
    for (size_t r = 0; r < m.rows(); ++r) {
        uint32_t acc = 0;
        for (size_t c = 0; c < m.cols(); ++c) {
            acc = f->add(acc, f->mul(m.at(r, c), v[c]));
        }
        out[r] = acc;
    }
    return Vector(f, std::move(out));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) {
        throw MismatchError("matrix-matrix shape mismatch");
    }
    const FieldPtr& f = a.field();
    Matrix out = Matrix::zero(f, a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < b.cols(); ++c) {
            uint32_t acc = 0;
            for (size_t k = 0; k < a.cols(); ++k) {
                acc = f->add(acc, f->mul(a.at(r, k), b.at(k, c)));
            }
            out.set(r, c, acc);
        }
    }
    return out;
}

Vector tensor(const Vector& u, const Vector& v) {
    require_same_field(u.field(), v.field());
    const FieldPtr& f = u.field();
    std::vector<uint32_t> out(u.dim() * v.dim());
    for (size_t i = 0; i < u.dim(); ++i) {
        for (size_t j = 0; j < v.dim(); ++j) {
            out[i * v.dim() + j] = f->mul(u[i], v[j]);
        }
    }
    return Vector(f, std::move(out));
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    const FieldPtr& f = a.field();
    Matrix out = Matrix::zero(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (size_t j1 = 0; j1 < a.cols(); ++j1) {
            for (size_t i2 = 0; i2 < b.rows(); ++i2) {
                for (size_t j2 = 0; j2 < b.cols(); ++j2) {
                    out.set(i1 * b.rows() + i2, j1 * b.cols() + j2,
                            f->mul(a.at(i1, j1), b.at(i2, j2)));
                }
            }
        }
    }
    return out;
}

Vector swap_pair_factors(const Vector& v, size_t d1, size_t d2) {
    if (v.dim() != d1 * d2) {
        throw MismatchError("vector dimension does not match the factor split");
    }
    std::vector<uint32_t> out(v.dim());
    for (size_t i = 0; i < d1; ++i) {
        for (size_t j = 0; j < d2; ++j) {
            out[j * d1 + i] = v[i * d2 + j];
        }
    }
    return Vector(v.field(), std::move(out));
}

}  // namespace mqt
