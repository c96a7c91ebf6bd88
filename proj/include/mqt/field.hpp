#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mqt/errors.hpp"

namespace mqt {

/// Largest field order constructible by default. Everything downstream relies
/// on exhaustive enumeration, so the bound documents the tested envelope
/// rather than a hard algorithmic limit.
inline constexpr uint32_t kDefaultMaxFieldOrder = 256;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field GF(p^n) with exact table-driven arithmetic.
///
/// Elements are canonical indices in [0, order()). Index i denotes the
/// residue with coefficient tuple (c_0, ..., c_{n-1}), constant term first,
/// where i = sum c_k p^k. This makes 0 the additive identity, 1 the
/// multiplicative identity, and ascending index the canonical element order
/// used by every enumeration in the library.
class Field {
  public:
    /// Builds GF(p^n). `modulus` is the reduction polynomial as an ascending
    /// coefficient tuple of length n+1 (monic); it may be empty for n == 1,
    /// or for n > 1 when a built-in polynomial exists for (p, n). Primality
    /// of p and irreducibility of the modulus are verified exhaustively.
    static FieldPtr create(uint32_t p, uint32_t n = 1, std::vector<uint32_t> modulus = {},
                           uint32_t max_order = kDefaultMaxFieldOrder);

    /// Parses "GF(q)", "GF(p^n)", optionally followed by ";poly=[c0,...,cn]".
    /// Plain orders must be prime powers: "GF(4)" means GF(2^2).
    static FieldPtr parse(std::string_view text, uint32_t max_order = kDefaultMaxFieldOrder);

    /// The two-element field, shared instance.
    static const FieldPtr& gf2();

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return n_; }
    uint32_t order() const { return q_; }

    /// Reduction polynomial, ascending coefficients, length degree()+1.
    /// For prime fields this is the trivial {0, 1} (i.e. x).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t add(uint32_t a, uint32_t b) const { return add_[check(a) * q_ + check(b)]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[check(a) * q_ + check(b)]; }
    uint32_t neg(uint32_t a) const { return neg_[check(a)]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    /// Multiplicative inverse; rejects zero.
    uint32_t inv(uint32_t a) const;

    /// Exponentiation by repeated squaring; pow(0, 0) == 1 by convention.
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// Coefficient tuple of an element, constant term first, length degree().
    std::vector<uint32_t> coeffs(uint32_t a) const;
    uint32_t from_coeffs(std::span<const uint32_t> c) const;

    /// Canonical text form: decimal for prime fields, polynomial string
    /// ("x+1", "2x^2+1") for extensions. parse_element() also accepts a
    /// coefficient tuple "[c0,c1,...]". Formatting and parsing round-trip.
    std::string format_element(uint32_t a) const;
    uint32_t parse_element(std::string_view text) const;

    /// Canonical spec string, e.g. "GF(4)"; a non-default reduction
    /// polynomial is appended as ";poly=[...]".
    std::string to_string() const;

    /// Structural equality of field specs (p, n, modulus).
    bool same(const Field& other) const;
    void require_same(const Field& other) const;

  private:
    Field(uint32_t p, uint32_t n, std::vector<uint32_t> modulus);

    uint32_t check(uint32_t a) const;

    uint32_t p_, n_, q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> add_, mul_;  // q x q tables
    std::vector<uint32_t> neg_, inv_;  // per-element tables; inv_[0] unused
};

/// A scalar bound to its field. Arithmetic between elements of different
/// field specs throws MismatchError rather than coercing.
class FieldElement {
  public:
    FieldElement(FieldPtr field, uint32_t index);

    static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
    static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }

    const FieldPtr& field() const { return field_; }
    uint32_t index() const { return index_; }
    bool is_zero() const { return index_ == 0; }

    FieldElement inverse() const { return {field_, field_->inv(index_)}; }
    FieldElement pow(uint64_t e) const { return {field_, field_->pow(index_, e)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return {field_, field_->neg(index_)}; }

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    std::string to_string() const { return field_->format_element(index_); }

  private:
    FieldPtr field_;
    uint32_t index_;
};

/// All q elements exactly once, in canonical order: 0, 1, then the remaining
/// elements by ascending index (representative-lexicographic).
std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

}  // namespace mqt
