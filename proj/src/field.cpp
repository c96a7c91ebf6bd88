#include "mqt/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace mqt {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) {
        return false;
    }
    for (uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

// Polynomials over GF(p) as ascending coefficient vectors, reduced mod p.
using Poly = std::vector<uint32_t>;

size_t poly_degree(const Poly& a) {
    size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) {
        --d;
    }
    return d == 0 ? 0 : d - 1;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return out;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
    size_t md = poly_degree(m);
    while (!poly_is_zero(a) && poly_degree(a) >= md) {
        size_t ad = poly_degree(a);
        uint32_t lead = a[ad];
        size_t shift = ad - md;
        for (size_t k = 0; k <= md; ++k) {
            uint32_t sub = (lead * m[k]) % p;
            a[k + shift] = (a[k + shift] + p - sub) % p;
        }
    }
    a.resize(md, 0);
    return a;
}

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const Poly& m, uint32_t p) {
    size_t deg = poly_degree(m);
    if (deg < 1) {
        return false;
    }
    for (size_t dd = 1; dd * 2 <= deg; ++dd) {
        uint64_t count = 1;
        for (size_t k = 0; k < dd; ++k) {
            count *= p;
        }
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly div(dd + 1, 0);
            uint64_t v = idx;
            for (size_t k = 0; k < dd; ++k) {
                div[k] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            div[dd] = 1;
            if (poly_is_zero(poly_mod(m, div, p))) {
                return false;
            }
        }
    }
    return true;
}

// Reduction polynomials (Conway) for the prime powers within the default
// order bound. Ascending coefficients, length n+1.
const std::map<std::pair<uint32_t, uint32_t>, Poly>& builtin_moduli() {
    static const std::map<std::pair<uint32_t, uint32_t>, Poly> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 2}, {2, 12, 1}},
    };
    return table;
}

std::string format_poly_suffix(const Poly& m) {
    std::ostringstream out;
    out << ";poly=[";
    for (size_t i = 0; i < m.size(); ++i) {
        out << (i ? "," : "") << m[i];
    }
    out << "]";
    return out.str();
}

std::string strip_space(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

uint64_t parse_uint(std::string_view text, const char* what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        throw ParseError(std::string("expected a nonnegative integer for ") + what + ", got '" +
                         std::string(text) + "'");
    }
    uint64_t v = 0;
    for (char c : text) {
        v = v * 10 + static_cast<uint64_t>(c - '0');
        if (v > UINT32_MAX) {
            throw ParseError(std::string(what) + " out of range: '" + std::string(text) + "'");
        }
    }
    return v;
}

std::vector<uint32_t> parse_int_list(std::string_view body, const char* what) {
    std::vector<uint32_t> out;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                 : comma - pos);
        out.push_back(static_cast<uint32_t>(parse_uint(item, what)));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (out.empty()) {
        throw ParseError(std::string("empty list for ") + what);
    }
    return out;
}

}  // namespace

FieldPtr Field::create(uint32_t p, uint32_t n, std::vector<uint32_t> modulus, uint32_t max_order) {
    if (!is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not prime (order must be a prime power)");
    }
    if (n < 1) {
        throw std::invalid_argument("field extension degree must be >= 1");
    }
    uint64_t q = 1;
    for (uint32_t k = 0; k < n; ++k) {
        q *= p;
        if (q > max_order) {
            throw std::invalid_argument("field order " + std::to_string(p) + "^" +
                                        std::to_string(n) + " exceeds the configured bound " +
                                        std::to_string(max_order));
        }
    }
    if (n == 1) {
        if (!modulus.empty()) {
            throw std::invalid_argument("prime fields take no reduction polynomial");
        }
        modulus = {0, 1};
    } else {
        if (modulus.empty()) {
            auto it = builtin_moduli().find({p, n});
            if (it == builtin_moduli().end()) {
                throw std::invalid_argument("no built-in reduction polynomial for GF(" +
                                            std::to_string(p) + "^" + std::to_string(n) +
                                            "); supply one with poly=[...]");
            }
            modulus = it->second;
        }
        if (modulus.size() != static_cast<size_t>(n) + 1) {
            throw std::invalid_argument("reduction polynomial must have degree " +
                                        std::to_string(n) + " (" + std::to_string(n + 1) +
                                        " coefficients)");
        }
        for (auto& c : modulus) {
            c %= p;
        }
        if (modulus.back() != 1) {
            throw std::invalid_argument("reduction polynomial must be monic");
        }
        if (!poly_irreducible(modulus, p)) {
            throw std::invalid_argument("reduction polynomial is reducible over GF(" +
                                        std::to_string(p) + ")");
        }
    }
    return FieldPtr(new Field(p, n, std::move(modulus)));
}

Field::Field(uint32_t p, uint32_t n, std::vector<uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    uint64_t q = 1;
    for (uint32_t k = 0; k < n; ++k) {
        q *= p;
    }
    q_ = static_cast<uint32_t>(q);

    auto to_poly = [&](uint32_t idx) {
        Poly c(n_, 0);
        for (uint32_t k = 0; k < n_; ++k) {
            c[k] = idx % p_;
            idx /= p_;
        }
        return c;
    };
    auto from_poly = [&](const Poly& c) {
        uint32_t idx = 0;
        for (uint32_t k = n_; k-- > 0;) {
            idx = idx * p_ + (k < c.size() ? c[k] : 0);
        }
        return idx;
    };

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) {
        Poly pa = to_poly(a);
        Poly na(n_);
        for (uint32_t k = 0; k < n_; ++k) {
            na[k] = (p_ - pa[k]) % p_;
        }
        neg_[a] = from_poly(na);
        for (uint32_t b = 0; b < q_; ++b) {
            Poly pb = to_poly(b);
            Poly sum(n_);
            for (uint32_t k = 0; k < n_; ++k) {
                sum[k] = (pa[k] + pb[k]) % p_;
            }
            add_[static_cast<size_t>(a) * q_ + b] = from_poly(sum);
            Poly prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
            mul_[static_cast<size_t>(a) * q_ + b] = from_poly(prod);
        }
    }

    inv_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a) {
        for (uint32_t b = 1; b < q_; ++b) {
            if (mul_[static_cast<size_t>(a) * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
        }
    }
}

uint32_t Field::check(uint32_t a) const {
    if (a >= q_) {
        throw std::invalid_argument("element index " + std::to_string(a) +
                                    " out of range for " + to_string());
    }
    return a;
}

uint32_t Field::inv(uint32_t a) const {
    check(a);
    if (a == 0) {
        throw std::invalid_argument("zero has no multiplicative inverse");
    }
    return inv_[a];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    check(a);
    uint32_t result = 1;
    uint32_t base = a;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<uint32_t> Field::coeffs(uint32_t a) const {
    check(a);
    std::vector<uint32_t> c(n_);
    for (uint32_t k = 0; k < n_; ++k) {
        c[k] = a % p_;
        a /= p_;
    }
    return c;
}

uint32_t Field::from_coeffs(std::span<const uint32_t> c) const {
    if (c.size() > n_) {
        throw ParseError("coefficient tuple longer than the extension degree");
    }
    uint32_t idx = 0;
    for (size_t k = c.size(); k-- > 0;) {
        idx = idx * p_ + c[k] % p_;
    }
    return idx;
}

std::string Field::format_element(uint32_t a) const {
    check(a);
    if (n_ == 1) {
        return std::to_string(a);
    }
    if (a == 0) {
        return "0";
    }
    auto c = coeffs(a);
    std::string out;
    for (uint32_t k = n_; k-- > 0;) {
        if (c[k] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (k == 0) {
            out += std::to_string(c[k]);
        } else {
            if (c[k] != 1) {
                out += std::to_string(c[k]);
            }
            out += "x";
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out;
}

uint32_t Field::parse_element(std::string_view text) const {
    std::string s = strip_space(text);
    if (s.empty()) {
        throw ParseError("empty element text");
    }
    if (s.front() == '[') {
        if (s.back() != ']') {
            throw ParseError("unterminated coefficient tuple '" + s + "'");
        }
        auto list = parse_int_list(std::string_view(s).substr(1, s.size() - 2), "coefficient");
        return from_coeffs(list);
    }
    if (n_ == 1) {
        return static_cast<uint32_t>(parse_uint(s, "element") % p_);
    }
    // Polynomial string: '+'-separated terms of the form c, x, cx, x^k, cx^k.
    uint32_t idx = 0;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t plus = s.find('+', pos);
        std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        if (term.empty()) {
            throw ParseError("malformed polynomial term in '" + s + "'");
        }
        uint32_t coeff = 1;
        uint32_t exp = 0;
        size_t xpos = term.find('x');
        if (xpos == std::string::npos) {
            coeff = static_cast<uint32_t>(parse_uint(term, "coefficient") % p_);
        } else {
            if (xpos > 0) {
                coeff = static_cast<uint32_t>(parse_uint(term.substr(0, xpos), "coefficient") % p_);
            }
            exp = 1;
            if (xpos + 1 < term.size()) {
                if (term[xpos + 1] != '^') {
                    throw ParseError("malformed polynomial term '" + term + "'");
                }
                exp = static_cast<uint32_t>(parse_uint(term.substr(xpos + 2), "exponent"));
            }
        }
        if (exp >= n_) {
            throw ParseError("term degree " + std::to_string(exp) + " not reduced for " +
                             to_string());
        }
        uint32_t unit = 1;  // index of x^exp
        for (uint32_t k = 0; k < exp; ++k) {
            unit *= p_;
        }
        idx = add(idx, mul(coeff % p_, unit));
        if (plus == std::string::npos) {
            break;
        }
        pos = plus + 1;
    }
    return idx;
}

std::string Field::to_string() const {
    std::string out = "GF(" + std::to_string(q_) + ")";
    if (n_ > 1) {
        auto it = builtin_moduli().find({p_, n_});
        if (it == builtin_moduli().end() || it->second != modulus_) {
            out += format_poly_suffix(modulus_);
        }
    }
    return out;
}

bool Field::same(const Field& other) const {
    return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
}

void Field::require_same(const Field& other) const {
    if (!same(other)) {
        throw MismatchError("operands belong to different fields: " + to_string() + " vs " +
                            other.to_string());
    }
}

FieldPtr Field::parse(std::string_view text, uint32_t max_order) {
    std::string s = strip_space(text);
    if (s.size() < 5 || s.compare(0, 3, "GF(") != 0) {
        throw ParseError("field spec must look like GF(q) or GF(p^n), got '" + s + "'");
    }
    size_t close = s.find(')');
    if (close == std::string::npos) {
        throw ParseError("unterminated field spec '" + s + "'");
    }
    std::string inner = s.substr(3, close - 3);
    std::vector<uint32_t> poly;
    std::string suffix = s.substr(close + 1);
    if (!suffix.empty()) {
        const std::string key = ";poly=[";
        if (suffix.compare(0, key.size(), key) != 0 || suffix.back() != ']') {
            throw ParseError("unrecognized field spec suffix '" + suffix + "'");
        }
        poly = parse_int_list(std::string_view(suffix).substr(key.size(),
                                                              suffix.size() - key.size() - 1),
                              "modulus coefficient");
    }

    uint32_t p = 0;
    uint32_t n = 1;
    size_t caret = inner.find('^');
    if (caret != std::string::npos) {
        p = static_cast<uint32_t>(parse_uint(inner.substr(0, caret), "characteristic"));
        n = static_cast<uint32_t>(parse_uint(inner.substr(caret + 1), "degree"));
    } else {
        uint64_t q = parse_uint(inner, "order");
        if (q < 2) {
            throw ParseError("field order must be at least 2");
        }
        uint32_t base = 2;
        while (q % base != 0) {
            ++base;
        }
        uint64_t rest = q;
        n = 0;
        while (rest % base == 0) {
            rest /= base;
            ++n;
        }
        if (rest != 1) {
            throw ParseError("GF(" + std::to_string(q) + "): order is not a prime power");
        }
        p = base;
    }
    return create(p, n, std::move(poly), max_order);
}

const FieldPtr& Field::gf2() {
    static const FieldPtr instance = create(2);
    return instance;
}

FieldElement::FieldElement(FieldPtr field, uint32_t index) : field_(std::move(field)), index_(index) {
    if (!field_) {
        throw std::invalid_argument("element requires a field");
    }
    if (index_ >= field_->order()) {
        throw std::invalid_argument("element index out of range for " + field_->to_string());
    }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.field_->require_same(*b.field_);
    return {a.field_, a.field_->add(a.index_, b.index_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.field_->require_same(*b.field_);
    return {a.field_, a.field_->sub(a.index_, b.index_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.field_->require_same(*b.field_);
    return {a.field_, a.field_->mul(a.index_, b.index_)};
}

bool FieldElement::operator==(const FieldElement& other) const {
    return field_->same(*other.field_) && index_ == other.index_;
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& field) {
    std::vector<FieldElement> out;
    out.reserve(field->order());
    for (uint32_t i = 0; i < field->order(); ++i) {
        out.emplace_back(field, i);
    }
    return out;
}

}  // namespace mqt
