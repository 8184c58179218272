#pragma once

#include "okc/algebra/ring.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace okc {

/// Element of a RingDescriptor ring, always held in normal form.
class SparsePoly {
public:
    explicit SparsePoly(Ring ring);

    static SparsePoly constant(Ring ring, const BigInt& c);
    static SparsePoly monomial(Ring ring, const Monomial& m, const BigInt& c = 1);
    static SparsePoly variable(Ring ring, std::string_view name, int exp = 1);
    static SparsePoly from_terms(Ring ring, const TermList& terms);

    const Ring& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coeff(const Monomial& m) const;
    BigInt constant_term() const { return coeff(Monomial{}); }

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& q);
    SparsePoly& operator-=(const SparsePoly& q);
    SparsePoly& operator*=(const SparsePoly& q);
    SparsePoly& operator*=(const BigInt& c);
    friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
    friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
    friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);
    friend SparsePoly operator*(SparsePoly p, const BigInt& c) { return p *= c; }
    friend SparsePoly operator*(const BigInt& c, SparsePoly p) { return p *= c; }

    SparsePoly pow(unsigned k) const;

    /// Terms satisfying `keep`, re-normalized.
    SparsePoly filter(const std::function<bool(const Monomial&)>& keep) const;

    /// Re-express in another ring, mapping each variable index through
    /// `var_map` (var_map[i] = index in the target ring) and normalizing.
    SparsePoly transport(Ring target, std::span<const int> var_map) const;

    /// Reduce the stored terms again. Normal forms are idempotent so this
    /// returns an equal polynomial; exposed for testing.
    SparsePoly reduce() const;

    /// Human-readable form, ascending in monomial order, e.g. "1 + x - 2*x^2".
    std::string str() const;

    bool operator==(const SparsePoly& other) const;

private:
    void settle() { if (ring_->has_lattices()) ring_->reduce_lattices(terms_); }
    Ring ring_;
    Terms terms_;
};

SparsePoly poly_add(const SparsePoly& p, const SparsePoly& q);
SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q);

/// Inverse of a unit of the form +-1 + (nilpotent part).
/// Throws std::domain_error when the constant term is not +-1 or a
/// non-nilpotent variable occurs.
SparsePoly poly_invert_unit(const SparsePoly& p);

/// Throws std::invalid_argument unless both polynomials share a ring.
void require_same_ring(const SparsePoly& p, const SparsePoly& q, const char* op);

}  // namespace okc
