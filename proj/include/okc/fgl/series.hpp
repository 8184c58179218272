#pragma once

#include "okc/algebra/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace okc {

/// Power series in variables u_1..u_r with coefficients in a RingDescriptor
/// ring, truncated at total degree `trunc` (terms of higher u-degree are
/// discarded by every operation). Keys are monomials in the series
/// variables (index i is u_{i+1}); coefficients are never zero.
class TruncSeries {
public:
    TruncSeries(Ring coeff_ring, std::vector<std::string> names, int trunc);

    /// The series u_i (0-based index).
    static TruncSeries variable(Ring coeff_ring, std::vector<std::string> names, int trunc, std::size_t i);
    static TruncSeries constant(Ring coeff_ring, std::vector<std::string> names, int trunc, const SparsePoly& c);

    const Ring& coeff_ring() const noexcept { return ring_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t num_vars() const noexcept { return names_.size(); }
    int trunc() const noexcept { return trunc_; }
    const std::map<Monomial, SparsePoly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool has_zero_constant() const { return !terms_.contains(Monomial{}); }

    SparsePoly coeff(const Monomial& exps) const;
    /// Add c * u^exps (ignored beyond the truncation degree).
    void add_term(const Monomial& exps, const SparsePoly& c);

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    /// Multiply every coefficient by a ring element.
    TruncSeries scaled(const SparsePoly& c) const;
    TruncSeries pow(unsigned k) const;

    /// Re-index variables: variable i becomes index_map[i] in a series with
    /// the given names.
    TruncSeries relabel(std::vector<std::string> names, const std::vector<int>& index_map) const;

    /// Apply a coefficient map into another ring.
    TruncSeries map_coefficients(Ring target, const std::function<SparsePoly(const SparsePoly&)>& f) const;

    /// Same terms with a lower truncation degree.
    TruncSeries truncated(int trunc) const;

    /// e.g. "3*u - 3*beta*u^2 + beta^2*u^3"; compound coefficients are
    /// parenthesized.
    std::string str() const;

    bool operator==(const TruncSeries& o) const;

private:
    void check_compatible(const TruncSeries& o, const char* op) const;

    Ring ring_;
    std::vector<std::string> names_;
    int trunc_;
    std::map<Monomial, SparsePoly> terms_;
};

/// Default series variable names: {"u"} for one variable, else u1..ur.
std::vector<std::string> series_names(std::size_t r);

}  // namespace okc
