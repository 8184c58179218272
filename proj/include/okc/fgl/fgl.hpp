#pragma once

#include "okc/fgl/series.hpp"

#include <map>
#include <utility>
#include <vector>

namespace okc {

/// Rank one commutative formal group law
///   F(u, v) = u + v + sum_{i,j >= 1} a_ij u^i v^j
/// over a coefficient ring, with the coefficient table kept for i + j <= N + 1
/// and series arithmetic truncated at total degree N.
///
/// The unit law F(u, 0) = u is structural (no (i, 0) entries exist).
/// Commutativity is enforced at construction. Associativity is a property
/// of the coefficients, checked by verify_associativity.
class FormalGroupLaw {
public:
    using Table = std::map<std::pair<int, int>, SparsePoly>;

    /// `coeffs` must be a full symmetric table: every (i, j) entry needs an
    /// equal (j, i) entry. Throws std::invalid_argument otherwise.
    FormalGroupLaw(Ring ring, int trunc, Table coeffs);

    /// Build from the entries with i <= j; the mirror image is filled in.
    static FormalGroupLaw from_upper(Ring ring, int trunc, const Table& upper);

    const Ring& ring() const noexcept { return ring_; }
    int trunc() const noexcept { return trunc_; }
    const Table& coefficients() const noexcept { return coeffs_; }
    /// a_ij (zero when absent).
    SparsePoly coefficient(int i, int j) const;

private:
    Ring ring_;
    int trunc_;
    Table coeffs_;
};

/// Z[beta] with beta in cohomological degree -1.
Ring beta_coefficient_ring();

/// u + v - beta*u*v over Z[beta].
FormalGroupLaw fgl_multiplicative(int trunc);
/// u + v over Z.
FormalGroupLaw fgl_additive(int trunc);

/// F(s, t). Both series need zero constant term and matching variables,
/// coefficient ring and truncation (at most N + 1).
TruncSeries formal_sum(const FormalGroupLaw& f, const TruncSeries& s, const TruncSeries& t);

/// The inverse series iota(u) with F(u, iota(u)) = 0, solved degree by degree.
TruncSeries formal_inverse(const FormalGroupLaw& f);

/// [n]_F u in one variable "u"; negative n goes through the formal inverse.
TruncSeries n_series(const FormalGroupLaw& f, int n);

/// [n_1]u_1 +_F ... +_F [n_r]u_r in variables u1..ur (or "u" when r = 1).
TruncSeries multi_sum(const FormalGroupLaw& f, const std::vector<int>& multiplicities);

/// Subset I of {0..r-1}, sorted ascending (0-based; displayed 1-based).
using IndexSet = std::vector<int>;

/// The unique decomposition S = sum_{I != {}} G_I * u_I in which each G_I
/// only involves the variables indexed by I.
struct SupportDecomposition {
    std::map<IndexSet, TruncSeries> parts;

    /// sum_I G_I * u_I, truncated like the decomposed series.
    TruncSeries reconstruct(const Ring& ring, const std::vector<std::string>& names, int trunc) const;
};

/// Group terms by exact variable support and divide by u_I.
/// Throws std::invalid_argument when S has a nonzero constant term.
SupportDecomposition support_decompose(const TruncSeries& s);

struct AssociativityReport {
    /// Nonzero coefficients of F(F(u,v),w) - F(u,F(v,w)) up to degree N + 1,
    /// keyed by exponents of (u, v, w).
    std::vector<std::pair<Monomial, SparsePoly>> defects;
    bool pass() const noexcept { return defects.empty(); }
};

AssociativityReport verify_associativity(const FormalGroupLaw& f);

/// Human-readable "{1,2}" for an index set.
std::string index_set_str(const IndexSet& s);

}  // namespace okc
