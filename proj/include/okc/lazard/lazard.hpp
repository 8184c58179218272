#pragma once

#include "okc/algebra/poly.hpp"
#include "okc/fgl/fgl.hpp"

#include <map>
#include <utility>
#include <vector>

namespace okc {

/// One graded piece of the truncated Lazard ring. Degrees are stored
/// cohomologically (deg a_ij = 1 - i - j, so the pieces live in degrees
/// 0, -1, ..., -N); `homological()` gives the opposite grading.
struct LazardDegree {
    int degree = 0;
    /// Every monomial in the a_ij of this degree, ascending.
    std::vector<Monomial> monomials;
    /// Number of relation rows (generator times monomial) spanning the
    /// degree's piece of the relation ideal.
    std::size_t relation_rows = 0;
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
    /// Elements of the free ring whose classes form a Z-basis of the piece.
    /// These are single monomials (the earliest ones that work) when such a
    /// selection exists; otherwise integer combinations of monomials.
    std::vector<SparsePoly> basis;
    bool monomial_basis = false;
    /// to_basis(j, k): coordinate k, on `basis`, of the class of monomials[j].
    IntMatrix to_basis;

    int homological() const noexcept { return -degree; }
};

/// Z[a_ij] modulo the associativity relations, truncated below degree -N.
///
/// Elements are SparsePoly values over `ring()`. Each graded piece is kept
/// in Hermite normal form against its relation lattice (monomials in
/// descending order, so relations eliminate the largest monomials first),
/// and everything of degree < -N is zero. Monomial bases do not exist in
/// general (in degree -3 the only relation is 3*a13 = 2*a22 - 2*a11*a12),
/// so the normal form is a canonical representative rather than an
/// expansion on a basis; `coordinates` gives the expansion.
class LazardRing {
public:
    int trunc() const noexcept { return trunc_; }
    /// Z[a_ij : 1 <= i <= j, i + j <= N + 1] without relations.
    const Ring& free_ring() const noexcept { return free_ring_; }
    /// The quotient ring, in normal form.
    const Ring& ring() const noexcept { return ring_; }
    /// Indexed by homological degree n = 0..N.
    const std::vector<LazardDegree>& degrees() const noexcept { return degrees_; }
    /// Nonzero coefficients of F(F(u,v),w) - F(u,F(v,w)) for the
    /// universal law, over the free ring.
    const std::vector<SparsePoly>& relation_generators() const noexcept { return relations_; }

    /// Variable index of a_ij (symmetric in i, j).
    int generator_index(int i, int j) const;
    /// a_ij in the quotient ring.
    SparsePoly generator(int i, int j) const;

    /// Normal form in the quotient of an element of the free ring.
    SparsePoly normal_form(const SparsePoly& x) const;

    /// Coordinates on degrees()[n].basis of the homological-degree-n part
    /// of x (free or quotient ring).
    std::vector<BigInt> coordinates(const SparsePoly& x, int n) const;

    /// The universal law with coefficients in the quotient ring.
    FormalGroupLaw universal_law() const;

    friend LazardRing lazard_truncation(int trunc);

private:
    int trunc_ = 0;
    Ring free_ring_, ring_;
    std::vector<LazardDegree> degrees_;
    std::vector<SparsePoly> relations_;
    std::map<std::pair<int, int>, int> gen_index_;
};

/// Z[a_ij] with grading 1 - i - j and a_ij = a_ji identified.
Ring lazard_free_ring(int trunc);

/// The universal law over the free ring Z[a_ij]; associativity is not
/// imposed.
FormalGroupLaw universal_fgl(int trunc);

/// Degreewise Z-module structure of the truncated Lazard ring.
/// Throws std::invalid_argument for trunc < 1.
LazardRing lazard_truncation(int trunc);

/// Ring map out of the Lazard ring, given by the images of the a_ij.
class RingMap {
public:
    const Ring& target() const noexcept { return target_; }
    int trunc() const noexcept { return trunc_; }
    /// Image of a_ij.
    SparsePoly image(int i, int j) const;

    friend RingMap classifying_map(const FormalGroupLaw& f, const LazardRing& l);
    friend RingMap ring_map_from_images(const LazardRing& l, Ring target, std::map<std::pair<int, int>, SparsePoly> images);
    friend SparsePoly apply_map(const RingMap& m, const SparsePoly& x);

private:
    int trunc_ = 0;
    Ring free_ring_, quotient_ring_, target_;
    /// images_[v] is the image of free-ring variable v.
    std::vector<SparsePoly> images_;
    std::map<std::pair<int, int>, int> gen_index_;
};

/// The map sending a_ij to the coefficient of u^i v^j of `f`. Throws
/// std::invalid_argument on a grading mismatch or a law with a shorter
/// table, and std::domain_error when some associativity relation is not
/// killed (the target law is not associative).
RingMap classifying_map(const FormalGroupLaw& f, const LazardRing& l);

/// Arbitrary generator images, validated like classifying_map.
RingMap ring_map_from_images(const LazardRing& l, Ring target, std::map<std::pair<int, int>, SparsePoly> images);

/// Image of an element of the free or quotient Lazard ring.
SparsePoly apply_map(const RingMap& m, const SparsePoly& x);
/// Coefficientwise image of a series.
TruncSeries apply_map(const RingMap& m, const TruncSeries& s);

}  // namespace okc
