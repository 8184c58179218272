#pragma once

#include "okc/model/proj.hpp"

#include <string>
#include <vector>

namespace okc {

/// Complete intersection of hypersurfaces of the given multidegrees.
class CompleteIntersection {
public:
    /// Throws std::invalid_argument for more hypersurfaces than the ambient
    /// dimension, or a multidegree that is negative, zero or of the wrong
    /// length.
    CompleteIntersection(MultiProj ambient, std::vector<std::vector<long>> degrees);

    const MultiProj& ambient() const noexcept { return ambient_; }
    const std::vector<std::vector<long>>& degrees() const noexcept { return degrees_; }
    std::size_t codim() const noexcept { return degrees_.size(); }
    int dim() const noexcept { return ambient_.dim() - static_cast<int>(degrees_.size()); }

    /// prod_j (1 - [O(-b_j)])
    KClass structure_sheaf() const;

    std::string str() const;

private:
    MultiProj ambient_;
    std::vector<std::vector<long>> degrees_;
};

/// (dim X, [O_X])
ConnectiveClass fundamental_class_CK(const CompleteIntersection& x);
/// beta^level * value: inverting beta.
BMClass theta_times(const ConnectiveClass& t);
/// The associated graded image: setting beta = 0.
ChowClass theta_plus(const ConnectiveClass& t);
/// prod_j (sum_i b_ji h_i), computed in the Chow ring only.
ChowClass chow_oracle(const CompleteIntersection& x);

struct FundamentalTriangleReport {
    ConnectiveClass ck;
    BMClass g;
    ChowClass ch;
    /// beta^{dim} [O_X]
    BMClass expected_g;
    ChowClass oracle;
    bool pass = false;
};

FundamentalTriangleReport verify_fundamental_triangle(const CompleteIntersection& x);

struct PullbackReport {
    /// f^*[X]_CK at the level of the pulled-back intersection.
    ConnectiveClass pulled;
    /// [Y]_CK of the pulled-back intersection Y.
    ConnectiveClass expected;
    bool pass = false;
};

/// X on the projection's target, pulled back to its source.
PullbackReport lci_pullback_check(const Projection& f, const CompleteIntersection& x);
/// X on the embedding's ambient space, restricted to the linear subspace.
/// Throws std::domain_error when the restriction is not transverse: more
/// hypersurfaces than the subspace's dimension, or a pulled-back class that
/// does not lie in F_{dim Y}.
PullbackReport lci_pullback_check(const LinearEmbedding& e, const CompleteIntersection& x);

struct TorFormulaReport {
    /// i^* i_* lambda on the subspace, and the normal-bundle formula
    /// (1 - [L^{-1}])|_H * lambda.
    KClass restricted, formula;
    /// Both sides pushed back into the ambient space.
    KClass pushed_restricted, pushed_formula;
    bool pass = false;
};

/// kappa = i_* lambda on the ambient space. Recovers lambda and checks
/// i^* i_* = multiplication by the class of the normal bundle's Koszul
/// complex. Throws std::domain_error when kappa is not supported on the
/// subspace.
TorFormulaReport tor_formula_check(const LinearEmbedding& e, const KClass& kappa);

}  // namespace okc
