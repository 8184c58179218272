#pragma once

#include "okc/fgl/fgl.hpp"
#include "okc/model/proj.hpp"
#include "okc/util/rng.hpp"

#include <map>
#include <string>
#include <vector>

namespace okc {

struct DivisorComponent {
    /// Entries >= 0, not all zero.
    std::vector<long> multidegree;
    /// >= 1
    long multiplicity = 1;
};

/// D = sum n_i D_i on a multiprojective space, with the D_i in general
/// position: every stratum D_I is a complete intersection of the listed
/// multidegrees.
class SNCConfig {
public:
    /// Throws std::invalid_argument on a non-effective component or a
    /// multidegree of the wrong length. An empty component list is allowed
    /// (the zero divisor).
    SNCConfig(MultiProj ambient, std::vector<DivisorComponent> components);

    const MultiProj& ambient() const noexcept { return ambient_; }
    const std::vector<DivisorComponent>& components() const noexcept { return components_; }
    std::size_t size() const noexcept { return components_.size(); }

    /// Non-fatal remarks, e.g. more components than the ambient dimension
    /// (the deepest strata are then empty).
    std::vector<std::string> warnings() const;

    /// The same divisor with component i's multiplicity lowered by one
    /// (dropped when it reaches zero).
    SNCConfig lowered(std::size_t i) const;
    /// Components reordered: position k holds old component order[k].
    SNCConfig permuted(const std::vector<std::size_t>& order) const;

    std::string str() const;

private:
    MultiProj ambient_;
    std::vector<DivisorComponent> components_;
};

/// [O_D] = 1 - prod_i [O(-n_i a_i)]
KClass structure_sheaf_class(const SNCConfig& d);
/// [O_{D_I}] = prod_{i in I} (1 - [O(-a_i)]); I is 0-based.
KClass stratum_class(const SNCConfig& d, const IndexSet& subset);

/// Truncation used when a verification builds its own law:
/// max((sum n_i) * (max |a_i|_1) + 1, d).
int divisor_truncation(const SNCConfig& d);

struct DivisorClassResult {
    /// Keyed by 0-based index sets; subsets whose contribution vanishes are
    /// kept so reports list every stratum.
    std::map<IndexSet, BMClass> contributions;
    BMClass total;
    /// beta^{d-1} [O_D]
    BMClass expected;
    bool verified = false;
};

/// Sum over nonempty I of G_I(c~_1(O(a_i)) : i in I) applied to
/// beta^{d-|I|} [O_{D_I}], in the ambient BM realization. The law must have
/// coefficients in Z or Z[beta]. Throws std::domain_error when its
/// truncation is below the ambient dimension (terms of G_I that survive the
/// nilpotency bound would be missing) and std::invalid_argument for other
/// coefficient rings.
DivisorClassResult divisor_class(const SNCConfig& d, const FormalGroupLaw& f);

/// divisor_class with the multiplicative law against beta^{d-1} [O_D].
DivisorClassResult verify_divclass(const SNCConfig& d);

struct RecursionReport {
    std::size_t component = 0;
    BMClass lhs, rhs;
    bool pass = false;
};

/// [D] = [D'] + beta^{d-1}[O_{D_r}] - beta c~_1(O(a_r))([D']) where D' lowers
/// the multiplicity of the last component, all for the multiplicative law.
/// Throws std::invalid_argument for the zero divisor.
RecursionReport verify_recursion(const SNCConfig& d);

struct ChowDivisorReport {
    /// gr_{d-1} of [O_D]
    ChowClass from_k_theory;
    /// sum n_i [D_i] computed directly in the Chow ring
    ChowClass cycle;
    /// gr_{d-1} of the divisor class built from the additive law
    ChowClass additive_shadow;
    bool pass = false;
};

ChowDivisorReport chow_divisor_check(const SNCConfig& d);

/// Bounds for random configurations.
struct SNCFamily {
    int max_factors = 3;
    int max_dim = 4;
    int max_components = 4;
    long max_multiplicity = 3;
    long max_degree_entry = 2;
};

/// Draws a config uniformly-per-field from the family: s, then each d_i
/// (redrawn until d >= 1), r, and for each component a nonzero
/// multidegree (redrawn if zero) and a multiplicity.
SNCConfig random_snc_config(SeededRng& rng, const SNCFamily& family = {});

}  // namespace okc
