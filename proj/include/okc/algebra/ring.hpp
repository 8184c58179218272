#pragma once

#include "okc/algebra/bigint.hpp"
#include "okc/algebra/matrix.hpp"
#include "okc/algebra/monomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace okc {

using Terms = std::map<Monomial, BigInt>;
using TermList = std::vector<std::pair<Monomial, BigInt>>;

struct Variable {
    std::string name;
    int weight = 0;
    /// x^k = 0 for k >= nil_index. Unset means x is not nilpotent.
    std::optional<int> nil_index;
    /// Laurent variables may carry negative exponents.
    bool laurent = false;

    bool operator==(const Variable&) const = default;
};

/// Relation lattice of one graded piece: the piece's monomials in
/// descending order and an echelon basis (positive pivots, increasing pivot
/// columns) of the relations among them.
struct DegreeLattice {
    std::vector<Monomial> columns;
    IntMatrix echelon;

    bool operator==(const DegreeLattice&) const = default;
};

/// Presentation of a commutative graded ring as a quotient of
/// Z[x_1..x_n] (with some variables possibly inverted).
///
/// Normal forms are maintained by three rules:
///  - nilpotency: a term with x^k, k >= nil_index, vanishes;
///  - degree floor: a term of weighted degree below `min_degree` vanishes;
///  - lattice reduction: in a graded piece with a DegreeLattice, the
///    coefficient vector is reduced by the echelon rows so that each pivot
///    coordinate lands in [0, pivot). This picks the unique Hermite
///    representative of the class, with or without torsion.
/// No Groebner machinery: every supported quotient is either nilpotent
/// bounded or presented degreewise by integer linear algebra.
class RingDescriptor {
public:
    struct Options {
        std::vector<TermList> relations;
        std::map<long, DegreeLattice> lattices;
        std::optional<long> min_degree;
    };

    explicit RingDescriptor(std::vector<Variable> vars);
    RingDescriptor(std::vector<Variable> vars, Options opts);

    std::size_t num_vars() const noexcept { return vars_.size(); }
    const std::vector<Variable>& vars() const noexcept { return vars_; }
    const Variable& var(std::size_t i) const { return vars_.at(i); }
    std::span<const int> weights() const noexcept { return weights_; }
    int index_of(std::string_view name) const;
    std::optional<int> find(std::string_view name) const;

    const std::vector<TermList>& relations() const noexcept { return opts_.relations; }
    const std::map<long, DegreeLattice>& lattices() const noexcept { return opts_.lattices; }
    bool has_lattices() const noexcept { return !opts_.lattices.empty(); }
    std::optional<long> min_degree() const noexcept { return opts_.min_degree; }

    /// Whether x_v is nilpotent in this ring.
    bool is_nilpotent(int v) const;

    /// Add c * m into `out`, dropping it if it vanishes by nilpotency or
    /// the degree floor. Lattice reduction is left to `reduce_lattices`.
    void accumulate(Terms& out, const Monomial& m, const BigInt& c) const;

    /// Bring the graded pieces that carry a DegreeLattice to Hermite form.
    void reduce_lattices(Terms& terms) const;

    std::string monomial_str(const Monomial& m) const;

    bool operator==(const RingDescriptor& other) const;

private:
    bool vanishes(const Monomial& m) const;
    void validate() const;

    std::vector<Variable> vars_;
    std::vector<int> weights_;
    Options opts_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

Ring make_ring(std::vector<Variable> vars);
Ring make_ring(std::vector<Variable> vars, RingDescriptor::Options opts);

/// Z with no variables.
Ring integer_ring();

/// Rings are compared structurally; identical handles short-circuit.
bool same_ring(const Ring& a, const Ring& b);

}  // namespace okc
