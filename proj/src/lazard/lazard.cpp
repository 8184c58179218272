#include "okc/lazard/lazard.hpp"

#include "okc/algebra/matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace okc {

namespace {

std::string generator_name(int i, int j) {
    if (i < 10 && j < 10) return "a" + std::to_string(i) + std::to_string(j);
    return "a" + std::to_string(i) + "_" + std::to_string(j);
}

// Generators ordered by (i + j, i).
std::vector<std::pair<int, int>> generator_pairs(int trunc) {
    std::vector<std::pair<int, int>> out;
    for (int s = 2; s <= trunc + 1; ++s)
        for (int i = 1; 2 * i <= s; ++i) out.emplace_back(i, s - i);
    return out;
}

std::map<std::pair<int, int>, int> generator_indices(int trunc) {
    std::map<std::pair<int, int>, int> idx;
    int k = 0;
    for (auto p : generator_pairs(trunc)) idx[p] = k++;
    return idx;
}

// All monomials of homological degree n in generators of the given
// (positive) homological degrees.
std::vector<Monomial> monomials_of_degree(const std::vector<int>& gen_degrees, int n) {
    std::vector<Monomial> out;
    std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t g, int remaining, Monomial acc) {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        if (g == gen_degrees.size()) return;
        for (int e = 0; e * gen_degrees[g] <= remaining; ++e) {
            rec(g + 1, remaining - e * gen_degrees[g], acc * Monomial::var(static_cast<int>(g), e));
        }
    };
    rec(0, n, Monomial{});
    std::sort(out.begin(), out.end());
    return out;
}

SparsePoly substitute(const SparsePoly& x, const std::vector<SparsePoly>& images, const Ring& target) {
    SparsePoly out(target);
    std::map<std::pair<int, int>, SparsePoly> powers;
    for (const auto& [m, c] : x.terms()) {
        SparsePoly term = SparsePoly::constant(target, c);
        for (const auto& [v, e] : m.factors()) {
            auto key = std::pair{v, e};
            auto it = powers.find(key);
            if (it == powers.end()) {
                it = powers.emplace(key, images.at(static_cast<std::size_t>(v)).pow(static_cast<unsigned>(e))).first;
            }
            term *= it->second;
        }
        out += term;
    }
    return out;
}

}  // namespace

Ring lazard_free_ring(int trunc) {
    if (trunc < 1) throw std::invalid_argument("Lazard ring: truncation must be >= 1");
    std::vector<Variable> vars;
    for (auto [i, j] : generator_pairs(trunc)) vars.push_back({generator_name(i, j), 1 - i - j, std::nullopt, false});
    return make_ring(std::move(vars));
}

FormalGroupLaw universal_fgl(int trunc) {
    Ring r = lazard_free_ring(trunc);
    FormalGroupLaw::Table upper;
    for (auto [i, j] : generator_pairs(trunc)) upper.emplace(std::pair{i, j}, SparsePoly::variable(r, generator_name(i, j)));
    return FormalGroupLaw::from_upper(r, trunc, upper);
}

int LazardRing::generator_index(int i, int j) const {
    auto it = gen_index_.find({std::min(i, j), std::max(i, j)});
    if (it == gen_index_.end()) throw std::out_of_range("Lazard ring: no generator a_" + std::to_string(i) + std::to_string(j));
    return it->second;
}

SparsePoly LazardRing::generator(int i, int j) const {
    return SparsePoly::monomial(ring_, Monomial::var(generator_index(i, j)));
}

SparsePoly LazardRing::normal_form(const SparsePoly& x) const {
    if (!same_ring(x.ring(), free_ring_) && !same_ring(x.ring(), ring_)) {
        throw std::invalid_argument("Lazard normal_form: element not over this Lazard ring");
    }
    std::vector<int> identity(free_ring_->num_vars());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    return x.transport(ring_, identity);
}

FormalGroupLaw LazardRing::universal_law() const {
    FormalGroupLaw::Table upper;
    for (const auto& [ij, v] : gen_index_) upper.emplace(ij, SparsePoly::monomial(ring_, Monomial::var(v)));
    return FormalGroupLaw::from_upper(ring_, trunc_, upper);
}

std::vector<BigInt> LazardRing::coordinates(const SparsePoly& x, int n) const {
    if (n < 0 || n > trunc_) throw std::out_of_range("Lazard coordinates: degree out of range");
    if (!same_ring(x.ring(), free_ring_) && !same_ring(x.ring(), ring_)) {
        throw std::invalid_argument("Lazard coordinates: element not over this Lazard ring");
    }
    const LazardDegree& d = degrees_[static_cast<std::size_t>(n)];
    std::vector<BigInt> out(d.rank);
    for (const auto& [m, c] : x.terms()) {
        if (m.weighted_degree(free_ring_->weights()) != -n) continue;
        auto pos = std::lower_bound(d.monomials.begin(), d.monomials.end(), m);
        const auto j = static_cast<std::size_t>(pos - d.monomials.begin());
        for (std::size_t k = 0; k < d.rank; ++k) out[k] += c * d.to_basis(j, k);
    }
    return out;
}

LazardRing lazard_truncation(int trunc) {
    LazardRing L;
    L.trunc_ = trunc;
    L.free_ring_ = lazard_free_ring(trunc);
    L.gen_index_ = generator_indices(trunc);

    FormalGroupLaw universal = universal_fgl(trunc);
    for (const auto& [m, c] : verify_associativity(universal).defects) L.relations_.push_back(c);

    std::vector<int> gen_degrees;
    for (const auto& v : L.free_ring_->vars()) gen_degrees.push_back(-v.weight);

    std::vector<std::vector<Monomial>> monos(static_cast<std::size_t>(trunc) + 1);
    for (int n = 0; n <= trunc; ++n) monos[static_cast<std::size_t>(n)] = monomials_of_degree(gen_degrees, n);

    RingDescriptor::Options opts;
    opts.min_degree = -trunc;
    for (int n = 0; n <= trunc; ++n) {
        const auto& ms = monos[static_cast<std::size_t>(n)];
        // Lattice columns run in descending order: column k is ms[m - 1 - k].
        const std::size_t m = ms.size();
        std::map<Monomial, std::size_t> col;
        for (std::size_t k = 0; k < m; ++k) col[ms[m - 1 - k]] = k;

        std::vector<std::vector<BigInt>> rows;
        for (const auto& g : L.relations_) {
            const int gdeg = -static_cast<int>(g.terms().begin()->first.weighted_degree(L.free_ring_->weights()));
            if (gdeg > n) continue;
            for (const auto& mu : monos[static_cast<std::size_t>(n - gdeg)]) {
                std::vector<BigInt> row(m);
                for (const auto& [mono, c] : g.terms()) row[col.at(mono * mu)] += c;
                rows.push_back(std::move(row));
            }
        }

        LazardDegree deg;
        deg.degree = -n;
        deg.monomials = ms;
        deg.relation_rows = rows.size();

        // Ascending-order rows for the quotient description, so that the
        // greedy representative choice prefers small monomials.
        std::vector<std::vector<BigInt>> asc = rows;
        for (auto& r : asc) std::reverse(r.begin(), r.end());
        QuotientBasis q = quotient_basis(asc, m);
        if (!q.torsion.empty()) {
            // The Lazard ring is torsion free; reaching this is a bug.
            throw std::runtime_error("Lazard ring: unexpected torsion in degree -" + std::to_string(n));
        }
        deg.rank = q.free_rank;
        deg.monomial_basis = q.representatives.size() == q.free_rank;
        if (deg.monomial_basis) {
            for (std::size_t r : q.representatives) deg.basis.push_back(SparsePoly::monomial(L.free_ring_, ms[r]));
            deg.to_basis = express_in_representatives(q);
        } else {
            for (std::size_t k = 0; k < q.free_rank; ++k) {
                TermList t;
                for (std::size_t j = 0; j < m; ++j)
                    if (q.free_basis(k, j) != 0) t.emplace_back(ms[j], q.free_basis(k, j));
                deg.basis.push_back(SparsePoly::from_terms(L.free_ring_, t));
            }
            deg.to_basis = q.coords;
        }

        if (!rows.empty()) {
            std::vector<Monomial> columns(ms.rbegin(), ms.rend());
            opts.lattices.emplace(-n, DegreeLattice{std::move(columns), lattice_basis(rows, m)});
        }
        L.degrees_.push_back(std::move(deg));
    }

    // The quotient's constructor checks every relation reduces to zero.
    for (const auto& g : L.relations_) {
        opts.relations.emplace_back(g.terms().begin(), g.terms().end());
    }
    L.ring_ = make_ring(L.free_ring_->vars(), std::move(opts));
    return L;
}

SparsePoly RingMap::image(int i, int j) const {
    auto it = gen_index_.find({std::min(i, j), std::max(i, j)});
    if (it == gen_index_.end()) throw std::out_of_range("RingMap: no such generator");
    return images_.at(static_cast<std::size_t>(it->second));
}

RingMap ring_map_from_images(const LazardRing& l, Ring target, std::map<std::pair<int, int>, SparsePoly> images) {
    RingMap m;
    m.trunc_ = l.trunc();
    m.free_ring_ = l.free_ring();
    m.quotient_ring_ = l.ring();
    m.target_ = std::move(target);
    m.gen_index_ = generator_indices(l.trunc());
    m.images_.assign(l.free_ring()->num_vars(), SparsePoly(m.target_));
    for (const auto& [ij, v] : m.gen_index_) {
        auto it = images.find(ij);
        SparsePoly img = it == images.end() ? SparsePoly(m.target_) : it->second;
        if (!same_ring(img.ring(), m.target_)) throw std::invalid_argument("classifying map: image not in the target ring");
        const long expected = 1 - ij.first - ij.second;
        for (const auto& [mono, c] : img.terms()) {
            if (mono.weighted_degree(m.target_->weights()) != expected) {
                throw std::invalid_argument("classifying map: grading mismatch for " + generator_name(ij.first, ij.second));
            }
        }
        m.images_[static_cast<std::size_t>(v)] = img;
    }
    for (const auto& g : l.relation_generators()) {
        if (!substitute(g, m.images_, m.target_).is_zero()) {
            throw std::domain_error("classifying map: relation " + g.str() + " is not killed");
        }
    }
    return m;
}

RingMap classifying_map(const FormalGroupLaw& f, const LazardRing& l) {
    if (f.trunc() < l.trunc()) {
        throw std::invalid_argument("classifying map: law is truncated below the Lazard ring");
    }
    std::map<std::pair<int, int>, SparsePoly> images;
    for (const auto& [ij, c] : f.coefficients()) {
        if (ij.first <= ij.second && ij.first + ij.second <= l.trunc() + 1) images.emplace(ij, c);
    }
    return ring_map_from_images(l, f.ring(), std::move(images));
}

SparsePoly apply_map(const RingMap& m, const SparsePoly& x) {
    if (!same_ring(x.ring(), m.free_ring_) && !same_ring(x.ring(), m.quotient_ring_)) {
        throw std::invalid_argument("apply_map: element not over the map's source");
    }
    return substitute(x, m.images_, m.target_);
}

TruncSeries apply_map(const RingMap& m, const TruncSeries& s) {
    return s.map_coefficients(m.target(), [&](const SparsePoly& c) { return apply_map(m, c); });
}

}  // namespace okc
