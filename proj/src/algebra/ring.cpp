#include "okc/algebra/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace okc {

namespace {

void add_term(Terms& out, const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

}  // namespace

RingDescriptor::RingDescriptor(std::vector<Variable> vars)
    : RingDescriptor(std::move(vars), Options{}) {}

RingDescriptor::RingDescriptor(std::vector<Variable> vars, Options opts)
    : vars_(std::move(vars)), opts_(std::move(opts)) {
    weights_.reserve(vars_.size());
    for (const auto& v : vars_) weights_.push_back(v.weight);
    validate();
}

void RingDescriptor::validate() const {
    std::set<std::string> names;
    for (const auto& v : vars_) {
        if (v.name.empty()) throw std::invalid_argument("ring variable with empty name");
        if (!names.insert(v.name).second) {
            throw std::invalid_argument("duplicate ring variable '" + v.name + "'");
        }
        if (v.nil_index && *v.nil_index < 1) {
            throw std::invalid_argument("nilpotency index must be >= 1 for '" + v.name + "'");
        }
        if (v.laurent && v.nil_index) {
            throw std::invalid_argument("variable '" + v.name + "' cannot be both Laurent and nilpotent");
        }
    }
    for (const auto& [d, lat] : opts_.lattices) {
        if (lat.echelon.cols() != lat.columns.size()) {
            throw std::invalid_argument("degree lattice: echelon width does not match its columns");
        }
        for (const auto& m : lat.columns) {
            if (m.weighted_degree(weights_) != d) throw std::invalid_argument("degree lattice: column of wrong degree");
        }
        for (std::size_t k = 1; k < lat.columns.size(); ++k) {
            if (!(lat.columns[k] < lat.columns[k - 1])) {
                throw std::invalid_argument("degree lattice: columns must be strictly descending");
            }
        }
        std::size_t last = 0;
        for (std::size_t i = 0; i < lat.echelon.rows(); ++i) {
            std::size_t c = 0;
            while (c < lat.echelon.cols() && lat.echelon(i, c) == 0) ++c;
            if (c == lat.echelon.cols() || lat.echelon(i, c) <= 0 || (i > 0 && c <= last)) {
                throw std::invalid_argument("degree lattice: rows are not in echelon form");
            }
            last = c;
        }
    }
    for (const auto& rel : opts_.relations) {
        std::optional<long> d;
        Terms reduced;
        for (const auto& [m, c] : rel) {
            long md = m.weighted_degree(weights_);
            if (d && *d != md) throw std::invalid_argument("relation is not homogeneous");
            d = md;
            accumulate(reduced, m, c);
        }
        reduce_lattices(reduced);
        if (!reduced.empty()) {
            throw std::invalid_argument("relation does not reduce to zero under the ring's normal form");
        }
    }
}

int RingDescriptor::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("unknown ring variable '" + std::string(name) + "'");
}

std::optional<int> RingDescriptor::find(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

bool RingDescriptor::is_nilpotent(int v) const {
    const auto& var = vars_.at(static_cast<std::size_t>(v));
    if (var.nil_index) return true;
    // Under a degree floor every variable of strictly negative weight has a
    // power that falls below the floor.
    return opts_.min_degree.has_value() && var.weight < 0;
}

bool RingDescriptor::vanishes(const Monomial& m) const {
    for (const auto& [v, e] : m.factors()) {
        const auto& var = vars_[static_cast<std::size_t>(v)];
        if (e < 0 && !var.laurent) {
            throw std::domain_error("negative exponent on non-Laurent variable '" + var.name + "'");
        }
        if (var.nil_index && e >= *var.nil_index) return true;
    }
    if (opts_.min_degree && m.weighted_degree(weights_) < *opts_.min_degree) return true;
    return false;
}

void RingDescriptor::accumulate(Terms& out, const Monomial& m, const BigInt& c) const {
    if (c == 0) return;
    if (!m.factors().empty() && static_cast<std::size_t>(m.factors().back().first) >= vars_.size()) {
        throw std::out_of_range("monomial references a variable outside the ring");
    }
    if (vanishes(m)) return;
    add_term(out, m, c);
}

void RingDescriptor::reduce_lattices(Terms& terms) const {
    if (opts_.lattices.empty() || terms.empty()) return;
    std::map<long, std::vector<Terms::iterator>> by_degree;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        long d = it->first.weighted_degree(weights_);
        if (opts_.lattices.contains(d)) by_degree[d].push_back(it);
    }
    for (auto& [d, its] : by_degree) {
        const DegreeLattice& lat = opts_.lattices.at(d);
        std::vector<BigInt> x(lat.columns.size());
        for (auto it : its) {
            auto pos = std::lower_bound(lat.columns.begin(), lat.columns.end(), it->first,
                                        [](const Monomial& a, const Monomial& b) { return b < a; });
            if (pos == lat.columns.end() || !(*pos == it->first)) {
                throw std::logic_error("degree lattice does not cover monomial " + monomial_str(it->first));
            }
            x[static_cast<std::size_t>(pos - lat.columns.begin())] = it->second;
            terms.erase(it);
        }
        std::size_t col = 0;
        for (std::size_t i = 0; i < lat.echelon.rows(); ++i) {
            while (lat.echelon(i, col) == 0) ++col;
            BigInt q = floor_div(x[col], lat.echelon(i, col));
            if (q == 0) continue;
            for (std::size_t j = col; j < x.size(); ++j) x[j] -= q * lat.echelon(i, j);
        }
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] != 0) terms.emplace(lat.columns[j], x[j]);
        }
    }
}

std::string RingDescriptor::monomial_str(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) os << '*';
        first = false;
        os << vars_.at(static_cast<std::size_t>(v)).name;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
    return vars_ == other.vars_ && opts_.min_degree == other.opts_.min_degree &&
           opts_.lattices == other.opts_.lattices;
}

Ring make_ring(std::vector<Variable> vars) {
    return std::make_shared<const RingDescriptor>(std::move(vars));
}

Ring make_ring(std::vector<Variable> vars, RingDescriptor::Options opts) {
    return std::make_shared<const RingDescriptor>(std::move(vars), std::move(opts));
}

Ring integer_ring() {
    return make_ring({});
}

bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace okc
