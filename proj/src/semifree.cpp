#include "dgpoly/semifree.hpp"

#include "dgpoly/parallel.hpp"
#include "dgpoly/span_basis.hpp"

#include <algorithm>

namespace dgpoly {

std::vector<std::size_t> SemifreeResolution::basis_ranks() const {
    std::vector<std::size_t> ranks;
    for (const auto& e : basis) {
        if (e.degree < 0) continue;
        if (ranks.size() <= static_cast<std::size_t>(e.degree)) ranks.resize(static_cast<std::size_t>(e.degree) + 1);
        ++ranks[static_cast<std::size_t>(e.degree)];
    }
    return ranks;
}

std::vector<std::size_t> SemifreeResolution::level_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& e : basis) {
        if (sizes.size() <= static_cast<std::size_t>(e.level)) sizes.resize(static_cast<std::size_t>(e.level) + 1);
        ++sizes[static_cast<std::size_t>(e.level)];
    }
    return sizes;
}

ModulePiece::ModulePiece(const std::vector<SemifreeBasisElement>& basis, std::size_t n, int d, int max_level)
    : n_(n) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (max_level >= 0 && basis[k].level > max_level) continue;
        const int e = d - basis[k].degree;
        if (e < 0) continue;
        for (auto& mu : monomials_of_degree(n, e)) {
            index_.emplace(std::make_pair(k, mu), static_cast<std::uint32_t>(pairs_.size()));
            pairs_.emplace_back(k, std::move(mu));
        }
    }
}

SparseVector ModulePiece::to_vector(const ModuleElement& m) const {
    SparseVector v;
    for (const auto& [k, p] : m) {
        for (const auto& [mu, c] : p.terms()) v.emplace_back(index_.at({k, mu}), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

ModuleElement ModulePiece::from_vector(const SparseVector& v) const {
    ModuleElement m;
    for (const auto& [i, c] : v) {
        const auto& [k, mu] = pairs_[i];
        auto [it, fresh] = m.try_emplace(k, n_);
        it->second.add_term(mu, c);
    }
    return m;
}

namespace {

void prune(ModuleElement& m) {
    std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
}

int sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

ModuleElement add(const ModuleElement& a, const ModuleElement& b, const Scalar& factor) {
    ModuleElement out = a;
    for (const auto& [k, p] : b) {
        auto [it, fresh] = out.try_emplace(k, p.nvars());
        it->second += p * factor;
    }
    prune(out);
    return out;
}

ModuleElement act(const Polynomial& a, const ModuleElement& m) {
    ModuleElement out;
    for (const auto& [k, p] : m) {
        Polynomial q = a * p;
        if (!q.is_zero()) out.emplace(k, std::move(q));
    }
    return out;
}

ModuleElement apply_differential(const std::vector<SemifreeBasisElement>& basis, const Differential& d,
                                 const ModuleElement& m) {
    ModuleElement out;
    std::map<Monomial, Polynomial> memo;
    const std::size_t n = d.n();
    for (const auto& [k, p] : m) {
        for (const auto& [mu, c] : p.terms()) {
            Polynomial dmu = d.apply(mu, memo) * c;
            if (!dmu.is_zero()) {
                auto [it, fresh] = out.try_emplace(k, n);
                it->second += dmu;
            }
            const Polynomial coeff = Polynomial::monomial(mu, c * sign(mu.degree()));
            for (const auto& [j, q] : basis[k].differential) {
                auto [it, fresh] = out.try_emplace(j, n);
                it->second += coeff * q;
            }
        }
    }
    prune(out);
    return out;
}

Suspended act(const Polynomial& a, const Suspended& s) {
    ModuleElement am = act(a, s.element);
    if (a.degree() > 0 && sign(a.degree() * s.shift) < 0) am = add({}, am, -1);
    return {s.shift, std::move(am)};
}

Suspended apply_differential(const std::vector<SemifreeBasisElement>& basis, const Differential& d,
                             const Suspended& s) {
    return {s.shift, add({}, apply_differential(basis, d, s.element), sign(s.shift))};
}

SparseMatrix module_differential_matrix(const std::vector<SemifreeBasisElement>& basis, const Differential& diff,
                                        int d, int max_level) {
    const std::size_t n = diff.n();
    ModulePiece src(basis, n, d, max_level);
    ModulePiece dst(basis, n, d + 1);
    std::vector<SparseVector> columns;
    columns.reserve(src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const auto& [k, mu] = src[c];
        columns.push_back(dst.to_vector(apply_differential(basis, diff, {{k, Polynomial::monomial(mu)}})));
    }
    return SparseMatrix::from_columns(dst.size(), std::move(columns));
}

namespace {

// Cohomology of F in degree d: complement of the coboundaries in the
// cocycles, as vectors over ModulePiece(basis, n, d).
std::vector<SparseVector> cohomology_basis(const std::vector<SemifreeBasisElement>& basis, const Differential& diff,
                                           int d) {
    const ModulePiece piece(basis, diff.n(), d);
    SpanBasis boundaries(piece.size());
    if (d > 0) {
        const SparseMatrix prev = module_differential_matrix(basis, diff, d - 1);
        for (std::size_t c = 0; c < prev.cols(); ++c) boundaries.insert(prev.column(c));
    }
    SpanBasis complement(piece.size());
    for (const auto& z : sparse_kernel_basis(module_differential_matrix(basis, diff, d))) {
        complement.insert(boundaries.reduce(z));
    }
    return complement.vectors();
}

std::size_t cohomology_dim(const std::vector<SemifreeBasisElement>& basis, const Differential& diff, int d) {
    const std::size_t dim = ModulePiece(basis, diff.n(), d).size();
    const std::size_t below = d > 0 ? rank(module_differential_matrix(basis, diff, d - 1)) : 0;
    return dim - below - rank(module_differential_matrix(basis, diff, d));
}

void assign_levels(std::vector<SemifreeBasisElement>& basis) {
    for (auto& e : basis) {
        int level = 0;
        for (const auto& [j, q] : e.differential) level = std::max(level, basis[j].level + 1);
        e.level = level;
        e.shift = level;
    }
}

}  // namespace

ResolutionValidation validate(const SemifreeResolution& f) {
    ResolutionValidation v;
    const Differential diff(f.spec);
    const auto& basis = f.basis;

    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& e = basis[k];
        for (const auto& [j, q] : e.differential) {
            if (j >= k || basis[j].level >= e.level) {
                v.semifree = false;
                v.detail += "d(" + e.symbol + ") uses " + basis[j].symbol + " out of filtration order; ";
            }
            if (q.is_homogeneous() && q.degree() == 0) {
                v.minimal = false;
                v.detail += "d(" + e.symbol + ") has a unit coefficient on " + basis[j].symbol + "; ";
            }
            if (!q.is_homogeneous() || q.degree() != e.degree + 1 - basis[j].degree) {
                v.square_zero = false;
                v.detail += "d(" + e.symbol + ") is not homogeneous of degree " + std::to_string(e.degree + 1) + "; ";
            }
        }
        if (e.degree < 0) {
            v.quasi_isomorphism = false;
            v.detail += e.symbol + " has negative degree; ";
        }
    }
    if (basis.empty() || basis[0].degree != 0 || !basis[0].differential.empty()) {
        v.quasi_isomorphism = false;
        v.detail += "missing augmentation generator in degree 0; ";
    }

    std::vector<char> square(basis.size(), 1);
    parallel_for(basis.size(), [&](std::size_t k) {
        square[k] = apply_differential(basis, diff, basis[k].differential).empty();
    });
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!square[k]) {
            v.square_zero = false;
            v.detail += "d^2(" + basis[k].symbol + ") != 0; ";
        }
    }
    if (!v.square_zero || basis.empty()) {
        v.quasi_isomorphism = false;
        return v;
    }

    const auto count = static_cast<std::size_t>(f.truncation_degree + 1);
    v.cohomology.resize(count);
    parallel_for(count, [&](std::size_t d) { v.cohomology[d] = cohomology_dim(basis, diff, static_cast<int>(d)); });
    for (std::size_t d = 0; d < count; ++d) {
        if (v.cohomology[d] != (d == 0 ? 1u : 0u)) {
            v.quasi_isomorphism = false;
            v.detail += "dim H^" + std::to_string(d) + "(F) = " + std::to_string(v.cohomology[d]) + "; ";
        }
    }
    return v;
}

SemifreeResolution killing_cycles_resolution(const AlgebraSpec& spec, int truncation_degree) {
    if (truncation_degree < 1) throw std::invalid_argument("truncation_degree must be >= 1");
    const Differential diff(spec);
    SemifreeResolution f;
    f.spec = spec;
    f.method = "killing";
    f.truncation_degree = truncation_degree;
    f.basis.push_back({"e_0", 0, 0, 0, {}});
    constexpr int kMaxRounds = 64;
    for (int d = 1; d <= truncation_degree; ++d) {
        for (int round = 0;; ++round) {
            if (round == kMaxRounds) {
                throw std::runtime_error("killing cycles did not stabilize in degree " + std::to_string(d));
            }
            const auto classes = cohomology_basis(f.basis, diff, d);
            if (classes.empty()) break;
            const ModulePiece piece(f.basis, spec.n(), d);
            for (const auto& z : classes) {
                SemifreeBasisElement e;
                e.symbol = "e_" + std::to_string(f.basis.size());
                e.degree = d - 1;
                e.differential = piece.from_vector(z);
                f.basis.push_back(std::move(e));
            }
            assign_levels(f.basis);
        }
    }
    return f;
}

SemifreeResolution eilenberg_moore(const AlgebraSpec& spec, const GradedPresentation& pres, const BettiTable& betti,
                                   int truncation_degree) {
    if (!betti.terminated) throw std::domain_error("eilenberg_moore requires a terminated Betti table");
    if (truncation_degree < 1) throw std::invalid_argument("truncation_degree must be >= 1");
    const Differential diff(spec);
    SemifreeResolution f;
    f.spec = spec;
    f.method = "em";
    f.truncation_degree = truncation_degree;
    f.basis.push_back({"e_0", 0, 0, 0, {}});

    std::vector<std::vector<std::size_t>> index{{0}};
    for (std::size_t i = 1; i < betti.generator_degrees.size(); ++i) {
        const int level = static_cast<int>(i);
        index.emplace_back();
        for (std::size_t j = 0; j < betti.generator_degrees[i].size(); ++j) {
            SemifreeBasisElement e;
            e.symbol = "E_{" + std::to_string(i) + "," + std::to_string(j + 1) + "}";
            e.degree = betti.generator_degrees[i][j] - level;
            e.shift = level;
            e.level = level;
            for (const auto& entry : betti.maps[i][j]) {
                const std::size_t target = index[i - 1][entry.target];
                Polynomial value = evaluate_on_representatives(pres, entry.value);
                if (sign(f.basis[target].degree) < 0) value = -value;
                e.differential = add(e.differential, {{target, value}});
            }
            ModuleElement w = apply_differential(f.basis, diff, e.differential);
            if (!w.empty()) {
                const int d = e.degree + 1;
                const int cap = std::max(level - 2, 0);
                const SparseMatrix m = module_differential_matrix(f.basis, diff, d, cap);
                const ModulePiece rows(f.basis, spec.n(), d + 1);
                const std::optional<SparseVector> c = Elimination(m).solve(rows.to_vector(add({}, w, -1)));
                if (!c) {
                    throw LiftObstruction("no correction term for " + e.symbol + " in degree " + std::to_string(d),
                                          d);
                }
                e.differential = add(e.differential, ModulePiece(f.basis, spec.n(), d, cap).from_vector(*c));
            }
            index[i].push_back(f.basis.size());
            f.basis.push_back(std::move(e));
        }
    }
    return f;
}

int dg_free_class(const SemifreeResolution& f) {
    std::vector<int> depth(f.basis.size(), 0);
    int best = 0;
    for (std::size_t k = 0; k < f.basis.size(); ++k) {
        for (const auto& [j, q] : f.basis[k].differential) depth[k] = std::max(depth[k], depth[j] + 1);
        best = std::max(best, depth[k]);
    }
    return best;
}

}  // namespace dgpoly
