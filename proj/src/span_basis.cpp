#include "dgpoly/span_basis.hpp"

namespace dgpoly {

SparseVector SpanBasis::reduce(const SparseVector& v) const {
    // Basis vectors only touch indices after their pivot and vanish on other
    // pivots, so one left-to-right sweep suffices.
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& [i, x] : v) acc.emplace(i, x);
    for (auto it = acc.begin(); it != acc.end();) {
        auto b = basis_.find(it->first);
        if (b == basis_.end() || is_zero(it->second)) {
            ++it;
            continue;
        }
        Scalar f = it->second;
        for (const auto& [j, y] : b->second) {
            if (j == it->first) continue;
            auto [slot, fresh] = acc.try_emplace(j, 0);
            slot->second -= f * y;
        }
        it = acc.erase(it);
    }
    SparseVector out;
    for (auto& [i, x] : acc) {
        if (!is_zero(x)) out.emplace_back(i, std::move(x));
    }
    return out;
}

bool SpanBasis::insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    Scalar inv = 1 / r.front().second;
    for (auto& e : r) e.second *= inv;
    const std::uint32_t p = r.front().first;
    for (auto& [q, b] : basis_) {
        for (const auto& [j, y] : b) {
            if (j == p) {
                Scalar f = y;
                b = axpy(b, -f, r);
                break;
            }
            if (j > p) break;
        }
    }
    basis_.emplace(p, std::move(r));
    return true;
}

std::optional<std::vector<Scalar>> SpanBasis::coordinates(const SparseVector& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<Scalar> out;
    out.reserve(basis_.size());
    std::map<std::uint32_t, Scalar> lookup(v.begin(), v.end());
    // With a fully reduced basis the coordinate on a basis vector is the
    // entry of v at that vector's pivot.
    for (const auto& [p, b] : basis_) {
        auto it = lookup.find(p);
        out.push_back(it == lookup.end() ? Scalar(0) : it->second);
    }
    return out;
}

std::vector<SparseVector> SpanBasis::vectors() const {
    std::vector<SparseVector> out;
    for (const auto& [p, b] : basis_) out.push_back(b);
    return out;
}

std::vector<std::uint32_t> SpanBasis::pivots() const {
    std::vector<std::uint32_t> out;
    for (const auto& [p, b] : basis_) out.push_back(p);
    return out;
}

}  // namespace dgpoly
