#include "dgpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dgpoly {

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.exps_.at(i) = 1;
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

int Monomial::degree(std::span<const int> weights) const {
    if (weights.empty()) return degree();
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) d += weights[i] * exps_[i];
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = static_cast<Exponent>(r.exps_[i] + o.exps_[i]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = static_cast<Exponent>(r.exps_[i] - o.exps_[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], o.exps_[i]);
    return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b, std::span<const int> weights) {
    int da = a.degree(weights);
    int db = b.degree(weights);
    if (da != db) return da < db;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

namespace {

void enumerate(std::span<const int> weights, std::size_t var, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
    if (var + 1 == weights.size()) {
        if (remaining % weights[var] == 0) {
            cur[var] = static_cast<Exponent>(remaining / weights[var]);
            out.push_back(cur);
            cur[var] = 0;
        }
        return;
    }
    for (int e = 0; e * weights[var] <= remaining; ++e) {
        cur[var] = static_cast<Exponent>(e);
        enumerate(weights, var + 1, remaining - e * weights[var], cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::span<const int> weights, int d) {
    std::vector<Monomial> out;
    if (weights.empty() || d < 0) return out;
    Monomial cur(weights.size());
    enumerate(weights, 0, d, cur, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return grevlex_less(b, a, weights); });
    return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
    std::vector<int> ones(n, 1);
    return monomials_of_degree(ones, d);
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        lookup_.emplace(monomials_[i], static_cast<std::uint32_t>(i));
    }
}

std::uint32_t MonomialIndex::index(const Monomial& m) const {
    auto it = lookup_.find(m);
    if (it == lookup_.end()) throw std::out_of_range("monomial not in basis");
    return it->second;
}

std::vector<std::string> default_variable_names(std::size_t n, std::string_view prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return names;
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    return monomial(Monomial::variable(nvars, i));
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (dgpoly::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (dgpoly::is_zero(it->second)) terms_.erase(it);
    }
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const { return is_homogeneous({}); }

bool Polynomial::is_homogeneous(std::span<const int> weights) const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree(weights);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.degree(weights) == d; });
}

Polynomial Polynomial::component(int d) const { return component(d, {}); }

Polynomial Polynomial::component(int d, std::span<const int> weights) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.degree(weights) == d) out.terms_.emplace(m, c);
    }
    return out;
}

std::vector<int> Polynomial::degrees() const {
    std::vector<int> ds;
    for (const auto& [m, c] : terms_) ds.push_back(m.degree());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

const Monomial& Polynomial::leading_monomial(std::span<const int> weights) const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it) {
        if (grevlex_less(best->first, it->first, weights)) best = it;
    }
    return best->first;
}

Scalar Polynomial::leading_coefficient(std::span<const int> weights) const {
    return terms_.at(leading_monomial(weights));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(std::max(nvars_, o.nvars_));
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

Polynomial Polynomial::operator*(const Scalar& s) const {
    if (dgpoly::is_zero(s)) return Polynomial(nvars_);
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

Polynomial Polynomial::operator*(const Monomial& mono) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
    return r;
}

Polynomial operator*(const Scalar& s, const Polynomial& p) { return p * s; }

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::vector<std::pair<std::uint32_t, Scalar>> Polynomial::to_vector(const MonomialIndex& basis) const {
    std::vector<std::pair<std::uint32_t, Scalar>> v;
    v.reserve(terms_.size());
    for (const auto& [m, c] : terms_) v.emplace_back(basis.index(m), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

Polynomial Polynomial::from_vector(const std::vector<std::pair<std::uint32_t, Scalar>>& v,
                                   const MonomialIndex& basis) {
    Polynomial p(basis.size() ? basis[0].nvars() : 0);
    for (const auto& [i, c] : v) p.add_term(basis[i], c);
    return p;
}

std::string Polynomial::to_string() const { return to_string(default_variable_names(nvars_)); }

std::string Polynomial::to_string(const std::vector<std::string>& names, std::span<const int> weights) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto& a, const auto& b) { return grevlex_less(b.first, a.first, weights); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        Scalar mag = abs(c);
        std::string body;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!body.empty()) body += ' ';
            body += names.at(i);
            if (m[i] > 1) body += "^" + std::to_string(m[i]);
        }
        if (body.empty()) {
            out += dgpoly::to_string(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += dgpoly::to_string(mag) + " " + body;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    Polynomial run() {
        Polynomial p(names_.size());
        skip();
        if (eof()) throw ParseError("empty polynomial");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
            skip();
        }
        while (true) {
            auto [m, c] = term();
            p.add_term(m, negative ? Scalar(-c) : c);
            skip();
            if (eof()) break;
            char op = get();
            if (op != '+' && op != '-') throw ParseError(error("expected '+' or '-'"));
            negative = op == '-';
            skip();
        }
        return p;
    }

private:
    std::pair<Monomial, Scalar> term() {
        Monomial m(names_.size());
        Scalar c = 1;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
            c = parse_scalar(s_.substr(start, pos_ - start));
            any = true;
        }
        while (true) {
            skip();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip();
            }
            if (eof() || !is_symbol_start(peek())) break;
            std::size_t start = pos_;
            while (!eof() && is_symbol_char(peek())) ++pos_;
            std::string_view sym = s_.substr(start, pos_ - start);
            auto it = std::find(names_.begin(), names_.end(), sym);
            if (it == names_.end()) throw ParseError(error("unknown variable '" + std::string(sym) + "'"));
            unsigned e = 1;
            if (!eof() && peek() == '^') {
                ++pos_;
                std::size_t es = pos_;
                while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (es == pos_) throw ParseError(error("missing exponent"));
                e = static_cast<unsigned>(std::stoul(std::string(s_.substr(es, pos_ - es))));
            }
            auto idx = static_cast<std::size_t>(it - names_.begin());
            m[idx] = static_cast<Exponent>(m[idx] + e);
            any = true;
        }
        if (!any) throw ParseError(error("expected a term"));
        return {m, c};
    }

    static bool is_symbol_start(char ch) {
        return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
    }
    static bool is_symbol_char(char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '{' || ch == '}' ||
               ch == ',';
    }
    void skip() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    std::string error(const std::string& what) const {
        return what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'";
    }

    std::string_view s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const std::vector<std::string>& names) {
    return PolyParser(text, names).run();
}

Polynomial Polynomial::parse(std::string_view text, std::size_t nvars) {
    return parse(text, default_variable_names(nvars));
}

}  // namespace dgpoly
