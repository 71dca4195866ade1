#pragma once

#include <array>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "planarlab/errors.hpp"
#include "planarlab/rat.hpp"

namespace planarlab {

// Variable indices shared by the 2- and 4-variable polynomial rings.
inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarZ = 2;
inline constexpr int kVarW = 3;

// Degree of the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

struct Mono2 {
    static constexpr int nvars = 2;
    int e[2] = {0, 0};

    Mono2() = default;
    Mono2(int i, int j) : e{i, j} {}

    int degree() const { return e[0] + e[1]; }
    bool operator==(const Mono2& o) const { return e[0] == o.e[0] && e[1] == o.e[1]; }
};

struct Mono4 {
    static constexpr int nvars = 4;
    int e[4] = {0, 0, 0, 0};

    Mono4() = default;
    Mono4(int i, int j, int k, int l) : e{i, j, k, l} {}

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    bool operator==(const Mono4& o) const {
        for (int v = 0; v < 4; ++v)
            if (e[v] != o.e[v]) return false;
        return true;
    }
};

// Canonical term order: total degree descending, then exponent of x descending,
// then y, z, w.  Map iteration therefore yields terms in printing order.
template <typename Mono>
struct TermOrder {
    bool operator()(const Mono& a, const Mono& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        for (int v = 0; v < Mono::nvars; ++v)
            if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
        return false;
    }
};

// Sparse polynomial with exact rational coefficients.  Canonical form: no
// stored zero coefficients, so equality is structural.
template <typename Mono>
class SparsePoly {
  public:
    using TermMap = std::map<Mono, Rat, TermOrder<Mono>>;

    SparsePoly() = default;

    static SparsePoly constant(const Rat& c) {
        SparsePoly p;
        p.add_term(Mono{}, c);
        return p;
    }

    static SparsePoly monomial(const Mono& m, const Rat& c) {
        SparsePoly p;
        p.add_term(m, c);
        return p;
    }

    static SparsePoly variable(int var) {
        Mono m;
        m.e[var] = 1;
        return monomial(m, Rat(1));
    }

    bool is_zero() const { return terms_.empty(); }

    int degree() const { return terms_.empty() ? kZeroDegree : terms_.begin()->first.degree(); }

    const TermMap& terms() const { return terms_; }

    Rat coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m;
                for (int v = 0; v < Mono::nvars; ++v) m.e[v] = ma.e[v] + mb.e[v];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    friend SparsePoly operator*(const Rat& c, const SparsePoly& p) {
        SparsePoly r;
        for (const auto& [m, pc] : p.terms_) r.add_term(m, c * pc);
        return r;
    }

    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    // Formal partial derivative with respect to variable `var`.
    SparsePoly partial(int var) const {
        SparsePoly r;
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Mono d = m;
            d.e[var] -= 1;
            r.add_term(d, c * m.e[var]);
        }
        return r;
    }

    Rat evaluate(const std::array<Rat, Mono::nvars>& point) const {
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (int v = 0; v < Mono::nvars; ++v)
                for (int k = 0; k < m.e[v]; ++k) t *= point[v];
            acc += t;
        }
        return acc;
    }

  private:
    TermMap terms_;
};

using Poly2 = SparsePoly<Mono2>;
using Poly4 = SparsePoly<Mono4>;

template <typename Mono>
SparsePoly<Mono> poly_pow(const SparsePoly<Mono>& p, int k) {
    SparsePoly<Mono> r = SparsePoly<Mono>::constant(Rat(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

// Univariate polynomial in x; carrier for the Liénard F(x).
class Poly1 {
  public:
    Poly1() = default;

    void add_term(int deg, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(deg, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kZeroDegree : coeffs_.rbegin()->first; }
    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    Poly2 as_poly2_in_x() const {
        Poly2 p;
        for (const auto& [d, c] : coeffs_) p.add_term(Mono2(d, 0), c);
        return p;
    }

    bool operator==(const Poly1& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::map<int, Rat> coeffs_;  // degree -> coefficient, no zeros
};

// Planar polynomial vector field (x' = P, y' = Q).
struct VectorField2 {
    Poly2 p, q;

    VectorField2() = default;
    VectorField2(Poly2 P, Poly2 Q) : p(std::move(P)), q(std::move(Q)) {}

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    int degree() const { return std::max(p.degree(), q.degree()); }

    bool operator==(const VectorField2& o) const { return p == o.p && q == o.q; }
    bool operator!=(const VectorField2& o) const { return !(*this == o); }

    friend VectorField2 operator+(const VectorField2& a, const VectorField2& b) {
        return {a.p + b.p, a.q + b.q};
    }
    friend VectorField2 operator-(const VectorField2& a, const VectorField2& b) {
        return {a.p - b.p, a.q - b.q};
    }
    friend VectorField2 operator-(const VectorField2& a) { return {-a.p, -a.q}; }
    friend VectorField2 operator*(const Rat& c, const VectorField2& f) {
        return {c * f.p, c * f.q};
    }
};

// Commutator (DY)X - (DX)Y of planar fields.
VectorField2 lie_bracket(const VectorField2& x, const VectorField2& y);

// div X = P_x + Q_y.
Poly2 divergence(const VectorField2& x);

// (fP, fQ): same trajectories as X where f > 0.
VectorField2 scale_field(const Poly2& f, const VectorField2& x);

// X.g = P g_x + Q g_y, the derivative of g along trajectories of X.
Poly2 directional_derivative(const VectorField2& x, const Poly2& g);

Rat evaluate(const Poly2& p, const Rat& px, const Rat& py);

// (y - F(x), -x).
VectorField2 make_lienard(const Poly1& f);

// (y (x^2+y^2)^{n/2}, -x (x^2+y^2)^{n/2}); homogeneous of degree n+1.
// Throws OddExponentError for odd n (the result would not be polynomial).
VectorField2 make_homogeneous_center(int n);

}  // namespace planarlab
