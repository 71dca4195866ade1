#include "planarlab/linops.hpp"

#include <cassert>
#include <stdexcept>

namespace planarlab {

namespace {

// Codomain degree bound for operators built from X; deg X = 0 and X = 0 both
// land back in degree N.
int codomain_bound(const VectorField2& x, int n) {
    const int d = x.degree();
    return d <= 1 ? n : n + d - 1;
}

}  // namespace

std::vector<Mono2> scalar_monomials(int n) {
    std::vector<Mono2> out;
    out.reserve(std::size_t(n + 1) * (n + 2) / 2);
    for (int d = 0; d <= n; ++d)
        for (int i = d; i >= 0; --i) out.emplace_back(i, d - i);
    return out;
}

std::vector<Rat> poly_coords(const Poly2& p, const std::vector<Mono2>& monomials) {
    std::vector<Rat> v(monomials.size(), Rat(0));
    for (std::size_t k = 0; k < monomials.size(); ++k) v[k] = p.coefficient(monomials[k]);
    return v;
}

Poly2 poly_from_coords(const std::vector<Rat>& coords, const std::vector<Mono2>& monomials) {
    assert(coords.size() == monomials.size());
    Poly2 p;
    for (std::size_t k = 0; k < monomials.size(); ++k) p.add_term(monomials[k], coords[k]);
    return p;
}

FieldSpaceIndex::FieldSpaceIndex(int n) : n_(n), monomials_(scalar_monomials(n)) {}

VectorField2 FieldSpaceIndex::basis_field(int k) const {
    const int m = static_cast<int>(monomials_.size());
    if (k < m) return {Poly2::monomial(monomials_[k], Rat(1)), Poly2()};
    return {Poly2(), Poly2::monomial(monomials_[k - m], Rat(1))};
}

std::vector<Rat> FieldSpaceIndex::coords_of(const VectorField2& f) const {
    assert(f.degree() <= n_);
    std::vector<Rat> v = poly_coords(f.p, monomials_);
    std::vector<Rat> w = poly_coords(f.q, monomials_);
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

VectorField2 FieldSpaceIndex::field_from(const std::vector<Rat>& coords) const {
    const std::size_t m = monomials_.size();
    assert(coords.size() == 2 * m);
    std::vector<Rat> first(coords.begin(), coords.begin() + m);
    std::vector<Rat> second(coords.begin() + m, coords.end());
    return {poly_from_coords(first, monomials_), poly_from_coords(second, monomials_)};
}

ExactMatrix ad_matrix(const VectorField2& x, int n) {
    if (n < 0) throw std::invalid_argument("degree bound must be non-negative");
    FieldSpaceIndex domain(n);
    FieldSpaceIndex codomain(codomain_bound(x, n));
    ExactMatrix m(codomain.dimension(), domain.dimension());
    for (int k = 0; k < domain.dimension(); ++k) {
        const std::vector<Rat> col = codomain.coords_of(lie_bracket(x, domain.basis_field(k)));
        for (int r = 0; r < codomain.dimension(); ++r) m.at(r, k) = col[r];
    }
    return m;
}

CentralizerReport centralizer_basis(const VectorField2& x, int n) {
    if (x.is_zero()) throw ZeroFieldError();
    if (n < 1) throw std::invalid_argument("degree bound must be >= 1");

    FieldSpaceIndex domain(n);
    const SubspaceBasis ns = nullspace(ad_matrix(x, n));

    CentralizerReport rep;
    rep.degree_bound = n;
    rep.dimension = ns.dimension();
    for (const auto& v : ns.basis) rep.basis.push_back(domain.field_from(v));

    // Pairwise brackets commute with X (Jacobi) but can exceed degree N; the
    // structure tensor is only filled when every bracket stays inside C_N.
    const int d = rep.dimension;
    std::vector<std::vector<VectorField2>> brackets(d, std::vector<VectorField2>(d));
    rep.abelian = true;
    rep.closed_within_degree = true;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            brackets[a][b] = lie_bracket(rep.basis[a], rep.basis[b]);
            if (!brackets[a][b].is_zero()) rep.abelian = false;
            if (brackets[a][b].degree() > n) rep.closed_within_degree = false;
        }
    if (rep.closed_within_degree && d > 0) {
        std::vector<std::vector<Rat>> basis_coords;
        for (const auto& b : rep.basis) basis_coords.push_back(domain.coords_of(b));
        rep.structure.assign(d, std::vector<std::vector<Rat>>(d));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                auto c = solve_in_span(basis_coords, domain.coords_of(brackets[a][b]));
                assert(c.has_value());
                rep.structure[a][b] = std::move(*c);
            }
    }
    return rep;
}

bool is_abelian(const CentralizerReport& report) {
    for (std::size_t a = 0; a < report.basis.size(); ++a)
        for (std::size_t b = a + 1; b < report.basis.size(); ++b)
            if (!lie_bracket(report.basis[a], report.basis[b]).is_zero()) return false;
    return true;
}

CentralizerComparison compare_centralizers(const VectorField2& x, const Poly2& f, int n) {
    if (f.is_zero()) throw ZeroFieldError();
    CentralizerComparison cmp;
    cmp.base = centralizer_basis(x, n);
    cmp.scaled = centralizer_basis(scale_field(f, x), n);
    cmp.dimensions_equal = cmp.base.dimension == cmp.scaled.dimension;
    cmp.abelian_flags_equal = cmp.base.abelian == cmp.scaled.abelian;
    cmp.necessary_conditions_hold = cmp.dimensions_equal && cmp.abelian_flags_equal;
    return cmp;
}

OperatorReport derivative_operator_report(const VectorField2& x, int n) {
    if (n < 0) throw std::invalid_argument("degree bound must be non-negative");
    const std::vector<Mono2> domain = scalar_monomials(n);
    const std::vector<Mono2> codomain = scalar_monomials(codomain_bound(x, n));

    ExactMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    for (std::size_t k = 0; k < domain.size(); ++k) {
        const Poly2 image =
            directional_derivative(x, Poly2::monomial(domain[k], Rat(1)));
        const std::vector<Rat> col = poly_coords(image, codomain);
        for (std::size_t r = 0; r < codomain.size(); ++r)
            m.at(static_cast<int>(r), static_cast<int>(k)) = col[r];
    }

    OperatorReport rep;
    rep.degree_bound = n;
    rep.domain_dimension = static_cast<int>(domain.size());
    rep.codomain_dimension = static_cast<int>(codomain.size());
    const SubspaceBasis ns = nullspace(m);
    rep.rank = rep.domain_dimension - ns.dimension();
    rep.corank = rep.codomain_dimension - rep.rank;
    for (const auto& v : ns.basis) rep.kernel.push_back(poly_from_coords(v, domain));
    return rep;
}

std::vector<Poly2> first_integrals(const VectorField2& x, int n) {
    if (n < 1) throw std::invalid_argument("degree bound must be >= 1");
    std::vector<Poly2> out;
    for (const Poly2& g : derivative_operator_report(x, n).kernel) {
        if (g.degree() < 1) continue;  // drop the constants
        Poly2 stripped = g;
        stripped.add_term(Mono2(0, 0), -g.coefficient(Mono2(0, 0)));
        out.push_back(std::move(stripped));
    }
    return out;
}

std::vector<std::pair<int, int>> dimension_profile(const VectorField2& x, int n_max) {
    if (x.is_zero()) throw ZeroFieldError();
    if (n_max < 1) throw std::invalid_argument("degree bound must be >= 1");
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= n_max; ++n) {
        const ExactMatrix m = ad_matrix(x, n);
        out.emplace_back(n, m.cols() - rank(m));
    }
    return out;
}

CentralizerReport commuting_perturbation_probe(const VectorField2& x, const VectorField2& e,
                                               const Rat& eps, int n) {
    return centralizer_basis(x + eps * e, n);
}

}  // namespace planarlab
