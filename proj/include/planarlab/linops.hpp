#pragma once

#include <utility>
#include <vector>

#include "planarlab/exactla.hpp"
#include "planarlab/polyalg.hpp"

namespace planarlab {

inline constexpr int kDefaultDegreeBound = 3;
inline constexpr int kMaxDegreeBound = 8;

// Scalar monomials of total degree <= N, degree ascending and x-major within
// a degree: 1, x, y, x^2, x*y, y^2, ...
std::vector<Mono2> scalar_monomials(int n);

// Coordinates of the space of vector fields of degree <= N: monomial fields
// (m, 0) for every monomial first, then (0, m).  Dimension (N+1)(N+2).
class FieldSpaceIndex {
  public:
    explicit FieldSpaceIndex(int n);

    int degree_bound() const { return n_; }
    int dimension() const { return 2 * static_cast<int>(monomials_.size()); }

    VectorField2 basis_field(int k) const;
    std::vector<Rat> coords_of(const VectorField2& f) const;  // requires deg f <= N
    VectorField2 field_from(const std::vector<Rat>& coords) const;

  private:
    int n_;
    std::vector<Mono2> monomials_;
};

std::vector<Rat> poly_coords(const Poly2& p, const std::vector<Mono2>& monomials);
Poly2 poly_from_coords(const std::vector<Rat>& coords, const std::vector<Mono2>& monomials);

// Matrix of Y -> [X, Y] from fields of degree <= N to fields of degree
// <= N + deg X - 1; its kernel is the truncated centralizer C_N(X).
ExactMatrix ad_matrix(const VectorField2& x, int n);

struct CentralizerReport {
    int degree_bound = 0;
    int dimension = 0;
    std::vector<VectorField2> basis;
    // c[a][b][e] with [B_a, B_b] = sum_e c[a][b][e] B_e; only meaningful when
    // closed_within_degree (pairwise brackets may exceed degree N).
    std::vector<std::vector<std::vector<Rat>>> structure;
    bool closed_within_degree = false;
    bool abelian = false;
};

CentralizerReport centralizer_basis(const VectorField2& x, int n);

bool is_abelian(const CentralizerReport& report);

// Necessary-condition comparison of C_N(X) and C_N(fX) (Lie-algebra
// isomorphism would force equal dimension and equal abelian-ness).
struct CentralizerComparison {
    CentralizerReport base;    // C_N(X)
    CentralizerReport scaled;  // C_N(fX)
    bool dimensions_equal = false;
    bool abelian_flags_equal = false;
    bool necessary_conditions_hold = false;
};

CentralizerComparison compare_centralizers(const VectorField2& x, const Poly2& f, int n);

// Report on g -> X.g acting from scalars of degree <= N to scalars of degree
// <= N + deg X - 1; corank is the codimension of the range, the kernel holds
// the polynomial first integrals (plus constants).
struct OperatorReport {
    int degree_bound = 0;
    int domain_dimension = 0;
    int codomain_dimension = 0;
    int rank = 0;
    int corank = 0;
    std::vector<Poly2> kernel;
};

OperatorReport derivative_operator_report(const VectorField2& x, int n);

// Nonconstant polynomial first integrals of degree <= N (kernel basis with
// the constants stripped); empty means none exist at this degree.
std::vector<Poly2> first_integrals(const VectorField2& x, int n);

// (N, dim C_N(X)) for N = 1..n_max; non-decreasing in N.
std::vector<std::pair<int, int>> dimension_profile(const VectorField2& x, int n_max);

// Exact centralizer of the perturbed field X + eps*E.
CentralizerReport commuting_perturbation_probe(const VectorField2& x, const VectorField2& e,
                                               const Rat& eps, int n);

}  // namespace planarlab
