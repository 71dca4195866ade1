#pragma once

#include <optional>
#include <vector>

#include "planarlab/rat.hpp"

namespace planarlab {

// Dense matrix over the exact rationals, row-major.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Reduced row echelon form with the list of pivot columns.  Elimination is
// fraction-free (Bareiss) on a denominator-cleared integer copy; the pivot in
// each column is a nonzero entry of minimal bit length.  Back-substitution
// then produces the unique rational reduced form.
struct RrefResult {
    ExactMatrix reduced;      // rank(M) nonzero rows, then zero rows
    std::vector<int> pivots;  // ascending pivot column per nonzero row
};

RrefResult rref(const ExactMatrix& m);

int rank(const ExactMatrix& m);

// Basis of a subspace in its unique normal form: each vector has value 1 at
// its highest-index nonzero coordinate and value 0 there in every other
// basis vector; vectors ordered by that coordinate.
struct SubspaceBasis {
    int ambient = 0;
    std::vector<std::vector<Rat>> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Basis of {v : Mv = 0}; dimension = cols - rank(M).
SubspaceBasis nullspace(const ExactMatrix& m);

// Coordinates of `target` in the span of `vectors` (columns of the implied
// matrix), or nullopt when target is outside the span.  When the vectors are
// independent the coordinates are unique.
std::optional<std::vector<Rat>> solve_in_span(const std::vector<std::vector<Rat>>& vectors,
                                              const std::vector<Rat>& target);

}  // namespace planarlab
