#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "onepw/field.hpp"

namespace onepw {

/// Dense vector of FieldElements under one Modulus, dim >= 1.
class ColumnVector {
public:
    explicit ColumnVector(std::vector<FieldElement> entries);

    /// dim copies of value.
    static ColumnVector constant(unsigned dim, const FieldElement& value);

    unsigned dim() const { return static_cast<unsigned>(entries_.size()); }
    const FieldElement& operator[](unsigned i) const { return entries_[i]; }
    const std::vector<FieldElement>& entries() const { return entries_; }
    const ModulusPtr& modulus() const { return entries_.front().modulus(); }

    bool is_zero() const;
    bool operator==(const ColumnVector& rhs) const;
    bool operator!=(const ColumnVector& rhs) const { return !(*this == rhs); }

private:
    std::vector<FieldElement> entries_;
};

/// Dense d x d matrix over GF(q), row-major.
class SquareMatrix {
public:
    /// rows.size() == dim of every row; all under one Modulus.
    static SquareMatrix from_rows(std::vector<ColumnVector> rows);
    static SquareMatrix identity(unsigned dim, const ModulusPtr& m);

    unsigned dim() const { return dim_; }
    const FieldElement& at(unsigned row, unsigned col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }
    const ModulusPtr& modulus() const { return entries_.front().modulus(); }
    ColumnVector row(unsigned r) const;

private:
    SquareMatrix(unsigned dim, std::vector<FieldElement> entries)
        : dim_(dim), entries_(std::move(entries)) {}

    unsigned dim_;
    std::vector<FieldElement> entries_;  // row-major
};

enum class SolveStatus { unique, underdetermined, infeasible };

/// Result of row-reducing a stacked affine system in GF(q)^d.
/// solution_dim == d - rank is the dimension of the solution set when the
/// system is feasible (the remaining search-space dimension).
struct SolutionSpace {
    SolveStatus status;
    unsigned rank;
    unsigned solution_dim;
    std::optional<ColumnVector> particular;   // absent iff infeasible
    std::vector<ColumnVector> nullspace;      // basis; empty when unique

    bool feasible() const { return status != SolveStatus::infeasible; }
    const ColumnVector& unique_point() const;
};

/// Exact determinant via Gaussian elimination; zero iff rows are dependent.
FieldElement mat_determinant(const SquareMatrix& m);

/// Solves m * x = rhs exactly; nullopt when m is singular.
std::optional<ColumnVector> try_solve(const SquareMatrix& m, const ColumnVector& rhs);

/// As try_solve but throws SingularMatrix on a singular m.
ColumnVector mat_solve(const SquareMatrix& m, const ColumnVector& rhs);

FieldElement dot_product(const ColumnVector& a, const ColumnVector& b);

/// Row-reduces the stacked system { <alpha_i, x> = c_i } over GF(q)^d and
/// reports rank, solution dimension, the unique point when rank == d, or a
/// particular solution plus nullspace basis. Inconsistency is a status,
/// not an error.
SolutionSpace affine_solution_space(
    const std::vector<std::pair<ColumnVector, FieldElement>>& rows,
    unsigned ambient_dim);

}  // namespace onepw
