#pragma once

#include <optional>
#include <vector>

#include "chaincodes/chain_ring.hpp"

namespace chaincodes {

using RRow = std::vector<Scalar>;
using RMatrix = std::vector<RRow>;

/// Canonical echelon form of a submodule of R^n (Howell form).
///
/// Each row has a pivot column whose entry is exactly pi^a; entries of other rows
/// in that column are reduced below pi^a, and rows with later pivots span every
/// module element vanishing up to the pivot column. Rows are ordered by pivot column.
struct HowellForm {
    RMatrix rows;
    std::vector<std::size_t> pivot_cols;
    std::vector<unsigned> pivot_vals;
};

HowellForm howell_form(const ChainRing& ring, RMatrix rows, std::size_t cols);

/// True iff `v` lies in the row module of `form`.
bool module_contains(const ChainRing& ring, const HowellForm& form, RRow v);

/// Some x with x * m = b (m is N x cols), or nullopt when b is outside the row module of m.
std::optional<RRow> solve_left(const ChainRing& ring, const RMatrix& m, const RRow& b, std::size_t cols);

/// Generators (in Howell form) of { c in R^m : c * a = 0 } for an m x n matrix a.
HowellForm left_kernel(const ChainRing& ring, const RMatrix& a, std::size_t cols);

}  // namespace chaincodes
