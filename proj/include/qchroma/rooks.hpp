#pragma once

#include <vector>

#include "qchroma/qarith.hpp"
#include "qchroma/report.hpp"
#include "qchroma/shapes.hpp"

namespace qchroma {

// Cells of the shape left standing after each rook cancels its own cell, the
// cells above it in its column, and the cells to its left in its row.
// Rooks must lie in the shape, pairwise non-attacking.
int inv_statistic(const BoardShape& s, const std::vector<CellRef>& rooks);

// Generating functions R_k = sum over k-rook non-attacking placements inside
// the shape of q^inv, for k = 0..length(shape).
std::vector<QLaurent> rook_numbers(const BoardShape& s);
QLaurent rook_number(const BoardShape& s, int k);  // zero beyond the valid range

// Number of k-rook placements, by a column-by-column count independent of the
// row-backtracking enumeration above.  Cross-checks R_k at q = 1.
Int placement_count(const BoardShape& s, int k);

// F(x) = sum_k R_k [x]_{len-k}, and independently the product of the shifted
// q-numbers [x + part_t - len + t].  Computes both and refuses to return on
// disagreement.
QLaurent f_eval(const BoardShape& s, int x);

// The denominator-cleared form of the ratio identity tying F(x-1) to F(x),
// compared exactly at enough integer points to separate the two sides.
CheckOutcome verify_f_ratio(const BoardShape& s);

// Three identities expanding weighted sums of R_k over column deletions, row
// deletions, and single-cell contractions of the shape.
CheckOutcome verify_rook_identities(const BoardShape& s, int k);

}  // namespace qchroma
