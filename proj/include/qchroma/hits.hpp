#pragma once

#include <vector>

#include "qchroma/qarith.hpp"
#include "qchroma/report.hpp"
#include "qchroma/shapes.hpp"

namespace qchroma {

// Hit numbers H_0..H_n of a shape in its n x m board: H_j is the generating
// function over full n-rook placements with exactly j rooks inside the shape.
// Boards with more rows than columns admit no full placement, so every entry
// is zero there.
//
// Two independent routes:
//  - basis: the change-of-basis formula through rook numbers, falling
//    factorials, and the (x;q) products, with an exact division at the end;
//  - stat: direct enumeration of full placements, summing q^stat.
std::vector<QLaurent> hit_numbers_basis(const BoardShape& s);
std::vector<QLaurent> hit_numbers_stat(const BoardShape& s);

// The per-placement statistic behind the stat route.  rook_col[r-1] is the
// column of the rook in row r; the placement must use n distinct columns.
// A cell counts iff: no rook sits on it, no rook sits above it in its column,
// and the rook of its row is (inside the shape AND strictly right) when the
// cell is inside the shape, or (inside the shape OR strictly right) when it
// is outside.
int stat_statistic(const BoardShape& s, const std::vector<int>& rook_col);

// Square-board variant: coefficients of sum_i R_i [n-i]! prod_{k=n-i+1}^n
// (x - q^k).  Differs from hit_numbers_basis entrywise by the power shift
// q^(cells - k*n), which is checked here and on violation throws.
std::vector<QLaurent> gr_hit_square(const BoardShape& s);

// Hit number of the rectangle with j rows of width m on the N x N board, in
// closed form.  Requires 0 <= k <= j <= N and 0 <= m <= N; combinatorially
// impossible parameter corners (k > m, or j - k > N - m) give zero.
QLaurent rect_hit_closed_form(int N, int m, int j, int k);

// Hit vector of a shape equals that of the shape with a corner cell removed,
// plus a shifted two-term correction from the contracted shape.
CheckOutcome verify_del_contract(const BoardShape& s, CellRef e);

// Padding the board to a square multiplies the hit vector by a q-factorial;
// dropping an empty row divides out one q-number.
CheckOutcome verify_board_padding(const BoardShape& s);

// Three identities expanding weighted sums of hit numbers over column
// deletions, row deletions, and cell contractions.
CheckOutcome verify_hit_identities(const BoardShape& s, int k);

// Relations tying the shape's hit numbers on its own board to its hit numbers
// on the enlarged square boards, including an exact division by a q-number.
CheckOutcome verify_keyrels(const BoardShape& s);

}  // namespace qchroma
