#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qchroma/errors.hpp"

namespace qchroma {

// Ambient board: rows x cols.  Rows are numbered 1..rows top-down and columns
// 1..cols left-to-right; every index convention in the project is translated
// to this frame at module boundaries.
struct Board {
    int rows = 0;
    int cols = 0;
    bool operator==(const Board&) const = default;
};

std::string board_str(const Board& b);  // "2x3" (rows x cols)
Board parse_board(const std::string& text);

struct CellRef {
    int row = 0;  // 1-based from the top
    int col = 0;  // 1-based from the left
    bool operator==(const CellRef&) const = default;
};

// A partition drawn in the top-left corner of its board.  Trailing zero parts
// are trimmed, so equality of values is equality of representations.
class BoardShape {
public:
    BoardShape(std::vector<int> parts, Board board);
    static BoardShape empty(Board board) { return BoardShape({}, board); }

    const std::vector<int>& parts() const { return parts_; }
    const Board& board() const { return board_; }
    int rows() const { return board_.rows; }
    int cols() const { return board_.cols; }

    int length() const { return static_cast<int>(parts_.size()); }  // nonzero rows
    int cells() const;
    int part(int r) const;  // 1-based; 0 beyond the last nonzero row
    int conj(int c) const;  // column height, 1-based; 0 beyond the first row's width
    bool contains(int r, int c) const;

    std::string str() const;  // "2,1"; the empty shape is "0"

    bool operator==(const BoardShape&) const = default;

private:
    std::vector<int> parts_;
    Board board_;
};

std::vector<int> parse_parts(const std::string& text);

BoardShape conjugate(const BoardShape& s);

// Remove column j of the diagram: parts >= j are decremented, the board loses
// a column.  1 <= j <= cols.
BoardShape delete_column(const BoardShape& s, int j);
// Remove row r: part r disappears, the board loses a row.  1 <= r <= rows;
// rows beyond the last nonzero part are legal (the shape is unchanged).
BoardShape delete_row(const BoardShape& s, int r);
// Remove row r and column c of a cell of the shape; board shrinks both ways.
BoardShape contract_cell(const BoardShape& s, int r, int c);

bool is_corner(const BoardShape& s, CellRef e);
std::vector<CellRef> corner_cells(const BoardShape& s);
// For a corner e: (shape with the single cell e removed, same board;
// contract_cell at e, smaller board).
std::pair<BoardShape, BoardShape> corner_ops(const BoardShape& s, CellRef e);

// Cells (i,j), i < j, of the staircase region below the lattice path that
// encodes the shape, relabelled to vertex pairs of the path's graph.  Built
// purely from the path word; graph_from_shape builds the same pair set from
// cliques plus the complement of the shape, and the two are asserted equal in
// tests.  Requires rows <= cols.   1-based, sorted.
std::vector<std::pair<int, int>> dyck_cells(const BoardShape& s);

// All partitions fitting the n x m board (m columns), each once, in a fixed
// order: by cell count, then lexicographically.  max_cells < 0 disables the
// size filter.
std::vector<BoardShape> enumerate_shapes(int m, int n, int max_cells = -1);

}  // namespace qchroma
