#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qchroma/qarith.hpp"
#include "qchroma/report.hpp"
#include "qchroma/shapes.hpp"

namespace qchroma {

// Graph on vertices 0..vertex_count-1 whose vertex order is part of the data:
// the ascent statistic below counts edges whose lower-numbered endpoint gets
// the smaller color.  Edges satisfy u < v and the list is sorted.
struct OrderedGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    bool operator==(const OrderedGraph&) const = default;
};

// The graph attached to a shape in an n x m board, on m+n vertices:
// vertices 0..n-1 are the board's rows top-down, vertices n..m+n-1 are the
// columns right-to-left (vertex v is column m+n-v).  Rows form a clique,
// columns form a clique, and row r is joined to column c exactly when (r,c)
// lies outside the shape.  For rows <= cols this is the same pair set as
// dyck_cells, shifted to 0-based.
OrderedGraph graph_from_shape(const BoardShape& s);

// A symmetric polynomial in a fixed number of variables, stored by orbit
// representative: keys are the weakly decreasing positive exponent vectors
// (trailing zeros trimmed, so at most vars() entries), and the stored
// coefficient is the coefficient of the representative monomial
// x_1^{k_1} ... x_len^{k_len}.  Zero coefficients are never stored.
class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(int vars);
    static SymPoly one(int vars);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, QLaurent>& terms() const { return terms_; }

    // key must be weakly decreasing, positive, and fit in vars() slots.
    void add_term(const std::vector<int>& key, const QLaurent& c);
    QLaurent coeff(const std::vector<int>& key) const;

    SymPoly scaled(const QLaurent& c) const;
    SymPoly& operator+=(const SymPoly& o);  // requires matching vars()
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }

    // The polynomial times x_{vars()+1}^d, read in vars()+1 variables.  Terms
    // whose representative would stop being weakly decreasing after the new
    // exponent is appended are dropped: their coefficients belong to orbits
    // already carried by other summands, so this is only used on sums known
    // to be symmetric in the larger variable set.
    SymPoly lifted(int d) const;

    bool operator==(const SymPoly&) const = default;

    std::string str() const;  // "[2,1]*(q+q^2) + [1,1,1]*(1+2q)"; "0" if zero

private:
    int vars_ = 0;
    std::map<std::vector<int>, QLaurent> terms_;
};

// Sum of q^(ascents) * x_{c(1)} ... x_{c(N)} over all proper colorings c of
// the graph with colors 1..colors, where an ascent is an edge (u,v), u < v,
// with c(u) < c(v).  Computed by direct enumeration; the representative
// bookkeeping of SymPoly is valid because the result is symmetric for these
// graphs (csf_by_color_counts checks that from scratch in tests).
SymPoly csf_bruteforce(const OrderedGraph& g, int colors);

// Same enumeration keyed by the full color-count vector (entry i is the
// number of vertices colored i+1), with no symmetry assumption.  Test
// support: symmetry of the result is a theorem, not an invariant of the
// enumeration, so tests verify it by comparing permuted count vectors.
std::map<std::vector<int>, QLaurent> csf_by_color_counts(const OrderedGraph& g, int colors);

// Memo table for the deletion/contraction recursion on shapes.  One engine
// per thread: entries are keyed by (parts, rows, cols, colors) and reused
// across shapes and boards.
class CsfEngine {
public:
    const SymPoly& eval(const BoardShape& s, int colors);
    size_t size() const { return memo_.size(); }

private:
    std::map<std::tuple<std::vector<int>, int, int, int>, SymPoly> memo_;
};

// Chromatic sum of graph_from_shape(s) via the recursion that peels off the
// largest color: the value in M colors is assembled from values in M-1
// colors of the shape itself, its single column/row deletions, and its
// single cell contractions.  With eng == nullptr a thread-local engine is
// used (and kept warm across calls).
SymPoly csf_recursive(const BoardShape& s, int colors, CsfEngine* eng = nullptr);

// Elementary symmetric polynomial e_k in the given number of variables
// (zero when k exceeds it, one when k == 0).
SymPoly esym(int k, int vars);
// p * e_k in p.vars() variables.  Coefficients are accumulated per product
// key by summing p over all ways to lower that key by a 0/1 vector with k
// ones, which is the direction that respects representative bookkeeping.
SymPoly mul_by_esym(const SymPoly& p, int k);

// Chromatic sum of the shape expressed through the full-width rectangles
// m^0, m^1, ..., m^n on the same board, weighted by the shape's hit numbers
// and divided (exactly) by [m][m-1]...[m-n+1].  Requires rows <= cols.
SymPoly gp_expansion(const BoardShape& s, int colors, CsfEngine* eng = nullptr);

// One summand of the elementary-basis expansion: coeff * e_outer * e_inner.
struct ETerm {
    QLaurent coeff;
    int outer = 0;
    int inner = 0;
};

// Elementary-basis expansion of the chromatic sum for shapes whose row count
// is at most their first part: term j (0 <= j <= length) pairs e_{m+n-j, j}
// with a hit number of the shape replayed on a square board.  Throws
// PreconditionViolation when length > first part.
std::vector<ETerm> an_e_terms(const BoardShape& s);
SymPoly an_expansion(const BoardShape& s, int colors);

// Identities tying the full-width rectangles m^k in an n x m board to their
// neighbors: the peel-largest-color recursion in closed form, and the two
// exchange relations that trade a column of the rectangle for a row of the
// board.  Requires 0 <= k <= n, m >= 1, colors >= 1.
CheckOutcome verify_rect_recursion(int m, int n, int k, int colors, CsfEngine* eng = nullptr);

}  // namespace qchroma
