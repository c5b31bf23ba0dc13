#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "framelift/graph.hpp"
#include "framelift/matroid.hpp"

namespace framelift {

// Exact rational matrix with labelled rows (vertices, maybe a gain row) and columns (edges).
class RationalMatrix {
public:
    RationalMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    int rows() const { return static_cast<int>(row_labels_.size()); }
    int cols() const { return static_cast<int>(col_labels_.size()); }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    const mpq_class& at(int r, int c) const { return data_[r * cols() + c]; }
    mpq_class& at(int r, int c) { return data_[r * cols() + c]; }

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<mpq_class> data_;
};

// Column e: 1 at the tail, -gamma(e) at the head. Needs Q+ labels and no loops.
RationalMatrix frame_matrix(const LabelledGraph& lg);
// Signed incidence (+1 at the head, -1 at the tail) with gamma appended as a last row.
// Needs Z labels and no loops.
RationalMatrix lift_matrix(const LabelledGraph& lg);

// Rank of a set of columns. Each column is scaled to integers, then fraction-free (Bareiss)
// elimination pivots on the first nonzero entry, rows in order.
int column_rank(const RationalMatrix& a, ElementSet cols);
ExplicitMatroid column_matroid(const RationalMatrix& a);

// Header row of column labels, then one row per line; entries "p/q", tab separated.
void write_matrix(std::ostream& os, const RationalMatrix& a);

}  // namespace framelift
