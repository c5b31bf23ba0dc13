#include "framelift/linear_rep.hpp"

#include <ostream>

#include "framelift/errors.hpp"

namespace framelift {

RationalMatrix::RationalMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    if (cols() > kMaxElements) throw InputError("matrices are limited to 32 columns");
    data_.assign(static_cast<std::size_t>(rows()) * cols(), mpq_class(0));
}

namespace {

void require_loopless(const Multigraph& g) {
    if (!g.loops().empty()) throw InputError("matrix constructions need a loopless graph");
}

mpq_class to_mpq(const GroupValue& v) {
    mpq_class q(mpz_class(std::to_string(v.num())), mpz_class(std::to_string(v.den())));
    q.canonicalize();
    return q;
}

}  // namespace

RationalMatrix frame_matrix(const LabelledGraph& lg) {
    if (lg.group() != Group::PositiveRationals) throw InputError("the frame matrix needs multiplicative (Q+) labels");
    const Multigraph& g = lg.graph();
    require_loopless(g);
    RationalMatrix a(g.vertices(), g.edge_names());
    for (int e = 0; e < g.edge_count(); ++e) {
        a.at(g.edge(e).tail, e) = 1;
        a.at(g.edge(e).head, e) = -to_mpq(lg.label(e));
    }
    return a;
}

RationalMatrix lift_matrix(const LabelledGraph& lg) {
    if (lg.group() != Group::Integers) throw InputError("the lift matrix needs additive (Z) labels");
    const Multigraph& g = lg.graph();
    require_loopless(g);
    auto rows = g.vertices();
    rows.push_back("gamma");
    RationalMatrix a(rows, g.edge_names());
    for (int e = 0; e < g.edge_count(); ++e) {
        a.at(g.edge(e).head, e) = 1;
        a.at(g.edge(e).tail, e) = -1;
        a.at(g.vertex_count(), e) = to_mpq(lg.label(e));
    }
    return a;
}

int column_rank(const RationalMatrix& a, ElementSet cols) {
    const int m = a.rows();
    const std::vector<int> cs = cols.to_vector();
    const int k = static_cast<int>(cs.size());
    // Integer copy, each column multiplied by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> w(m, std::vector<mpz_class>(k));
    for (int j = 0; j < k; ++j) {
        mpz_class l = 1;
        for (int i = 0; i < m; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, cs[j]).get_den_mpz_t());
        for (int i = 0; i < m; ++i) w[i][j] = a.at(i, cs[j]).get_num() * (l / a.at(i, cs[j]).get_den());
    }
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < k && r < m; ++c) {
        int p = r;
        while (p < m && w[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(w[p], w[r]);
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < k; ++j) {
                mpz_class t = w[r][c] * w[i][j] - w[i][c] * w[r][j];
                mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w[i][c] = 0;
        }
        prev = w[r][c];
        ++r;
    }
    return r;
}

ExplicitMatroid column_matroid(const RationalMatrix& a) {
    const ElementSet all = ElementSet::full(a.cols());
    const int r = column_rank(a, all);
    std::vector<ElementSet> bases;
    for_each_subset_of_size(all, r, [&](ElementSet s) {
        if (column_rank(a, s) == r) bases.push_back(s);
    });
    return ExplicitMatroid(a.col_labels(), std::move(bases));
}

void write_matrix(std::ostream& os, const RationalMatrix& a) {
    os << "row";
    for (auto& c : a.col_labels()) os << '\t' << c;
    os << '\n';
    for (int i = 0; i < a.rows(); ++i) {
        os << a.row_labels()[i];
        for (int j = 0; j < a.cols(); ++j) os << '\t' << a.at(i, j).get_num() << '/' << a.at(i, j).get_den();
        os << '\n';
    }
}

}  // namespace framelift
