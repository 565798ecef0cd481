#include "encone/polymatrix.hpp"

#include <stdexcept>

namespace encone {

PolyMatrix::PolyMatrix(std::vector<Bipartition> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw std::invalid_argument("duplicate matrix label");
    a_.assign(labels_.size(), std::vector<RationalFunction>(labels_.size()));
}

int PolyMatrix::index_of(const Bipartition& b) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == b) return static_cast<int>(i);
    throw std::out_of_range("label not in matrix index");
}

bool PolyMatrix::is_symmetric() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (a_[i][j] != a_[j][i]) return false;
    return true;
}

LdlDecomposition ldl_decompose(const PolyMatrix& omega) {
    if (!omega.is_symmetric()) throw std::invalid_argument("ldl_decompose: matrix not symmetric");
    const int n = omega.size();
    LdlDecomposition out{PolyMatrix(omega.labels()), {}};
    out.diag.assign(n, RationalFunction());
    // Column by column: d_j = a_jj - sum_m l_jm^2 d_m,
    //                   l_ij = (a_ij - sum_m l_im l_jm d_m) / d_j  (i > j).
    for (int j = 0; j < n; ++j) {
        RationalFunction d = omega.at(j, j);
        for (int m = 0; m < j; ++m)
            d = d - out.lower.at(j, m) * out.lower.at(j, m) * out.diag[m];
        if (d.is_zero()) throw std::runtime_error("ldl_decompose: zero pivot, order not admissible");
        out.diag[j] = d;
        out.lower.at(j, j) = RationalFunction(IntPolynomial(1));
        for (int i = j + 1; i < n; ++i) {
            RationalFunction s = omega.at(i, j);
            for (int m = 0; m < j; ++m)
                s = s - out.lower.at(i, m) * out.lower.at(j, m) * out.diag[m];
            out.lower.at(i, j) = s / d;
        }
    }
    return out;
}

}  // namespace encone
