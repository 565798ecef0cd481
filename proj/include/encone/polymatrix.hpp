#pragma once

#include "encone/partition.hpp"
#include "encone/polynomial.hpp"

#include <vector>

namespace encone {

/// Square matrix over Q(t) indexed by an ordered list of bipartition labels.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::vector<Bipartition> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<Bipartition>& labels() const { return labels_; }
    int index_of(const Bipartition& b) const;  // throws if absent

    RationalFunction& at(int i, int j) { return a_[i][j]; }
    const RationalFunction& at(int i, int j) const { return a_[i][j]; }
    const RationalFunction& at(const Bipartition& r, const Bipartition& c) const {
        return a_[index_of(r)][index_of(c)];
    }

    bool is_symmetric() const;
    bool operator==(const PolyMatrix& o) const { return labels_ == o.labels_ && a_ == o.a_; }

private:
    std::vector<Bipartition> labels_;
    std::vector<std::vector<RationalFunction>> a_;
};

struct LdlDecomposition {
    PolyMatrix lower;                  // unitriangular in the matrix's own order
    std::vector<RationalFunction> diag;
};

/// Symmetric decomposition omega = L D L^t with L unit lower triangular and
/// D diagonal, pivoting strictly in the matrix's index order (row 0 first).
/// Requires omega symmetric; a zero pivot means the supplied order is not
/// admissible and throws std::runtime_error.
LdlDecomposition ldl_decompose(const PolyMatrix& omega);

}  // namespace encone
