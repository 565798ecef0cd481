#pragma once

#include "encone/partition.hpp"
#include "encone/polymatrix.hpp"
#include "encone/polynomial.hpp"

#include <vector>

namespace encone {

/// Conjugacy-class label of W_n: lengths of positive and negative cycles.
struct SignedCycleType {
    Partition positive, negative;
    int n() const { return positive.size() + negative.size(); }
    bool operator==(const SignedCycleType& o) const = default;
};

/// |class| = 2^n n! / (2^{l(alpha)+l(beta)} z_alpha z_beta).
long long class_size(const SignedCycleType& cls);

/// Symmetric-group character chi^lambda on the class of cycle type rho,
/// by the Murnaghan-Nakayama recursion (memoized).
long long sn_character(const Partition& lambda, const Partition& cycle_type);

/// det(t - w) on the reflection representation:
/// prod (t^{alpha_i} - 1) * prod (t^{beta_j} + 1); monic of degree n.
IntPolynomial reflection_charpoly(const SignedCycleType& cls);

/// Character data of W_n: conjugacy classes, the irreducible characters
/// chi^{mu;nu} indexed by Q_n, and everything needed for fake degrees.
/// The labeling is fixed by chi^{mu;nu} = Ind(chi^mu x delta chi^nu), which
/// makes chi^{(n);0} trivial and chi^{rho;sigma} (x) eps = chi^{sigma^t;rho^t}.
class CharacterTable {
public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    long long group_order() const { return group_order_; }
    const std::vector<Bipartition>& labels() const { return labels_; }
    /// Class i has the signed cycle type (labels()[i].mu(); labels()[i].nu()).
    const std::vector<SignedCycleType>& classes() const { return classes_; }
    const std::vector<long long>& sizes() const { return sizes_; }
    long long value(int char_idx, int class_idx) const { return values_[char_idx][class_idx]; }
    long long value(const Bipartition& label, int class_idx) const;
    int label_index(const Bipartition& label) const;

    /// Sign character of the reflection representation.
    long long epsilon(int class_idx) const { return epsilon_[class_idx]; }
    /// delta = product of coordinate signs; delta*eps pulls back the S_n sign.
    long long delta(int class_idx) const { return delta_[class_idx]; }
    const IntPolynomial& charpoly(int class_idx) const { return charpolys_[class_idx]; }

    /// Fake degree of the class function with the given per-class values:
    /// (1/|W_n|) sum_w chi(w) eps(w) prod_a (t^{2a}-1) / det(t-w).
    /// Throws std::invalid_argument if the class sum does not divide exactly.
    IntPolynomial fake_degree(const std::vector<long long>& values) const;

    /// omega_{(a),(b)} = t^{n^2} R(chi^a (x) chi^b (x) eps), as a symmetric
    /// matrix of integer polynomials over Q_n in the canonical order.
    PolyMatrix omega_matrix() const;

private:
    int n_;
    long long group_order_;
    std::vector<Bipartition> labels_;
    std::vector<SignedCycleType> classes_;
    std::vector<long long> sizes_;
    std::vector<std::vector<long long>> values_;
    std::vector<long long> epsilon_, delta_;
    std::vector<IntPolynomial> charpolys_;
    std::vector<IntPolynomial> quotients_;  // prod (t^{2a}-1) / charpoly, per class
};

/// Irreducible character value chi^{label}(cls) without building a table.
long long wn_character(const Bipartition& label, const SignedCycleType& cls);

/// The double-coset matrix-sum form of the pairing: t^{b(a)+b(b)} times the
/// sum over matrices with row sums interleaved_composition(a) and column
/// sums interleaved_composition(b) of
///   t^{2(C(n,2)-n(mu+nu)-n(mu'+nu')+sum C(m_ij,2)+m_{<=mu_1,<=mu_1'})}
///   * prod_{a<=n}(t^{2a}-1) / prod_{ij} prod_{a<=m_ij}(t^{2a}-1).
/// Equals the Kostka-weighted combination of omega_matrix entries.
IntPolynomial omega_combinatorial(const Bipartition& a, const Bipartition& b);

}  // namespace encone
