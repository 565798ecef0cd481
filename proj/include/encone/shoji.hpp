#pragma once

#include "encone/partition.hpp"
#include "encone/polymatrix.hpp"
#include "encone/polynomial.hpp"
#include "encone/weylb.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace encone {

/// Number of semistandard tableaux of the given shape and content.
long long kostka_number(const Partition& shape, const Partition& content);

/// Modified Kostka polynomial of type A via the charge statistic:
/// K~_{lambda,pi}(t) = t^{n(pi)} K_{lambda,pi}(t^{-1})
///                   = sum over SSYT(lambda, pi) of t^{n(pi) - charge}.
IntPolynomial kostka_polynomial(const Partition& lambda, const Partition& pi);

/// Charge of a word with partition content (exposed for testing).
int word_charge(std::vector<int> word);

/// Full Kostka table for Q_n: runs the symmetric decomposition
/// P Lambda P^t = Omega under a linear extension of the partial order,
/// with the diagonal of P prescribed as t^{b(mu;nu)}. Construction verifies
/// exact reconstruction, vanishing of P off the order ideal (including at
/// incomparable pairs the extension alone would allow), P over Z[t] and
/// Lambda over Z[t^2]; any failure throws std::logic_error since it
/// falsifies the implementation rather than the input.
class KostkaTable {
public:
    explicit KostkaTable(int n, bool allow_large = false);
    /// Solve under an explicit linear extension (for uniqueness checks).
    static KostkaTable solve_with_order(const std::vector<Bipartition>& order);

    int n() const { return n_; }
    const std::vector<Bipartition>& labels() const { return labels_; }

    /// K~_{(upper),(lower)}(t); zero when lower is not below upper.
    const IntPolynomial& kostka(const Bipartition& upper, const Bipartition& lower) const;
    /// Diagonal entry of Lambda, an element of Z[t^2].
    const IntPolynomial& lambda_entry(const Bipartition& orbit) const;

    /// Local intersection-cohomology polynomial IC^{lower}_{upper}(t),
    /// extracted as K~ / t^{b(upper)} with t^2 -> t.
    IntPolynomial ic(const Bipartition& upper, const Bipartition& lower) const;

    /// Fibre Poincare polynomial of the resolution attached to flag_type
    /// over a point of the given orbit.
    IntPolynomial pi(const Bipartition& flag_type, const Bipartition& orbit) const;

    /// Orbit point-count polynomial: |O(F_q)| = theta(q).
    IntPolynomial theta(const Bipartition& orbit) const;

    /// Hall polynomial g_{rho;sigma}^{ambient}(t), counting v-containing
    /// x-stable subspaces with sub/quotient Jordan types (rho, sigma), by
    /// inversion of the unitriangular Kostka system.
    const IntPolynomial& hall(const Partition& rho, const Partition& sigma,
                              const Bipartition& ambient) const;

private:
    KostkaTable() = default;
    void solve(const std::vector<Bipartition>& order);
    int canonical_index(const Bipartition& b) const;

    int n_ = 0;
    std::vector<Bipartition> labels_;
    std::vector<std::vector<IntPolynomial>> p_;  // canonical row/col indices
    std::vector<IntPolynomial> lambda_;
    mutable std::map<Bipartition, std::map<std::pair<Partition, Partition>, IntPolynomial>>
        hall_cache_;
    mutable std::unique_ptr<std::mutex> hall_mutex_ = std::make_unique<std::mutex>();
};

/// Shared, memoized tables; n <= 5 by default, n = 6 behind the flag.
const KostkaTable& kostka_table(int n, bool allow_large = false);

struct CheckReport {
    bool ok = true;
    long long cases_checked = 0;
    std::vector<std::string> mismatches;
};

/// Verifies that the Kostka-weighted combination of character-theoretic
/// omega entries equals the double-coset matrix-sum formula, for every
/// pair of Q_n labels.
CheckReport omega_crosscheck(int n);

/// Verifies both type-A specializations against the charge-computed
/// polynomials: K~_{(0;l),(0;p)}(t) = t^{|l|} K~_{lp}(t^2) and
/// K~_{(l;0),(r;s)}(t) = K~_{l,r+s}(t^2).
CheckReport typeA_specialization_check(int n);

}  // namespace encone
