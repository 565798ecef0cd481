#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace encone {

/// Integer partition: nonincreasing positive parts, trailing zeros dropped.
/// part(i) is 1-indexed and reads 0 beyond the stored length, so formulas
/// from partition combinatorics transcribe directly.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Throws std::invalid_argument unless the sequence (after dropping
    /// trailing zeros) is nonincreasing and positive.
    explicit Partition(std::vector<int> parts);
    /// Sorts the given multiset of positive entries into a partition.
    static Partition from_multiset(std::vector<int> parts);

    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const;  // 1-indexed, 0 beyond length
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;
    int n_stat() const;  // n(lambda) = sum (i-1)*lambda_i

    /// Termwise sum.
    Partition plus(const Partition& o) const;
    /// Multiset union (parts merged and resorted), e.g. lambda ∪ lambda.
    Partition union_with(const Partition& o) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

/// Dominance order on partitions of equal size; partitions of different
/// sizes are never related (returns false).
bool dominance_leq(const Partition& a, const Partition& b);

std::vector<Partition> enumerate_partitions(int n);

/// Ordered pair of partitions (mu;nu); member of Q_n when |mu|+|nu| = n.
class Bipartition {
public:
    Bipartition() = default;
    Bipartition(Partition mu, Partition nu) : mu_(std::move(mu)), nu_(std::move(nu)) {}

    const Partition& mu() const { return mu_; }
    const Partition& nu() const { return nu_; }
    int n() const { return mu_.size() + nu_.size(); }
    int b_stat() const { return 2 * mu_.n_stat() + 2 * nu_.n_stat() + nu_.size(); }
    /// Orbit dimension n^2 - b(mu;nu).
    int orbit_dim() const { return n() * n() - b_stat(); }

    bool operator==(const Bipartition& o) const { return mu_ == o.mu_ && nu_ == o.nu_; }
    auto operator<=>(const Bipartition& o) const {
        if (auto c = mu_ <=> o.mu_; c != 0) return c;
        return nu_ <=> o.nu_;
    }

    std::string str() const { return "(" + mu_.str() + ";" + nu_.str() + ")"; }

private:
    Partition mu_, nu_;
};

/// The partial order on Q_n: interleaved prefix-sum inequalities
///   r1+s1+...+rk+sk       <= m1+n1+...+mk+nk
///   r1+s1+...+rk+sk+r_{k+1} <= m1+n1+...+mk+nk+m_{k+1}
/// for all k. Throws std::invalid_argument if the total sizes differ.
bool bipartition_leq(const Bipartition& a, const Bipartition& b);

/// Covering-relation classification: the clause (1)-(4) that witnesses
/// "b covers a", with the indices k, l appearing in that clause.
struct CoverType {
    int kind = 0;  // 1..4
    int k = 0;
    int l = 0;
    bool operator==(const CoverType& o) const = default;
};

/// Every clause of the covering classification matched by the pair; the
/// classification is sound only if this has at most one element.
std::vector<CoverType> cover_clause_matches(const Bipartition& lower, const Bipartition& upper);

/// Present iff upper covers lower, classified by the unique matching clause.
/// Throws std::logic_error if more than one clause matches.
std::optional<CoverType> covers(const Bipartition& lower, const Bipartition& upper);

/// All of Q_n in the canonical order: b nonincreasing, ties by the
/// interleaved composition lexicographically. This is a linear extension
/// of the partial order with the closure-minimum orbit first.
std::vector<Bipartition> enumerate_bipartitions(int n);

/// Column composition of the back-to-back diagram:
/// (mu^t_{mu_1}, ..., mu^t_1, nu^t_1, ..., nu^t_{nu_1}); entries sum to n.
std::vector<int> interleaved_composition(const Bipartition& bp);

/// (mu ∪ mu; nu ∪ nu), an element of Q_{2n}.
Bipartition doubled(const Bipartition& bp);

struct HasseEdge {
    Bipartition lower, upper;
    CoverType type;
};

/// All covering pairs of Q_n with their clause labels.
std::vector<HasseEdge> hasse(int n);

}  // namespace encone
