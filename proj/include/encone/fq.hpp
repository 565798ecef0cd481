#pragma once

#include "encone/partition.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace encone::fq {

using Vec = std::vector<std::uint8_t>;  // coordinates mod q

/// Dense matrix over the prime field F_q. Vectors act as columns:
/// (x v)_i = sum_j x(i,j) v_j.
struct FqMatrix {
    int q = 2;
    int n = 0;
    std::vector<std::uint8_t> a;  // row-major

    FqMatrix() = default;
    FqMatrix(int q_, int n_) : q(q_), n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}
    std::uint8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    Vec apply(const Vec& v) const;
    FqMatrix mul(const FqMatrix& o) const;
    bool is_zero() const;
    bool operator==(const FqMatrix& o) const = default;
};

struct FqPair {
    Vec v;
    FqMatrix x;
};

/// Subspace of F_q^n held as a reduced-echelon basis; the canonical form
/// makes equality and ordering structural.
struct Subspace {
    int q = 2;
    int n = 0;
    std::vector<Vec> rows;

    static Subspace span(int q, int n, const std::vector<Vec>& generators);
    int dim() const { return static_cast<int>(rows.size()); }
    bool contains(const Vec& v) const;
    bool contains_subspace(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return rows == o.rows; }
    bool operator<(const Subspace& o) const { return rows < o.rows; }
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime(int q);

int rank(const FqMatrix& m);
std::vector<Vec> nullspace(const FqMatrix& m);
bool is_nilpotent(const FqMatrix& x);

/// Jordan type from ranks of powers; rejects non-nilpotent input.
Partition jordan_type(const FqMatrix& x);

/// Basis of E^x = {y : xy = yx}, by solving the linear system.
std::vector<FqMatrix> centralizer_basis(const FqMatrix& x);

/// E^x v: the span of the images of v under a centralizer basis.
Subspace exv_space(const Vec& v, const FqMatrix& x);

/// Jordan type of the restriction of x to the x-stable subspace w.
Partition restricted_type(const FqMatrix& x, const Subspace& w);
/// Jordan type of the induced map on V / w.
Partition quotient_type(const FqMatrix& x, const Subspace& w);

/// Orbit label via the restriction/quotient criterion:
/// mu = type of x|_{E^x v}, nu = type of x|_{V/E^x v}.
Bipartition classify_orbit(const FqPair& p);

struct NormalBasis {
    /// blocks[i][j-1] = v_{ij}; x v_{ij} = v_{i,j-1}, x v_{i1} = 0.
    std::vector<std::vector<Vec>> blocks;
    Bipartition type;
};

/// Constructive normal basis: Jordan basis, per-block truncation of v, then
/// the two adjacent-block repair moves until (mu;nu) is a bipartition.
/// Independent of classify_orbit.
NormalBasis normal_basis(const FqPair& p);

/// dim F[x]v == mu_1 and type of x on V/F[x]v == (nu_1+mu_2, nu_2+mu_3, ...).
bool quotient_type_check(const FqPair& p);

/// The canonical flag W_0 = 0 c W_1 c ... c W_{mu_1+nu_1} = V with
/// W_k = x^{mu_1-k} E^x v (k < mu_1), E^x v (k = mu_1),
/// (x^{k-mu_1})^{-1} E^x v (k > mu_1).
std::vector<Subspace> flag_w(const FqPair& p);

/// Deterministic representative built from a normal basis: Jordan blocks of
/// sizes mu_i + nu_i with v the sum of the v_{i,mu_i}.
FqPair orbit_representative(int q, const Bipartition& bp);

/// All nilpotent matrices by the x^n = 0 filter over the full matrix space.
/// Budget: n <= 3, or n = 4 with q = 2 behind `extended`.
std::vector<FqMatrix> enumerate_nilpotents(int n, int q, bool extended = false);

/// Orbit sizes over F_q: counts of (v,x) by classify_orbit; the counts sum
/// to q^{n^2}. Enumeration is chunked over disjoint slices of the matrix
/// space and merged by addition. threads = 0 picks the hardware count.
std::map<Bipartition, long long> count_orbits(int n, int q, bool extended = false,
                                              int threads = 0);

/// Number of partial flags of the given type with v in V_{mu_1} and
/// x(V_k) in V_{k-1}. Budget: n <= 3, or n = 4 with q = 2.
long long count_fiber(const FqPair& p, const Bipartition& flag_type);

/// Number of x-stable subspaces W containing v with type(x|_W) = rho and
/// type(x|_{V/W}) = sigma. Budget: n <= 4, q <= 3.
long long count_hall(const FqPair& p, const Partition& rho, const Partition& sigma);

/// Closure membership via the subspace criterion: some W of dimension |mu|
/// with v in W, x(W) c W, type(x|_W) <= mu, type(x|_{V/W}) <= nu.
/// Budget: n <= 4 for q = 2, n <= 3 for q = 3.
bool closure_member(const FqPair& p, const Bipartition& target);

/// All subspaces of dimension k in F_q^n (cached), in canonical order.
const std::vector<Subspace>& subspaces_of_dim(int q, int n, int k);

}  // namespace encone::fq
