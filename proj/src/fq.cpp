#include "encone/fq.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace encone::fq {

namespace {

inline int addm(int a, int b, int q) { return (a + b) % q; }
inline int subm(int a, int b, int q) { return (a - b + q) % q; }
inline int mulm(int a, int b, int q) { return (a * b) % q; }

int invm(int a, int q) {
    for (int i = 1; i < q; ++i)
        if (mulm(a, i, q) == 1) return i;
    throw std::logic_error("not invertible");
}

// In-place row reduction to reduced echelon form; returns pivot columns.
std::vector<int> rref(std::vector<Vec>& rows, int q) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int cols = static_cast<int>(rows[0].size());
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        int inv = invm(rows[r][c], q);
        for (int j = 0; j < cols; ++j) rows[r][j] = mulm(rows[r][j], inv, q);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int f = rows[i][c];
            for (int j = 0; j < cols; ++j)
                rows[i][j] = subm(rows[i][j], mulm(f, rows[r][j], q), q);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

bool reduces_to_zero(const std::vector<Vec>& rref_rows, const std::vector<int>& pivots,
                     Vec v, int q) {
    for (std::size_t i = 0; i < rref_rows.size(); ++i) {
        int f = v[pivots[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = subm(v[j], mulm(f, rref_rows[i][j], q), q);
    }
    return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

FqMatrix matrix_power(const FqMatrix& x, int k) {
    FqMatrix r(x.q, x.n);
    for (int i = 0; i < x.n; ++i) r.at(i, i) = 1;
    for (int i = 0; i < k; ++i) r = r.mul(x);
    return r;
}

// Solve B c = v for a column basis matrix B; the basis is known independent.
Vec solve_coordinates(const std::vector<Vec>& basis_columns, const Vec& v, int q) {
    const int n = static_cast<int>(v.size());
    const int m = static_cast<int>(basis_columns.size());
    std::vector<Vec> aug(n, Vec(m + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = basis_columns[j][i];
        aug[i][m] = v[i];
    }
    auto pivots = rref(aug, q);
    Vec c(m, 0);
    for (std::size_t r = 0; r < aug.size(); ++r) {
        if (pivots[r] == m) throw std::logic_error("inconsistent coordinate solve");
        c[pivots[r]] = aug[r][m];
    }
    return c;
}

}  // namespace

Vec FqMatrix::apply(const Vec& v) const {
    Vec r(n, 0);
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = 0; j < n; ++j) acc += at(i, j) * v[j];
        r[i] = static_cast<std::uint8_t>(acc % q);
    }
    return r;
}

FqMatrix FqMatrix::mul(const FqMatrix& o) const {
    FqMatrix r(q, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int f = at(i, k);
            if (!f) continue;
            for (int j = 0; j < n; ++j)
                r.at(i, j) = static_cast<std::uint8_t>((r.at(i, j) + f * o.at(k, j)) % q);
        }
    return r;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](std::uint8_t x) { return x == 0; });
}

Subspace Subspace::span(int q, int n, const std::vector<Vec>& generators) {
    Subspace s;
    s.q = q;
    s.n = n;
    s.rows = generators;
    rref(s.rows, q);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    std::vector<int> pivots;
    for (const auto& r : rows)
        pivots.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](std::uint8_t x) {
                             return x != 0;
                         }) - r.begin()));
    return reduces_to_zero(rows, pivots, v, q);
}

bool Subspace::contains_subspace(const Subspace& other) const {
    return std::all_of(other.rows.begin(), other.rows.end(),
                       [&](const Vec& v) { return contains(v); });
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

int rank(const FqMatrix& m) {
    std::vector<Vec> rows(m.n, Vec(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) rows[i][j] = m.at(i, j);
    rref(rows, m.q);
    return static_cast<int>(rows.size());
}

std::vector<Vec> nullspace(const FqMatrix& m) {
    std::vector<Vec> rows(m.n, Vec(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) rows[i][j] = m.at(i, j);
    auto pivots = rref(rows, m.q);
    std::vector<bool> is_pivot(m.n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.n; ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            v[pivots[r]] = static_cast<std::uint8_t>((m.q - rows[r][c]) % m.q);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_nilpotent(const FqMatrix& x) { return matrix_power(x, x.n).is_zero(); }

Partition jordan_type(const FqMatrix& x) {
    if (!is_nilpotent(x)) throw std::invalid_argument("jordan_type: matrix not nilpotent");
    // transpose-part k = rank(x^{k-1}) - rank(x^k)
    std::vector<int> tparts;
    FqMatrix p = matrix_power(x, 0);
    int prev = x.n;
    while (prev > 0) {
        p = p.mul(x);
        int r = rank(p);
        tparts.push_back(prev - r);
        prev = r;
    }
    return Partition(std::move(tparts)).transpose();
}

std::vector<FqMatrix> centralizer_basis(const FqMatrix& x) {
    const int n = x.n, q = x.q;
    // xy - yx = 0: n^2 equations in the n^2 entries of y.
    FqMatrix sys(q, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int eq = i * n + j;
            for (int k = 0; k < n; ++k) {
                sys.at(eq, k * n + j) =
                    static_cast<std::uint8_t>((sys.at(eq, k * n + j) + x.at(i, k)) % q);
                sys.at(eq, i * n + k) =
                    static_cast<std::uint8_t>((sys.at(eq, i * n + k) + q - x.at(k, j)) % q);
            }
        }
    std::vector<FqMatrix> basis;
    for (const auto& v : nullspace(sys)) {
        FqMatrix y(q, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y.at(i, j) = v[i * n + j];
        basis.push_back(std::move(y));
    }
    return basis;
}

Subspace exv_space(const Vec& v, const FqMatrix& x) {
    std::vector<Vec> gens;
    for (const auto& y : centralizer_basis(x)) gens.push_back(y.apply(v));
    return Subspace::span(x.q, x.n, gens);
}

Partition restricted_type(const FqMatrix& x, const Subspace& w) {
    // Ranks of powers of x on w: dim span{x^k r : r in basis of w}.
    std::vector<int> tparts;
    std::vector<Vec> cur = w.rows;
    int prev = w.dim();
    while (prev > 0) {
        for (auto& r : cur) r = x.apply(r);
        std::vector<Vec> copy = cur;
        rref(copy, x.q);
        int rk = static_cast<int>(copy.size());
        tparts.push_back(prev - rk);
        prev = rk;
    }
    return Partition(std::move(tparts)).transpose();
}

Partition quotient_type(const FqMatrix& x, const Subspace& w) {
    const int n = x.n, q = x.q;
    // Ranks of x^k on V/w: dim(x^k V + w) - dim w.
    std::vector<int> tparts;
    int prev = n - w.dim();
    FqMatrix p = matrix_power(x, 0);
    while (prev > 0) {
        p = p.mul(x);
        std::vector<Vec> gens = w.rows;
        for (int c = 0; c < n; ++c) {
            Vec e(n, 0);
            e[c] = 1;
            gens.push_back(p.apply(e));
        }
        rref(gens, q);
        int rk = static_cast<int>(gens.size()) - w.dim();
        tparts.push_back(prev - rk);
        prev = rk;
    }
    return Partition(std::move(tparts)).transpose();
}

Bipartition classify_orbit(const FqPair& p) {
    Subspace w = exv_space(p.v, p.x);
    return Bipartition(restricted_type(p.x, w), quotient_type(p.x, w));
}

namespace {

// Jordan basis: blocks[i][j-1] = v_{ij}, x v_{ij} = v_{i,j-1}, sorted by
// block length nonincreasing.
std::vector<std::vector<Vec>> jordan_basis(const FqMatrix& x) {
    const int n = x.n, q = x.q;
    Partition lam = jordan_type(x);
    Partition lt = lam.transpose();
    std::vector<std::pair<Vec, int>> tops;  // (top vector, chain length)
    std::vector<Vec> socle;                 // rref accumulator of chain bottoms
    std::vector<int> socle_pivots;
    auto socle_contains = [&](const Vec& v) {
        return reduces_to_zero(socle, socle_pivots, v, q);
    };
    auto socle_add = [&](const Vec& v) {
        socle.push_back(v);
        socle_pivots = rref(socle, q);
    };
    for (int j = lam.part(1); j >= 1; --j) {
        int needed = lt.part(j) - static_cast<int>(tops.size());
        if (needed <= 0) continue;
        FqMatrix xj = matrix_power(x, j);
        FqMatrix xj1 = matrix_power(x, j - 1);
        for (const auto& u : nullspace(xj)) {
            Vec w = xj1.apply(u);
            if (socle_contains(w)) continue;
            tops.emplace_back(u, j);
            socle_add(w);
            if (--needed == 0) break;
        }
        if (needed != 0) throw std::logic_error("jordan_basis: chain extraction failed");
    }
    std::stable_sort(tops.begin(), tops.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::vector<Vec>> blocks;
    for (const auto& [top, len] : tops) {
        std::vector<Vec> block(len);
        Vec cur = top;
        for (int j = len; j >= 1; --j) {
            block[j - 1] = cur;
            cur = x.apply(cur);
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace

NormalBasis normal_basis(const FqPair& p) {
    const int q = p.x.q;
    auto blocks = jordan_basis(p.x);
    const int nb = static_cast<int>(blocks.size());
    std::vector<int> lam(nb), mu(nb, 0);

    for (int i = 0; i < nb; ++i) lam[i] = static_cast<int>(blocks[i].size());

    auto flatten = [&]() {
        std::vector<Vec> cols;
        for (const auto& b : blocks) cols.insert(cols.end(), b.begin(), b.end());
        return cols;
    };
    // Rewrite block i so the v-component becomes the single vector v_{i,mu_i}.
    auto truncate_pass = [&]() {
        Vec c = solve_coordinates(flatten(), p.v, q);
        int off = 0;
        for (int i = 0; i < nb; ++i) {
            mu[i] = 0;
            for (int j = lam[i]; j >= 1; --j)
                if (c[off + j - 1] != 0) { mu[i] = j; break; }
            bool clean = mu[i] == 0 ||
                         (c[off + mu[i] - 1] == 1 &&
                          std::count_if(c.begin() + off, c.begin() + off + lam[i],
                                        [](std::uint8_t z) { return z != 0; }) == 1);
            if (mu[i] != 0 && !clean) {
                int nu_i = lam[i] - mu[i];
                Vec top(p.x.n, 0);
                for (int j = 1; j <= mu[i]; ++j) {
                    int f = c[off + j - 1];
                    if (!f) continue;
                    const Vec& b = blocks[i][j + nu_i - 1];
                    for (int t = 0; t < p.x.n; ++t)
                        top[t] = static_cast<std::uint8_t>((top[t] + f * b[t]) % q);
                }
                Vec cur = top;
                for (int j = lam[i]; j >= 1; --j) {
                    blocks[i][j - 1] = cur;
                    cur = p.x.apply(cur);
                }
            }
            off += lam[i];
        }
    };

    truncate_pass();
    const int cap = 4 * p.x.n * p.x.n + 8;
    for (int iter = 0;; ++iter) {
        if (iter > cap) throw std::logic_error("normal_basis: repair loop did not terminate");
        int bad_mu = -1, bad_nu = -1;
        for (int i = 0; i + 1 < nb; ++i) {
            if (bad_mu < 0 && mu[i] < mu[i + 1]) bad_mu = i;
            if (bad_nu < 0 && lam[i] - mu[i] < lam[i + 1] - mu[i + 1]) bad_nu = i;
        }
        if (bad_mu < 0 && bad_nu < 0) break;
        if (bad_mu >= 0) {
            // subtract block bad_mu from block bad_mu+1, aligned at the left
            int i = bad_mu;
            for (int j = 1; j <= lam[i + 1]; ++j)
                for (int t = 0; t < p.x.n; ++t)
                    blocks[i + 1][j - 1][t] = static_cast<std::uint8_t>(
                        (blocks[i + 1][j - 1][t] + q - blocks[i][j - 1][t]) % q);
        } else {
            // subtract block bad_nu+1 from block bad_nu, aligned at the right
            int i = bad_nu;
            int shift = lam[i] - lam[i + 1];
            for (int j = shift + 1; j <= lam[i]; ++j)
                for (int t = 0; t < p.x.n; ++t)
                    blocks[i][j - 1][t] = static_cast<std::uint8_t>(
                        (blocks[i][j - 1][t] + q - blocks[i + 1][j - shift - 1][t]) % q);
        }
        truncate_pass();
    }

    std::vector<int> nu(nb);
    for (int i = 0; i < nb; ++i) nu[i] = lam[i] - mu[i];
    NormalBasis out;
    out.blocks = std::move(blocks);
    out.type = Bipartition(Partition(std::vector<int>(mu)), Partition(std::vector<int>(nu)));
    return out;
}

bool quotient_type_check(const FqPair& p) {
    Bipartition type = classify_orbit(p);
    const int n = p.x.n, q = p.x.q;
    std::vector<Vec> gens;
    Vec cur = p.v;
    for (int k = 0; k < n; ++k) {
        gens.push_back(cur);
        cur = p.x.apply(cur);
    }
    Subspace fxv = Subspace::span(q, n, gens);
    if (fxv.dim() != type.mu().part(1)) return false;
    std::vector<int> expected;
    int len = std::max(type.nu().length(), type.mu().length());
    for (int i = 1; i <= len; ++i) {
        int e = type.nu().part(i) + type.mu().part(i + 1);
        if (e > 0) expected.push_back(e);
    }
    return quotient_type(p.x, fxv) == Partition(std::move(expected));
}

namespace {

Subspace image_space(const FqMatrix& m, const Subspace& s) {
    std::vector<Vec> gens;
    for (const auto& r : s.rows) gens.push_back(m.apply(r));
    return Subspace::span(m.q, m.n, gens);
}

Subspace preimage_space(const FqMatrix& m, const Subspace& s) {
    const int n = m.n, q = m.q;
    // s = {u : A u = 0} where the rows of A are the functionals vanishing
    // on s, i.e. the nullspace of the basis-row matrix R.
    FqMatrix rmat(q, n);
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        for (int j = 0; j < n; ++j) rmat.at(static_cast<int>(i), j) = s.rows[i][j];
    std::vector<Vec> funcs = nullspace(rmat);
    // preimage = {z : A m z = 0}
    FqMatrix am(q, n);
    for (std::size_t i = 0; i < funcs.size(); ++i) {
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int k = 0; k < n; ++k) acc += funcs[i][k] * m.at(k, j);
            am.at(static_cast<int>(i), j) = static_cast<std::uint8_t>(acc % q);
        }
    }
    return Subspace::span(q, n, nullspace(am));
}

}  // namespace

std::vector<Subspace> flag_w(const FqPair& p) {
    Bipartition type = classify_orbit(p);
    const int mu1 = type.mu().part(1), nu1 = type.nu().part(1);
    Subspace e = exv_space(p.v, p.x);
    std::vector<Subspace> flag;
    for (int k = 0; k <= mu1 + nu1; ++k) {
        if (k < mu1)
            flag.push_back(image_space(matrix_power(p.x, mu1 - k), e));
        else if (k == mu1)
            flag.push_back(e);
        else
            flag.push_back(preimage_space(matrix_power(p.x, k - mu1), e));
    }
    return flag;
}

FqPair orbit_representative(int q, const Bipartition& bp) {
    const int n = bp.n();
    FqPair p{Vec(n, 0), FqMatrix(q, n)};
    int off = 0;
    int len = std::max(bp.mu().length(), bp.nu().length());
    for (int i = 1; i <= len; ++i) {
        int lam = bp.mu().part(i) + bp.nu().part(i);
        for (int j = 2; j <= lam; ++j) p.x.at(off + j - 2, off + j - 1) = 1;
        if (bp.mu().part(i) > 0) p.v[off + bp.mu().part(i) - 1] = 1;
        off += lam;
    }
    return p;
}

std::vector<FqMatrix> enumerate_nilpotents(int n, int q, bool extended) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    double space = std::pow(static_cast<double>(q), n * n);
    bool within = (n <= 3 && q <= 3) || (extended && n == 4 && q == 2);
    if (!within) {
        std::ostringstream os;
        os << "enumeration budget exceeded: q^(n^2) = " << space << " matrices";
        throw BudgetError(os.str());
    }
    std::vector<FqMatrix> out;
    long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    for (long long idx = 0; idx < total; ++idx) {
        FqMatrix m(q, n);
        long long rest = idx;
        for (int c = 0; c < n * n; ++c) {
            m.a[c] = static_cast<std::uint8_t>(rest % q);
            rest /= q;
        }
        if (is_nilpotent(m)) out.push_back(std::move(m));
    }
    return out;
}

std::map<Bipartition, long long> count_orbits(int n, int q, bool extended, int threads) {
    std::vector<FqMatrix> nilpotents = enumerate_nilpotents(n, q, extended);
    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<int>(threads, 8);
    long long qe = 1;
    for (int i = 0; i < n; ++i) qe *= q;

    std::vector<std::map<Bipartition, long long>> partial(threads);
    std::vector<std::thread> pool;
    std::size_t chunk = (nilpotents.size() + threads - 1) / threads;
    for (int tdx = 0; tdx < threads; ++tdx) {
        pool.emplace_back([&, tdx]() {
            std::size_t lo = tdx * chunk, hi = std::min(nilpotents.size(), lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) {
                const FqMatrix& x = nilpotents[i];
                auto cb = centralizer_basis(x);
                for (long long vi = 0; vi < qe; ++vi) {
                    Vec v(n);
                    long long rest = vi;
                    for (int c = 0; c < n; ++c) {
                        v[c] = static_cast<std::uint8_t>(rest % q);
                        rest /= q;
                    }
                    std::vector<Vec> gens;
                    gens.reserve(cb.size());
                    for (const auto& y : cb) gens.push_back(y.apply(v));
                    Subspace w = Subspace::span(q, n, gens);
                    Bipartition label(restricted_type(x, w), quotient_type(x, w));
                    ++partial[tdx][label];
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    std::map<Bipartition, long long> counts;
    for (const auto& m : partial)
        for (const auto& [k, c] : m) counts[k] += c;
    return counts;
}

const std::vector<Subspace>& subspaces_of_dim(int q, int n, int k) {
    static std::map<std::tuple<int, int, int>, std::vector<Subspace>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(q, n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // Enumerate reduced-echelon bases directly: choose pivot columns, then
    // fill the free entries (right of each pivot, outside pivot columns).
    std::vector<Subspace> all;
    std::vector<int> pivots(k);
    auto choose = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            std::vector<std::pair<int, int>> free_cells;
            for (int r = 0; r < k; ++r)
                for (int c = pivots[r] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                        free_cells.emplace_back(r, c);
            long long total = 1;
            for (std::size_t i = 0; i < free_cells.size(); ++i) total *= q;
            for (long long idx = 0; idx < total; ++idx) {
                Subspace s;
                s.q = q;
                s.n = n;
                s.rows.assign(k, Vec(n, 0));
                for (int r = 0; r < k; ++r) s.rows[r][pivots[r]] = 1;
                long long rest = idx;
                for (const auto& [r, c] : free_cells) {
                    s.rows[r][c] = static_cast<std::uint8_t>(rest % q);
                    rest /= q;
                }
                all.push_back(std::move(s));
            }
            return;
        }
        for (int c = start; c <= n - (k - depth); ++c) {
            pivots[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    if (k == 0) {
        Subspace s;
        s.q = q;
        s.n = n;
        all.push_back(s);
    } else {
        choose(choose, 0, 0);
    }
    std::sort(all.begin(), all.end());
    return cache.emplace(key, std::move(all)).first->second;
}

long long count_fiber(const FqPair& p, const Bipartition& flag_type) {
    const int n = p.x.n, q = p.x.q;
    if (!((n <= 3 && q <= 3) || (n == 4 && q == 2)))
        throw BudgetError("count_fiber: flag budget is n <= 3, or n = 4 with q = 2");
    const int mu1 = flag_type.mu().part(1), nu1 = flag_type.nu().part(1);
    const int musz = flag_type.mu().size();
    Partition mt = flag_type.mu().transpose(), nt = flag_type.nu().transpose();
    std::vector<int> dims(mu1 + nu1 + 1, 0);
    for (int i = 0; i <= mu1; ++i) {
        int d = musz;
        for (int j = 1; j <= i; ++j) d -= mt.part(j);
        dims[mu1 - i] = d;
    }
    for (int i = 0; i <= nu1; ++i) {
        int d = musz;
        for (int j = 1; j <= i; ++j) d += nt.part(j);
        dims[mu1 + i] = d;
    }

    // Walk the flag from the top: V_m = V, then V_{k-1} runs over subspaces
    // of V_k of the prescribed dimension containing x(V_k), with v in V_{mu1}.
    long long count = 0;
    Subspace full = Subspace::span(q, n, [&] {
        std::vector<Vec> e;
        for (int i = 0; i < n; ++i) {
            Vec u(n, 0);
            u[i] = 1;
            e.push_back(u);
        }
        return e;
    }());
    auto rec = [&](auto&& self, int k, const Subspace& vk) -> void {
        if (k == 0) {
            ++count;
            return;
        }
        Subspace xvk = image_space(p.x, vk);
        for (const auto& cand : subspaces_of_dim(q, n, dims[k - 1])) {
            if (!vk.contains_subspace(cand)) continue;
            if (!cand.contains_subspace(xvk)) continue;
            if (k - 1 == mu1 && !cand.contains(p.v)) continue;
            self(self, k - 1, cand);
        }
    };
    if (mu1 + nu1 == 0) return 1;  // n = 0: the empty flag
    rec(rec, mu1 + nu1, full);
    return count;
}

long long count_hall(const FqPair& p, const Partition& rho, const Partition& sigma) {
    const int n = p.x.n, q = p.x.q;
    if (n > 4 || q > 3) throw BudgetError("count_hall: subspace budget is n <= 4, q <= 3");
    if (rho.size() + sigma.size() != n)
        throw std::invalid_argument("count_hall: |rho| + |sigma| != n");
    long long count = 0;
    for (const auto& w : subspaces_of_dim(q, n, rho.size())) {
        if (!w.contains(p.v)) continue;
        if (!w.contains_subspace(image_space(p.x, w))) continue;
        if (restricted_type(p.x, w) != rho) continue;
        if (quotient_type(p.x, w) != sigma) continue;
        ++count;
    }
    return count;
}

bool closure_member(const FqPair& p, const Bipartition& target) {
    const int n = p.x.n, q = p.x.q;
    bool within = (q == 2 && n <= 4) || (q == 3 && n <= 3);
    if (!within) throw BudgetError("closure_member: subspace budget is n <= 4 (q=2), n <= 3 (q=3)");
    for (const auto& w : subspaces_of_dim(q, n, target.mu().size())) {
        if (!w.contains(p.v)) continue;
        if (!w.contains_subspace(image_space(p.x, w))) continue;
        if (!dominance_leq(restricted_type(p.x, w), target.mu())) continue;
        if (dominance_leq(quotient_type(p.x, w), target.nu())) return true;
    }
    return false;
}

}  // namespace encone::fq
