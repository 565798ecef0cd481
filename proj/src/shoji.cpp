#include "encone/shoji.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace encone {

namespace {

// Shapes lambda' <= lambda with lambda/lambda' a horizontal strip of the
// given size.
std::vector<Partition> strip_predecessors(const Partition& lambda, int strip) {
    std::vector<Partition> out;
    const int rows = lambda.length();
    std::vector<int> cur(rows);
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (row == rows) {
            if (left == 0) out.push_back(Partition(std::vector<int>(cur.begin(), cur.end())));
            return;
        }
        // Horizontal strip: row r keeps at least lambda_{r+1} boxes, which
        // also keeps the result a partition.
        int hi = lambda.part(row + 1);
        int lo = lambda.part(row + 2);
        for (int keep = hi; keep >= lo; --keep) {
            int removed = hi - keep;
            if (removed > left) break;
            cur[row] = keep;
            self(self, row + 1, left - removed);
        }
    };
    rec(rec, 0, strip);
    return out;
}

}  // namespace

long long kostka_number(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size())
        throw std::invalid_argument("kostka_number: size mismatch");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    static std::mutex memo_mutex;
    if (content.empty()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape.parts(), content.parts());
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    // Peel the largest letter: it occupies a horizontal strip of size
    // content_last.
    std::vector<int> head(content.parts().begin(), content.parts().end() - 1);
    int strip = content.parts().back();
    long long total = 0;
    for (const auto& prev : strip_predecessors(shape, strip))
        total += kostka_number(prev, Partition(head));
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo[key] = total;
    return total;
}

int word_charge(std::vector<int> word) {
    int total = 0;
    while (!word.empty()) {
        int maxletter = *std::max_element(word.begin(), word.end());
        // Extract a standard subword: scan cyclically from the left, marking
        // the letters 1, 2, ..., maxletter in order; the running index starts
        // at 0 and increases by one at every wrap, and each marked letter
        // contributes the current index.
        std::vector<bool> marked(word.size(), false);
        const int len = static_cast<int>(word.size());
        int pos = 0, index = 0;
        for (int r = 1; r <= maxletter; ++r) {
            while (word[pos] != r || marked[pos]) {
                ++pos;
                if (pos == len) {
                    pos = 0;
                    ++index;
                    if (index > len + 1)
                        throw std::invalid_argument("word_charge: content is not a partition");
                }
            }
            marked[pos] = true;
            total += index;
        }
        std::vector<int> rest;
        for (int i = 0; i < len; ++i)
            if (!marked[i]) rest.push_back(word[i]);
        word = std::move(rest);
    }
    return total;
}

namespace {

// Visit every semistandard tableau of the given shape and content as its
// right-to-left, top-to-bottom reading word.
void for_each_ssyt_word(const Partition& shape, const Partition& content,
                        const std::function<void(const std::vector<int>&)>& visit) {
    const int rows = shape.length();
    const int letters = content.length();
    // filled[r] = boxes of row r+1 used so far; letter j fills a horizontal strip.
    std::vector<int> filled(rows, 0);
    std::vector<std::vector<int>> row_entries(rows);
    auto place = [&](auto&& self, int letter) -> void {
        if (letter > letters) {
            for (int r = 0; r < rows; ++r)
                if (filled[r] != shape.part(r + 1)) return;
            std::vector<int> word;
            for (int r = 0; r < rows; ++r)
                word.insert(word.end(), row_entries[r].rbegin(), row_entries[r].rend());
            visit(word);
            return;
        }
        int quota = content.part(letter);
        std::vector<int> before = filled;
        // choose how many copies of `letter` go in each row, bottom row first
        // cannot exceed: row r strip bound: new filled[r] <= before[r-1]
        auto put = [&](auto&& pself, int row, int left) -> void {
            if (row < 0) {
                if (left == 0) self(self, letter + 1);
                return;
            }
            int cap = shape.part(row + 1) - before[row];
            if (row > 0) cap = std::min(cap, before[row - 1] - before[row]);
            if (row + 1 > letter) cap = 0;  // column strictness: row r needs letters >= r
            for (int c = 0; c <= std::min(cap, left); ++c) {
                filled[row] = before[row] + c;
                for (int i = 0; i < c; ++i) row_entries[row].push_back(letter);
                pself(pself, row - 1, left - c);
                for (int i = 0; i < c; ++i) row_entries[row].pop_back();
                filled[row] = before[row];
            }
        };
        put(put, rows - 1, quota);
    };
    place(place, 1);
}

}  // namespace

IntPolynomial kostka_polynomial(const Partition& lambda, const Partition& pi) {
    if (lambda.size() != pi.size())
        throw std::invalid_argument("kostka_polynomial: size mismatch");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, IntPolynomial> memo;
    static std::mutex memo_mutex;
    auto key = std::make_pair(lambda.parts(), pi.parts());
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const int npi = pi.n_stat();
    std::vector<Int> coeffs(npi + 1, Int(0));
    for_each_ssyt_word(lambda, pi, [&](const std::vector<int>& w) {
        int ch = word_charge(w);
        if (ch < 0 || ch > npi) throw std::logic_error("charge out of range [0, n(pi)]");
        coeffs[npi - ch] += 1;  // cocharge grading
    });
    IntPolynomial result{std::move(coeffs)};
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo[key] = result;
    return result;
}

KostkaTable::KostkaTable(int n, bool allow_large) {
    if (n < 0) throw std::invalid_argument("KostkaTable: negative n");
    if (n > 6 || (n == 6 && !allow_large))
        throw std::invalid_argument(
            "KostkaTable: n exceeds the exact-pipeline envelope (n <= 5, n = 6 behind a flag)");
    solve(enumerate_bipartitions(n));
}

KostkaTable KostkaTable::solve_with_order(const std::vector<Bipartition>& order) {
    KostkaTable t;
    t.solve(order);
    return t;
}

int KostkaTable::canonical_index(const Bipartition& b) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == b) return static_cast<int>(i);
    throw std::out_of_range("KostkaTable: label not in Q_n");
}

void KostkaTable::solve(const std::vector<Bipartition>& order) {
    n_ = order.empty() ? 0 : order.front().n();
    labels_ = enumerate_bipartitions(n_);
    const int m = static_cast<int>(labels_.size());
    if (static_cast<int>(order.size()) != m)
        throw std::invalid_argument("KostkaTable: order is not a permutation of Q_n");

    CharacterTable ct(n_);
    PolyMatrix omega_canonical = ct.omega_matrix();
    PolyMatrix omega(order);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            omega.at(i, j) = omega_canonical.at(order[i], order[j]);

    LdlDecomposition d = ldl_decompose(omega);

    // Rescale: P = L * diag(t^{b}), Lambda = D * diag(t^{-2b}).
    p_.assign(m, std::vector<IntPolynomial>(m));
    lambda_.assign(m, IntPolynomial());
    for (int j = 0; j < m; ++j) {
        const int bj = order[j].b_stat();
        const int cj = canonical_index(order[j]);
        RationalFunction tb(IntPolynomial::monomial(1, bj));
        for (int i = j; i < m; ++i) {
            RationalFunction entry = d.lower.at(i, j) * tb;
            auto poly = entry.as_polynomial();
            if (!poly) throw std::logic_error("Kostka entry not in Z[t]");
            p_[canonical_index(order[i])][cj] = std::move(*poly);
        }
        RationalFunction lam = d.diag[j] / (tb * tb);
        auto lpoly = lam.as_polynomial();
        if (!lpoly) throw std::logic_error("Lambda entry not in Z[t]");
        if (!lpoly->supported_on_parity(0)) throw std::logic_error("Lambda entry not in Z[t^2]");
        lambda_[cj] = std::move(*lpoly);
    }

    // Vanishing off the order ideal, including at incomparable pairs the
    // linear extension alone would allow.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (!bipartition_leq(labels_[j], labels_[i]) && !p_[i][j].is_zero())
                throw std::logic_error("Kostka entry nonzero at incomparable pair");

    // Exact reconstruction P Lambda P^t = Omega.
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            IntPolynomial acc;
            for (int k = 0; k < m; ++k) {
                if (p_[i][k].is_zero() || p_[j][k].is_zero()) continue;
                acc += p_[i][k] * lambda_[k] * p_[j][k];
            }
            auto expected = omega_canonical.at(labels_[i], labels_[j]).as_polynomial();
            if (!expected || acc != *expected)
                throw std::logic_error("P Lambda P^t does not reconstruct Omega");
        }
    }
}

const IntPolynomial& KostkaTable::kostka(const Bipartition& upper, const Bipartition& lower) const {
    return p_[canonical_index(upper)][canonical_index(lower)];
}

const IntPolynomial& KostkaTable::lambda_entry(const Bipartition& orbit) const {
    return lambda_[canonical_index(orbit)];
}

IntPolynomial KostkaTable::ic(const Bipartition& upper, const Bipartition& lower) const {
    const IntPolynomial& k = kostka(upper, lower);
    if (k.is_zero()) return {};
    auto shifted = k.shift_down(upper.b_stat());
    if (!shifted) throw std::logic_error("ic: Kostka entry not divisible by t^b");
    auto root = shifted->even_part_root();
    if (!root) throw std::logic_error("ic: odd powers after removing t^b");
    return *root;
}

IntPolynomial KostkaTable::pi(const Bipartition& flag_type, const Bipartition& orbit) const {
    IntPolynomial total;
    const Partition mu_t = flag_type.mu().transpose();
    const Partition nu_t = flag_type.nu().transpose();
    const int n_flag = flag_type.mu().plus(flag_type.nu()).n_stat();
    for (const auto& mid : labels_) {
        if (!dominance_leq(mid.mu(), flag_type.mu())) continue;
        if (!dominance_leq(mid.nu(), flag_type.nu())) continue;
        if (!bipartition_leq(orbit, mid)) continue;
        long long k1 = kostka_number(mid.mu().transpose(), mu_t);
        long long k2 = kostka_number(mid.nu().transpose(), nu_t);
        if (k1 == 0 || k2 == 0) continue;
        int shift = mid.mu().plus(mid.nu()).n_stat() - n_flag;
        total += IntPolynomial::monomial(Int(static_cast<long>(k1)) * Int(static_cast<long>(k2)), shift) * ic(mid, orbit);
    }
    return total;
}

IntPolynomial KostkaTable::theta(const Bipartition& orbit) const {
    auto root = lambda_entry(orbit).even_part_root();
    if (!root) throw std::logic_error("theta: Lambda entry not in Z[t^2]");
    return *root;
}

const IntPolynomial& KostkaTable::hall(const Partition& rho, const Partition& sigma,
                                       const Bipartition& ambient) const {
    if (rho.size() + sigma.size() != n_)
        throw std::invalid_argument("hall: |rho| + |sigma| != n");
    std::lock_guard<std::mutex> lock(*hall_mutex_);
    auto& table = hall_cache_[ambient];
    if (table.empty()) {
        // Invert the unitriangular system
        //   t^{n(rho+sigma)} IC^{amb}_{rho;sigma}
        //     = sum_{theta<=rho, psi<=sigma} g_{theta;psi} K~_{rho,theta} K~_{sigma,psi},
        // processing pairs upward in componentwise dominance.
        std::vector<Bipartition> pairs = labels_;
        std::stable_sort(pairs.begin(), pairs.end(), [](const Bipartition& a, const Bipartition& b) {
            return a.mu().n_stat() + a.nu().n_stat() > b.mu().n_stat() + b.nu().n_stat();
        });
        for (const auto& pr : pairs) {
            IntPolynomial rhs =
                IntPolynomial::monomial(1, pr.mu().plus(pr.nu()).n_stat()) * ic(pr, ambient);
            for (const auto& [key, g] : table) {
                const auto& [theta_p, psi_p] = key;
                if (Bipartition(theta_p, psi_p) == pr) continue;
                if (!dominance_leq(theta_p, pr.mu()) || !dominance_leq(psi_p, pr.nu())) continue;
                rhs -= g * kostka_polynomial(pr.mu(), theta_p) * kostka_polynomial(pr.nu(), psi_p);
            }
            auto g = rhs.shift_down(pr.mu().plus(pr.nu()).n_stat());
            if (!g) throw std::logic_error("hall: inversion left a non-polynomial entry");
            table[{pr.mu(), pr.nu()}] = std::move(*g);
        }
    }
    return table.at({rho, sigma});
}

const KostkaTable& kostka_table(int n, bool allow_large) {
    static std::map<int, std::unique_ptr<KostkaTable>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<KostkaTable>(n, allow_large)).first;
    return *it->second;
}

CheckReport omega_crosscheck(int n) {
    CheckReport report;
    CharacterTable ct(n);
    PolyMatrix omega = ct.omega_matrix();
    const auto& qn = ct.labels();
    for (const auto& a : qn) {
        for (const auto& b : qn) {
            IntPolynomial lhs;
            for (const auto& ra : qn) {
                if (!dominance_leq(ra.mu(), a.mu()) || !dominance_leq(ra.nu(), a.nu())) continue;
                long long ka = kostka_number(ra.mu().transpose(), a.mu().transpose()) *
                               kostka_number(ra.nu().transpose(), a.nu().transpose());
                if (ka == 0) continue;
                for (const auto& rb : qn) {
                    if (!dominance_leq(rb.mu(), b.mu()) || !dominance_leq(rb.nu(), b.nu())) continue;
                    long long kb = kostka_number(rb.mu().transpose(), b.mu().transpose()) *
                                   kostka_number(rb.nu().transpose(), b.nu().transpose());
                    if (kb == 0) continue;
                    auto w = omega.at(ra, rb).as_polynomial();
                    if (!w) throw std::logic_error("omega entry not polynomial");
                    lhs += *w * (Int(static_cast<long>(ka)) * Int(static_cast<long>(kb)));
                }
            }
            IntPolynomial rhs = omega_combinatorial(a, b);
            ++report.cases_checked;
            if (lhs != rhs) {
                report.ok = false;
                report.mismatches.push_back(a.str() + " x " + b.str() + ": " + lhs.str() +
                                            " != " + rhs.str());
            }
        }
    }
    return report;
}

CheckReport typeA_specialization_check(int n) {
    CheckReport report;
    const KostkaTable& table = kostka_table(n);
    auto record = [&](bool match, const std::string& what) {
        ++report.cases_checked;
        if (!match) {
            report.ok = false;
            report.mismatches.push_back(what);
        }
    };
    auto parts = enumerate_partitions(n);
    Partition empty;
    for (const auto& lam : parts) {
        for (const auto& pi : parts) {
            IntPolynomial lhs = table.kostka(Bipartition(empty, lam), Bipartition(empty, pi));
            IntPolynomial rhs =
                IntPolynomial::monomial(1, n) * kostka_polynomial(lam, pi).substitute_t_squared();
            record(lhs == rhs, "(0;" + lam.str() + "),(0;" + pi.str() + ")");
        }
        for (const auto& rs : table.labels()) {
            IntPolynomial lhs = table.kostka(Bipartition(lam, empty), rs);
            IntPolynomial rhs =
                kostka_polynomial(lam, rs.mu().plus(rs.nu())).substitute_t_squared();
            record(lhs == rhs, "(" + lam.str() + ";0)," + rs.str());
        }
    }
    return report;
}

}  // namespace encone
