#include "encone/weylb.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace encone {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// z_lambda = prod_i i^{m_i} m_i!
long long z_stat(const Partition& p) {
    long long z = 1;
    int run = 0;
    for (int i = 1; i <= p.length(); ++i) {
        run = (i > 1 && p.part(i) == p.part(i - 1)) ? run + 1 : 1;
        z *= static_cast<long long>(p.part(i)) * run;
    }
    return z;
}

std::map<int, int> multiplicities(const Partition& p) {
    std::map<int, int> m;
    for (int i = 1; i <= p.length(); ++i) ++m[p.parts()[i - 1]];
    return m;
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

long long class_size(const SignedCycleType& cls) {
    int n = cls.n();
    long long order = (1LL << n) * factorial(n);
    long long centralizer = (1LL << (cls.positive.length() + cls.negative.length())) *
                            z_stat(cls.positive) * z_stat(cls.negative);
    return order / centralizer;
}

long long sn_character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::invalid_argument("sn_character: size mismatch");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    static std::mutex memo_mutex;
    if (lambda.empty()) return 1;
    auto key = std::make_pair(lambda.parts(), cycle_type.parts());
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }

    // Border-strip removal via beta numbers: B = {lambda_i + (m - i)}.
    const int m = lambda.length();
    const int r = cycle_type.part(1);
    std::vector<int> rest(cycle_type.parts().begin() + 1, cycle_type.parts().end());
    Partition tail(rest);
    std::vector<int> beta(m);
    for (int i = 1; i <= m; ++i) beta[i - 1] = lambda.part(i) + (m - i);

    long long total = 0;
    for (int i = 0; i < m; ++i) {
        int b = beta[i] - r;
        if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int height = 0;
        for (int x : beta)
            if (x > b && x < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> np(m);
        for (int j = 0; j < m; ++j) np[j] = nb[j] - (m - 1 - j);
        long long sub = sn_character(Partition(np), tail);
        total += (height % 2 ? -sub : sub);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo[key] = total;
    return total;
}

IntPolynomial reflection_charpoly(const SignedCycleType& cls) {
    IntPolynomial p(1);
    for (int a : cls.positive.parts())
        p *= IntPolynomial::monomial(1, a) - IntPolynomial(1);
    for (int b : cls.negative.parts())
        p *= IntPolynomial::monomial(1, b) + IntPolynomial(1);
    return p;
}

long long wn_character(const Bipartition& label, const SignedCycleType& cls) {
    if (label.n() != cls.n()) throw std::invalid_argument("wn_character: size mismatch");
    const int size_a = label.mu().size();
    auto alpha_mult = multiplicities(cls.positive);
    auto beta_mult = multiplicities(cls.negative);

    // Split the positive and negative cycles between the two wreath factors.
    // Each distinct cycle length contributes a binomial choice.
    struct Choice { int value, total; };
    std::vector<Choice> slots;
    for (auto [v, m] : alpha_mult) slots.push_back({v, m});
    const int alpha_slots = static_cast<int>(slots.size());
    for (auto [v, m] : beta_mult) slots.push_back({v, m});

    long long total = 0;
    std::vector<int> take(slots.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, int size1) -> void {
        if (size1 > size_a) return;
        if (idx == slots.size()) {
            if (size1 != size_a) return;
            long long ways = 1;
            std::vector<int> cyc1, cyc2;
            int neg2_len = 0;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                ways *= binom(slots[s].total, take[s]);
                bool is_beta = s >= static_cast<std::size_t>(alpha_slots);
                for (int c = 0; c < take[s]; ++c) cyc1.push_back(slots[s].value);
                for (int c = 0; c < slots[s].total - take[s]; ++c) {
                    cyc2.push_back(slots[s].value);
                    if (is_beta) ++neg2_len;
                }
            }
            long long v1 = sn_character(label.mu(), Partition::from_multiset(cyc1));
            long long v2 = sn_character(label.nu(), Partition::from_multiset(cyc2));
            long long sign = (neg2_len % 2) ? -1 : 1;
            total += ways * v1 * sign * v2;
            return;
        }
        for (int c = 0; c <= slots[idx].total; ++c) {
            take[idx] = c;
            self(self, idx + 1, size1 + c * slots[idx].value);
        }
    };
    rec(rec, 0, 0);
    return total;
}

CharacterTable::CharacterTable(int n) : n_(n) {
    group_order_ = (1LL << n) * factorial(n);
    labels_ = enumerate_bipartitions(n);
    const int m = static_cast<int>(labels_.size());
    classes_.reserve(m);
    for (const auto& l : labels_) classes_.push_back({l.mu(), l.nu()});
    sizes_.reserve(m);
    epsilon_.reserve(m);
    delta_.reserve(m);
    IntPolynomial coinv(1);
    for (int a = 1; a <= n; ++a)
        coinv *= IntPolynomial::monomial(1, 2 * a) - IntPolynomial(1);
    for (const auto& cls : classes_) {
        sizes_.push_back(class_size(cls));
        epsilon_.push_back((n - cls.positive.length()) % 2 ? -1 : 1);
        delta_.push_back(cls.negative.length() % 2 ? -1 : 1);
        charpolys_.push_back(reflection_charpoly(cls));
        auto q = coinv.divide_exact(charpolys_.back());
        if (!q) throw std::logic_error("charpoly does not divide the coinvariant product");
        quotients_.push_back(std::move(*q));
    }
    values_.assign(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) values_[i][j] = wn_character(labels_[i], classes_[j]);
}

int CharacterTable::label_index(const Bipartition& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    throw std::out_of_range("label not in Q_n");
}

long long CharacterTable::value(const Bipartition& label, int class_idx) const {
    return values_[label_index(label)][class_idx];
}

IntPolynomial CharacterTable::fake_degree(const std::vector<long long>& values) const {
    if (values.size() != classes_.size())
        throw std::invalid_argument("fake_degree: wrong number of class values");
    IntPolynomial acc;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        Int w = Int(static_cast<long>(sizes_[i])) * Int(static_cast<long>(values[i])) * Int(static_cast<long>(epsilon_[i]));
        if (w != 0) acc += quotients_[i] * w;
    }
    auto r = acc.divide_exact_scalar(Int(static_cast<long>(group_order_)));
    if (!r) throw std::invalid_argument("fake_degree: class sum not divisible by |W_n|");
    return *r;
}

PolyMatrix CharacterTable::omega_matrix() const {
    PolyMatrix omega(labels_);
    const int m = static_cast<int>(labels_.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            std::vector<long long> vals(m);
            for (int c = 0; c < m; ++c) vals[c] = values_[i][c] * values_[j][c] * epsilon_[c];
            IntPolynomial w = IntPolynomial::monomial(1, n_ * n_) * fake_degree(vals);
            omega.at(i, j) = RationalFunction(w);
            omega.at(j, i) = RationalFunction(std::move(w));
        }
    }
    return omega;
}

namespace {

// All nonnegative matrices with the given row and column sums.
void matrices_with_margins(const std::vector<int>& rows, std::vector<int>& cols_left,
                           std::vector<std::vector<int>>& cur, std::size_t row,
                           const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (row == rows.size()) {
        emit(cur);
        return;
    }
    std::vector<int> entry(cols_left.size(), 0);
    auto fill = [&](auto&& self, std::size_t col, int rest) -> void {
        if (col == cols_left.size()) {
            if (rest != 0) return;
            cur.push_back(entry);
            matrices_with_margins(rows, cols_left, cur, row + 1, emit);
            cur.pop_back();
            return;
        }
        int cap = std::min(rest, cols_left[col]);
        for (int v = 0; v <= cap; ++v) {
            entry[col] = v;
            cols_left[col] -= v;
            self(self, col + 1, rest - v);
            cols_left[col] += v;
        }
        entry[col] = 0;
    };
    fill(fill, 0, rows[row]);
}

}  // namespace

IntPolynomial omega_combinatorial(const Bipartition& a, const Bipartition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("omega_combinatorial: size mismatch");
    const int n = a.n();
    std::vector<int> rows = interleaved_composition(a);
    std::vector<int> cols = interleaved_composition(b);
    const int mu_rows = a.mu().part(1);
    const int mu_cols = b.mu().part(1);
    const int base = n * (n - 1) / 2 - a.mu().plus(a.nu()).n_stat() - b.mu().plus(b.nu()).n_stat();

    IntPolynomial coinv(1);
    for (int c = 1; c <= n; ++c)
        coinv *= IntPolynomial::monomial(1, 2 * c) - IntPolynomial(1);

    // Summands may individually carry negative powers of t; the prefactor
    // t^{b(a)+b(b)} restores polynomiality of the total.
    std::map<int, Int> laurent;
    auto emit = [&](const std::vector<std::vector<int>>& m) {
        int inner = base;
        IntPolynomial quot = coinv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m[i].size(); ++j) {
                int e = m[i][j];
                inner += e * (e - 1) / 2;
                if (static_cast<int>(i) < mu_rows && static_cast<int>(j) < mu_cols) inner += e;
                for (int c = 1; c <= e; ++c) {
                    auto d = quot.divide_exact(IntPolynomial::monomial(1, 2 * c) - IntPolynomial(1));
                    if (!d) throw std::logic_error("gaussian multinomial quotient not exact");
                    quot = std::move(*d);
                }
            }
        }
        for (int k = 0; k <= quot.degree(); ++k)
            if (quot.coeff(k) != 0) laurent[k + 2 * inner] += quot.coeff(k);
    };
    std::vector<std::vector<int>> cur;
    std::vector<int> cols_left = cols;
    matrices_with_margins(rows, cols_left, cur, 0, emit);

    const int shift = a.b_stat() + b.b_stat();
    std::vector<Int> coeffs;
    for (const auto& [deg, c] : laurent) {
        if (c == 0) continue;
        if (deg + shift < 0) throw std::logic_error("omega_combinatorial: negative degree survived");
        if (static_cast<int>(coeffs.size()) <= deg + shift) coeffs.resize(deg + shift + 1, Int(0));
        coeffs[deg + shift] = c;
    }
    return IntPolynomial(std::move(coeffs));
}

}  // namespace encone
