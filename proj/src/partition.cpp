#include "encone/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace encone {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw std::invalid_argument("not a partition");
    }
}

Partition Partition::from_multiset(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int i = 1; i <= part(1); ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

int Partition::n_stat() const {
    int s = 0;
    for (int i = 1; i <= length(); ++i) s += (i - 1) * parts_[i - 1];
    return s;
}

Partition Partition::plus(const Partition& o) const {
    std::vector<int> c;
    int len = std::max(length(), o.length());
    for (int i = 1; i <= len; ++i) c.push_back(part(i) + o.part(i));
    return Partition(std::move(c));
}

Partition Partition::union_with(const Partition& o) const {
    std::vector<int> c = parts_;
    c.insert(c.end(), o.parts_.begin(), o.parts_.end());
    return from_multiset(std::move(c));
}

std::string Partition::str() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int k = 1; k <= len; ++k) {
        sa += a.part(k);
        sb += b.part(k);
        if (sa > sb) return false;
    }
    return true;
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

bool bipartition_leq(const Bipartition& a, const Bipartition& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("bipartition_leq: sizes differ");
    int len = std::max(std::max(a.mu().length(), a.nu().length()),
                       std::max(b.mu().length(), b.nu().length())) + 1;
    int sa = 0, sb = 0;
    for (int k = 1; k <= len; ++k) {
        sa += a.mu().part(k);
        sb += b.mu().part(k);
        if (sa > sb) return false;
        sa += a.nu().part(k);
        sb += b.nu().part(k);
        if (sa > sb) return false;
    }
    return true;
}

namespace {

// Positions (1-indexed) where lower differs from upper, with lower - upper.
std::vector<std::pair<int, int>> diff_positions(const Partition& lower, const Partition& upper) {
    std::vector<std::pair<int, int>> d;
    int len = std::max(lower.length(), upper.length());
    for (int i = 1; i <= len; ++i)
        if (lower.part(i) != upper.part(i)) d.emplace_back(i, lower.part(i) - upper.part(i));
    return d;
}

bool flat(const Partition& p, int from, int to) {
    for (int i = from; i < to; ++i)
        if (p.part(i) != p.part(i + 1)) return false;
    return true;
}

// Is the diff list exactly {(i, -1) : k <= i <= l}?
bool is_range_shift(const std::vector<std::pair<int, int>>& d, int k, int l, int delta) {
    if (static_cast<int>(d.size()) != l - k + 1) return false;
    for (int i = 0; i < static_cast<int>(d.size()); ++i)
        if (d[i].first != k + i || d[i].second != delta) return false;
    return true;
}

}  // namespace

std::vector<CoverType> cover_clause_matches(const Bipartition& lower, const Bipartition& upper) {
    std::vector<CoverType> matches;
    if (lower.n() != upper.n()) return matches;
    const Partition &rho = lower.mu(), &sigma = lower.nu();
    const Partition &mu = upper.mu(), &nu = upper.nu();
    auto dmu = diff_positions(rho, mu);
    auto dnu = diff_positions(sigma, nu);
    if (dmu.empty() && dnu.empty()) return matches;

    // (1): a box moves down on the mu side, nu untouched.
    if (dnu.empty() && dmu.size() == 2 && dmu[0].second == -1 && dmu[1].second == 1) {
        int k = dmu[0].first, l = dmu[1].first;
        if (k >= 2 && l > k) {
            bool chain = (l == k + 1);
            if (!chain) {
                chain = true;
                for (int i = k + 1; i <= l - 1; ++i)
                    if (mu.part(i) != mu.part(k) - 1) chain = false;
                if (mu.part(k) - 1 != mu.part(l) + 1) chain = false;
            }
            if (chain && flat(nu, k - 1, l)) matches.push_back(CoverType{1, k, l});
        }
    }

    // (2): a box moves down on the nu side, mu untouched.
    if (dmu.empty() && dnu.size() == 2 && dnu[0].second == -1 && dnu[1].second == 1) {
        int k = dnu[0].first, l = dnu[1].first;
        if (k >= 1 && l > k) {
            bool chain = (l == k + 1);
            if (!chain) {
                chain = true;
                for (int i = k + 1; i <= l - 1; ++i)
                    if (nu.part(i) != nu.part(k) - 1) chain = false;
                if (nu.part(k) - 1 != nu.part(l) + 1) chain = false;
            }
            if (chain && flat(mu, k, l + 1)) matches.push_back(CoverType{2, k, l});
        }
    }

    // (3): a column of boxes crosses the dividing line rightwards, rows k..l.
    if (!dmu.empty() && dmu.size() == dnu.size()) {
        int k = dmu[0].first, l = dmu.back().first;
        if (is_range_shift(dmu, k, l, -1) && is_range_shift(dnu, k, l, 1) &&
            flat(mu, k, l) && mu.part(l) > mu.part(l + 1) &&
            (k == 1 || nu.part(k - 1) > nu.part(k)) && flat(nu, k, l))
            matches.push_back(CoverType{3, k, l});
    }

    // (4): a column crosses leftwards one row down, nu rows k..l to mu rows k+1..l+1.
    if (!dnu.empty() && dmu.size() == dnu.size()) {
        int k = dnu[0].first, l = dnu.back().first;
        if (is_range_shift(dnu, k, l, -1) && is_range_shift(dmu, k + 1, l + 1, 1) &&
            flat(nu, k, l) && nu.part(l) > nu.part(l + 1) &&
            mu.part(k) > mu.part(k + 1) && flat(mu, k + 1, l + 1))
            matches.push_back(CoverType{4, k, l});
    }

    return matches;
}

std::optional<CoverType> covers(const Bipartition& lower, const Bipartition& upper) {
    auto matches = cover_clause_matches(lower, upper);
    if (matches.empty()) return std::nullopt;
    if (matches.size() > 1)
        throw std::logic_error("covering classification matched more than one clause");
    return matches.front();
}

std::vector<int> interleaved_composition(const Bipartition& bp) {
    std::vector<int> comp;
    Partition mt = bp.mu().transpose(), nt = bp.nu().transpose();
    for (int i = bp.mu().part(1); i >= 1; --i) comp.push_back(mt.part(i));
    for (int i = 1; i <= bp.nu().part(1); ++i) comp.push_back(nt.part(i));
    return comp;
}

Bipartition doubled(const Bipartition& bp) {
    return Bipartition(bp.mu().union_with(bp.mu()), bp.nu().union_with(bp.nu()));
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    std::vector<Bipartition> all;
    for (int k = 0; k <= n; ++k) {
        auto mus = enumerate_partitions(k);
        auto nus = enumerate_partitions(n - k);
        for (const auto& m : mus)
            for (const auto& v : nus) all.emplace_back(m, v);
    }
    std::sort(all.begin(), all.end(), [](const Bipartition& a, const Bipartition& b) {
        if (a.b_stat() != b.b_stat()) return a.b_stat() > b.b_stat();
        auto ca = interleaved_composition(a), cb = interleaved_composition(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    return all;
}

std::vector<HasseEdge> hasse(int n) {
    std::vector<HasseEdge> edges;
    auto qn = enumerate_bipartitions(n);
    for (const auto& lo : qn)
        for (const auto& up : qn)
            if (auto c = covers(lo, up)) edges.push_back({lo, up, *c});
    return edges;
}

}  // namespace encone
