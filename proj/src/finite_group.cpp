#include "stt/finite_group.hpp"

#include "stt/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace stt {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul) {
    FiniteGroup g;
    g.mul = std::move(mul);
    int n = g.order();
    for (int s = 0; s < n; ++s) {
        if (static_cast<int>(g.mul[s].size()) != n)
            throw InvariantViolation("Cayley table is not square");
        for (int t = 0; t < n; ++t)
            if (g.mul[s][t] < 0 || g.mul[s][t] >= n)
                throw InvariantViolation("Cayley table entry out of range");
    }
    // identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int s = 0; s < n && ok; ++s) ok = (g.mul[e][s] == s && g.mul[s][e] == s);
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw InvariantViolation("Cayley table has no identity");
    g.identity = id;
    // inverses
    g.inv.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (g.mul[s][t] == id && g.mul[t][s] == id) {
                g.inv[s] = t;
                break;
            }
        }
        if (g.inv[s] < 0) throw InvariantViolation("element without inverse");
    }
    // associativity: exhaustive up to order 64, sampled above
    if (n <= 64) {
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                for (int u = 0; u < n; ++u)
                    if (g.mul[g.mul[s][t]][u] != g.mul[s][g.mul[t][u]])
                        throw InvariantViolation("Cayley table not associative");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int k = 0; k < 100000; ++k) {
            int s = d(rng), t = d(rng), u = d(rng);
            if (g.mul[g.mul[s][t]][u] != g.mul[s][g.mul[t][u]])
                throw InvariantViolation("Cayley table not associative (sampled)");
        }
    }
    return g;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) m[s][t] = (s + t) % n;
    return from_table(std::move(m));
}

FiniteGroup FiniteGroup::klein_four() {
    return direct_product(cyclic(2), cyclic(2));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    int n = na * nb;
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    auto idx = [nb](int x, int y) { return x * nb + y; };
    for (int s1 = 0; s1 < na; ++s1)
        for (int s2 = 0; s2 < nb; ++s2)
            for (int t1 = 0; t1 < na; ++t1)
                for (int t2 = 0; t2 < nb; ++t2)
                    m[idx(s1, s2)][idx(t1, t2)] = idx(a.mul[s1][t1], b.mul[s2][t2]);
    return from_table(std::move(m));
}

FiniteGroup FiniteGroup::symmetric3() { return dihedral(3); }

FiniteGroup FiniteGroup::dihedral(int n) {
    // elements: r^i (0..n-1), r^i f (n..2n-1); f r = r^{-1} f
    int N = 2 * n;
    auto rot = [&](int e) { return e % n; };
    auto flip = [&](int e) { return e >= n; };
    std::vector<std::vector<int>> m(N, std::vector<int>(N));
    for (int s = 0; s < N; ++s) {
        for (int t = 0; t < N; ++t) {
            int i = rot(s), j = rot(t);
            bool fs = flip(s), ft = flip(t);
            // (r^i f^fs)(r^j f^ft) = r^{i + j*(fs? -1 : 1)} f^{fs^ft}
            int k = fs ? (i - j % n + 2 * n) % n : (i + j) % n;
            m[s][t] = k + ((fs ^ ft) ? n : 0);
        }
    }
    return from_table(std::move(m));
}

FiniteGroup FiniteGroup::quaternion8() {
    // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto neg = [](int x) { return x ^ 1; };
    std::vector<std::vector<int>> m(8, std::vector<int>(8, -1));
    // multiplication on {1,i,j,k} with signs
    auto base = [&](int x) { return x / 2; }; // 0:1 1:i 2:j 3:k
    auto make = [&](int b, bool minus) { return 2 * b + (minus ? 1 : 0); };
    // table for base units: result (base, sign)
    const int bt[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int st[4][4] = {{+1, +1, +1, +1},
                          {+1, -1, +1, -1},
                          {+1, -1, -1, +1},
                          {+1, +1, -1, -1}};
    for (int s = 0; s < 8; ++s) {
        for (int t = 0; t < 8; ++t) {
            int b = bt[base(s)][base(t)];
            bool minus = (st[base(s)][base(t)] < 0);
            if (s & 1) minus = !minus;
            if (t & 1) minus = !minus;
            m[s][t] = make(b, minus);
        }
    }
    (void)neg;
    return from_table(std::move(m));
}

bool FiniteGroup::is_abelian() const {
    int n = order();
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (mul[s][t] != mul[t][s]) return false;
    return true;
}

int FiniteGroup::element_order(int s) const {
    int k = 1;
    int x = s;
    while (x != identity) {
        x = mul[x][s];
        ++k;
        if (k > order()) throw InvariantViolation("element order exceeds group order");
    }
    return k;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int s = 0; s < order(); ++s) e = std::lcm(e, static_cast<long long>(element_order(s)));
    return static_cast<int>(e);
}

int FiniteGroup::power(int s, long long k) const {
    int n = element_order(s);
    k %= n;
    if (k < 0) k += n;
    int x = identity;
    for (long long i = 0; i < k; ++i) x = mul[x][s];
    return x;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    int n = order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> classes;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::set<int> orbit;
        for (int g = 0; g < n; ++g) orbit.insert(mul[mul[g][s]][inv[g]]);
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int x : cls) seen[x] = true;
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> FiniteGroup::class_map(const std::vector<std::vector<int>>& classes) const {
    std::vector<int> cm(order(), -1);
    for (size_t i = 0; i < classes.size(); ++i)
        for (int x : classes[i]) cm[x] = static_cast<int>(i);
    return cm;
}

std::vector<std::pair<std::string, FiniteGroup>> small_groups_up_to_8() {
    std::vector<std::pair<std::string, FiniteGroup>> out;
    out.emplace_back("C1", FiniteGroup::trivial());
    out.emplace_back("C2", FiniteGroup::cyclic(2));
    out.emplace_back("C3", FiniteGroup::cyclic(3));
    out.emplace_back("C4", FiniteGroup::cyclic(4));
    out.emplace_back("C2xC2", FiniteGroup::klein_four());
    out.emplace_back("C5", FiniteGroup::cyclic(5));
    out.emplace_back("C6", FiniteGroup::cyclic(6));
    out.emplace_back("S3", FiniteGroup::symmetric3());
    out.emplace_back("C7", FiniteGroup::cyclic(7));
    out.emplace_back("C8", FiniteGroup::cyclic(8));
    out.emplace_back("C4xC2",
                     FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2)));
    out.emplace_back("C2xC2xC2",
                     FiniteGroup::direct_product(FiniteGroup::klein_four(), FiniteGroup::cyclic(2)));
    out.emplace_back("D4", FiniteGroup::dihedral(4));
    out.emplace_back("Q8", FiniteGroup::quaternion8());
    return out;
}

} // namespace stt
