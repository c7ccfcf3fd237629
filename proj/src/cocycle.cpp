#include "stt/cocycle.hpp"

#include "stt/errors.hpp"

#include <numeric>

namespace stt {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long long inv_mod_q(long long a, long long q) {
    // extended gcd; a must be a unit mod q
    long long t = 0, nt = 1, r = q, nr = ((a % q) + q) % q;
    while (nr != 0) {
        long long qq = r / nr;
        long long tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error("inv_mod_q: not a unit");
    return ((t % q) + q) % q;
}

int p_val(long long a, long long p, int cap) {
    if (a == 0) return cap;
    int v = 0;
    while (a % p == 0 && v < cap) {
        a /= p;
        ++v;
    }
    return v;
}

// Solve A x = b over Z/p^k. Returns solution or counts unsatisfiable rows.
struct PkResult {
    std::optional<std::vector<long long>> x;
    int defect = 0;
};

PkResult solve_mod_pk(std::vector<std::vector<long long>> A, std::vector<long long> b,
                      long long p, int k) {
    const long long q = pow_ll(p, k);
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    for (auto& row : A)
        for (auto& e : row) e = ((e % q) + q) % q;
    for (auto& e : b) e = ((e % q) + q) % q;

    struct Pivot {
        int row, col, val;
    };
    std::vector<Pivot> pivots;
    int cur = 0;
    for (int col = 0; col < cols && cur < rows; ++col) {
        int best = -1, bestv = k;
        for (int r = cur; r < rows; ++r) {
            int v = p_val(A[r][col], p, k);
            if (v < bestv) {
                bestv = v;
                best = r;
            }
        }
        if (best < 0) continue;
        std::swap(A[cur], A[best]);
        std::swap(b[cur], b[best]);
        long long pv = pow_ll(p, bestv);
        long long u = A[cur][col] / pv % q;
        long long uinv = inv_mod_q(u, q);
        for (int r = cur + 1; r < rows; ++r) {
            if (A[r][col] == 0) continue;
            long long f = A[r][col] / pv % q * uinv % q;
            for (int c = col; c < cols; ++c)
                A[r][c] = ((A[r][c] - f * A[cur][c]) % q + q) % q;
            b[r] = ((b[r] - f * b[cur]) % q + q) % q;
        }
        pivots.push_back({cur, col, bestv});
        ++cur;
    }
    PkResult res;
    std::vector<long long> x(cols, 0);
    // rows without pivots must have zero rhs
    for (int r = cur; r < rows; ++r)
        if (b[r] % q != 0) ++res.defect;
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
        auto [r, col, v] = pivots[i];
        long long rhs = b[r];
        for (int c = col + 1; c < cols; ++c)
            rhs = ((rhs - A[r][c] * x[c]) % q + q) % q;
        long long pv = pow_ll(p, v);
        if (rhs % pv != 0) {
            ++res.defect;
            continue;
        }
        long long u = A[r][col] / pv % q;
        x[col] = rhs / pv % q * inv_mod_q(u, q) % q;
    }
    if (res.defect == 0) res.x = std::move(x);
    return res;
}

} // namespace

Cocycle2 Cocycle2::trivial(const FiniteGroup& g) {
    Cocycle2 c;
    c.group = g;
    c.values.assign(g.order(), std::vector<Cyclotomic>(g.order(), Cyclotomic::one()));
    return c;
}

bool Cocycle2::is_normalized() const {
    int n = group.order();
    for (int s = 0; s < n; ++s)
        if (!values[group.identity][s].is_one() || !values[s][group.identity].is_one())
            return false;
    return true;
}

unsigned Cocycle2::value_order() const {
    unsigned n = 1;
    for (const auto& row : values)
        for (const auto& v : row) {
            auto ord = v.multiplicative_order();
            if (!ord) throw InvariantViolation("cocycle value is not a root of unity");
            n = lcm_u(n, *ord);
        }
    return n;
}

Splitting Splitting::trivial(const FiniteGroup& g) {
    Splitting a;
    a.group = g;
    a.alpha.assign(g.order(), Cyclotomic::one());
    return a;
}

bool verify_cocycle(const Cocycle2& c) {
    const int n = c.group.order();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u) {
                int st = c.group.mul[s][t];
                int tu = c.group.mul[t][u];
                if (c.at(s, t) * c.at(st, u) != c.at(t, u) * c.at(s, tu)) return false;
            }
    return true;
}

Cocycle2 coboundary(const Splitting& alpha) {
    const FiniteGroup& g = alpha.group;
    if (!alpha.alpha[g.identity].is_one())
        throw InvariantViolation("coboundary: alpha(1) != 1");
    Cocycle2 c;
    c.group = g;
    int n = g.order();
    c.values.assign(n, std::vector<Cyclotomic>(n, Cyclotomic::one()));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            c.values[s][t] = alpha.alpha[s] * alpha.alpha[t] * alpha.alpha[g.mul[s][t]].inverse();
    return c;
}

SplitResult split_cocycle(const Cocycle2& c, unsigned max_order) {
    if (!c.is_normalized()) throw NotACocycle("cocycle is not normalized");
    if (!verify_cocycle(c)) throw NotACocycle("2-cocycle identity fails");
    const unsigned n = c.value_order();
    const int ord = c.group.order();

    SplitResult out;
    bool first = true;
    for (unsigned N = n; N <= max_order; N += n) {
        // discrete logs of the values in mu_N
        std::vector<std::vector<long long>> A;
        std::vector<long long> b;
        A.reserve(static_cast<size_t>(ord) * ord);
        for (int s = 0; s < ord; ++s)
            for (int t = 0; t < ord; ++t) {
                auto lg = root_of_unity_log(c.at(s, t), N);
                if (!lg) throw InvariantViolation("cocycle value outside mu_N");
                std::vector<long long> row(ord, 0);
                row[s] += 1;
                row[t] += 1;
                row[c.group.mul[s][t]] -= 1;
                A.push_back(std::move(row));
                b.push_back(*lg);
            }
        // solve mod each prime power of N, CRT combine
        std::vector<long long> x(ord, 0);
        long long modulus = 1;
        int defect = 0;
        unsigned rem = N;
        bool solvable = true;
        for (long long p = 2; rem > 1; ++p) {
            if (rem % p != 0) continue;
            int k = 0;
            while (rem % p == 0) {
                rem /= static_cast<unsigned>(p);
                ++k;
            }
            auto res = solve_mod_pk(A, b, p, k);
            defect += res.defect;
            if (!res.x) {
                solvable = false;
                continue;
            }
            long long q = pow_ll(p, k);
            // CRT: x = x (mod modulus), x = res.x (mod q)
            long long minv = inv_mod_q(modulus % q, q);
            for (int i = 0; i < ord; ++i) {
                long long diff = (((*res.x)[i] - x[i]) % q + q) % q;
                x[i] = x[i] + modulus * (diff * minv % q);
            }
            modulus *= q;
        }
        if (first) {
            out.obstruction.smallest_tested_order = N;
            out.obstruction.rank_defect = defect;
            first = false;
        }
        if (!solvable) continue;

        Splitting alpha;
        alpha.group = c.group;
        alpha.alpha.reserve(ord);
        for (int i = 0; i < ord; ++i)
            alpha.alpha.push_back(Cyclotomic::root_of_unity(N, x[i]));
        if (!alpha.alpha[c.group.identity].is_one())
            continue; // should not happen: the (1,1) equation pins alpha(1)
        if (coboundary(alpha).values == c.values) {
            out.splitting = std::move(alpha);
            return out;
        }
    }
    return out;
}

std::optional<Splitting> split_cocycle_exhaustive(const Cocycle2& c, unsigned N) {
    const int ord = c.group.order();
    const int id = c.group.identity;
    // precompute discrete logs
    std::vector<std::vector<long long>> b(ord, std::vector<long long>(ord, 0));
    for (int s = 0; s < ord; ++s)
        for (int t = 0; t < ord; ++t) {
            auto lg = root_of_unity_log(c.at(s, t), N);
            if (!lg) return std::nullopt;
            b[s][t] = *lg;
        }
    std::vector<int> free_elems;
    for (int s = 0; s < ord; ++s)
        if (s != id) free_elems.push_back(s);
    std::vector<long long> x(ord, 0);
    std::vector<unsigned> odo(free_elems.size(), 0);
    while (true) {
        for (size_t i = 0; i < free_elems.size(); ++i) x[free_elems[i]] = odo[i];
        bool ok = true;
        for (int s = 0; s < ord && ok; ++s)
            for (int t = 0; t < ord && ok; ++t) {
                long long lhs = x[s] + x[t] - x[c.group.mul[s][t]];
                ok = ((lhs - b[s][t]) % static_cast<long long>(N) + N) % N == 0;
            }
        if (ok) {
            Splitting alpha;
            alpha.group = c.group;
            for (int i = 0; i < ord; ++i)
                alpha.alpha.push_back(Cyclotomic::root_of_unity(N, x[i]));
            return alpha;
        }
        size_t i = 0;
        for (; i < odo.size(); ++i) {
            if (++odo[i] < N) break;
            odo[i] = 0;
        }
        if (i == odo.size()) return std::nullopt;
    }
}

Cocycle2 carry_cocycle_klein_four() {
    FiniteGroup v4 = FiniteGroup::klein_four();
    Cocycle2 c = Cocycle2::trivial(v4);
    // element s = 2*i + j under direct_product(C2, C2); carry in the first bit
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
            int i = s >> 1, k = t >> 1;
            if (i == 1 && k == 1) c.values[s][t] = -Cyclotomic::one();
        }
    return c;
}

Cocycle2 quaternion_cocycle_klein_four() {
    FiniteGroup v4 = FiniteGroup::klein_four();
    FiniteGroup q8 = FiniteGroup::quaternion8();
    // section V4 -> Q8: (0,0)->1, (1,0)->i, (0,1)->j, (1,1)->k
    auto sec = [](int s) { return s == 0 ? 0 : (s == 2 ? 2 : (s == 1 ? 4 : 6)); };
    Cocycle2 c = Cocycle2::trivial(v4);
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
            int prod = q8.mul[sec(s)][sec(t)];
            if (prod & 1) c.values[s][t] = -Cyclotomic::one();
        }
    return c;
}

} // namespace stt
