#include "stt/character_table.hpp"

#include "stt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace stt {

namespace {

long long pow_mod(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long long inv_mod(long long a, long long p) { return pow_mod((a % p + p) % p, p - 2, p); }

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

// kernel basis of square matrix m over F_p
std::vector<Vec> kernel_mod_p(Mat m, long long p) {
    int n = static_cast<int>(m.size());
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] % p != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        long long iv = inv_mod(m[row][col], p);
        for (int c = 0; c < n; ++c) m[row][c] = m[row][c] % p * iv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            long long f = m[r][col] % p;
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) m[r][c] = ((m[r][c] - f * m[row][c]) % p + p) % p;
        }
        pivot_col[row] = col;
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = true;
    std::vector<Vec> basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (int r = 0; r < row; ++r) {
            // pivot_col[r] coordinate determined by -m[r][free_col]
            v[pivot_col[r]] = (p - m[r][free_col] % p) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// coordinates of v in the span of basis (assumed consistent), over F_p
Vec coords_in_basis(const std::vector<Vec>& basis, const Vec& v, long long p) {
    int n = static_cast<int>(v.size());
    int d = static_cast<int>(basis.size());
    // augmented system: sum c_j basis[j] = v
    Mat m(n, Vec(d + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) m[i][j] = basis[j][i] % p;
        m[i][d] = v[i] % p;
    }
    Vec sol(d, 0);
    int row = 0;
    std::vector<int> pivot_col(n, -1);
    for (int col = 0; col < d && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        long long iv = inv_mod(m[row][col], p);
        for (int c = 0; c <= d; ++c) m[row][c] = m[row][c] * iv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            long long f = m[r][col];
            if (f == 0) continue;
            for (int c = 0; c <= d; ++c) m[r][c] = ((m[r][c] - f * m[row][c]) % p + p) % p;
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int r = 0; r < row; ++r) sol[pivot_col[r]] = m[r][d];
    return sol;
}

// characteristic polynomial of d x d matrix over F_p via interpolation
Vec char_poly_mod_p(const Mat& a, long long p) {
    int d = static_cast<int>(a.size());
    auto det_at = [&](long long x) {
        Mat m = a;
        for (int i = 0; i < d; ++i) m[i][i] = ((m[i][i] - x) % p + p) % p;
        long long det = 1;
        for (int col = 0, row = 0; col < d && row < d; ++col) {
            int pr = -1;
            for (int r = row; r < d; ++r)
                if (m[r][col] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) return 0LL;
            if (pr != row) {
                std::swap(m[row], m[pr]);
                det = p - det;
            }
            det = det * m[row][col] % p;
            long long iv = inv_mod(m[row][col], p);
            for (int r = row + 1; r < d; ++r) {
                long long f = m[r][col] * iv % p;
                if (f == 0) continue;
                for (int c = col; c < d; ++c) m[r][c] = ((m[r][c] - f * m[row][c]) % p + p) % p;
            }
            ++row;
        }
        return det % p;
    };
    // Lagrange interpolation through d+1 points
    std::vector<long long> xs(d + 1), ys(d + 1);
    for (int i = 0; i <= d; ++i) {
        xs[i] = i;
        ys[i] = det_at(i);
    }
    Vec poly(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        // basis polynomial prod_{j!=i} (x - xs[j]) / (xs[i] - xs[j])
        Vec b(1, 1);
        long long denom = 1;
        for (int j = 0; j <= d; ++j) {
            if (j == i) continue;
            Vec nb(b.size() + 1, 0);
            for (size_t k = 0; k < b.size(); ++k) {
                nb[k + 1] = (nb[k + 1] + b[k]) % p;
                nb[k] = (nb[k] + b[k] * ((p - xs[j]) % p)) % p;
            }
            b = std::move(nb);
            denom = denom * ((xs[i] - xs[j]) % p + p) % p;
        }
        long long f = ys[i] * inv_mod(denom, p) % p;
        for (size_t k = 0; k < b.size(); ++k) poly[k] = (poly[k] + f * b[k]) % p;
    }
    return poly;
}

long long eval_poly(const Vec& poly, long long x, long long p) {
    long long r = 0;
    for (size_t i = poly.size(); i-- > 0;) r = (r * x + poly[i]) % p;
    return r;
}

long long find_generator(long long p) {
    std::vector<long long> q;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            q.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) q.push_back(m);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long qq : q)
            if (pow_mod(g, (p - 1) / qq, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no generator mod p");
}

} // namespace

bool CharacterTable::is_trivial(int irrep) const {
    if (degrees[irrep] != 1) return false;
    for (const auto& v : chars[irrep])
        if (!v.is_one()) return false;
    return true;
}

CharacterTable character_table(const FiniteGroup& g) {
    const int n = g.order();
    CharacterTable T;
    T.classes = g.conjugacy_classes();
    T.class_of = g.class_map(T.classes);
    const int r = T.num_classes();
    const int e = g.exponent();

    std::vector<int> reps(r);
    std::vector<long long> csize(r);
    for (int i = 0; i < r; ++i) {
        reps[i] = T.classes[i][0];
        csize[i] = static_cast<long long>(T.classes[i].size());
    }
    std::vector<int> inv_class(r);
    for (int i = 0; i < r; ++i) inv_class[i] = T.class_of[g.inv[reps[i]]];
    int id_class = T.class_of[g.identity];

    // class-sum matrices: (M_i)[j][k] = #{(x,y) in C_i x C_j : xy = rep_k}
    auto build_class_matrices = [&]() {
        std::vector<Mat> M(r, Mat(r, Vec(r, 0)));
        for (int i = 0; i < r; ++i)
            for (int x : T.classes[i])
                for (int k = 0; k < r; ++k) {
                    int y = g.mul[g.inv[x]][reps[k]];
                    M[i][T.class_of[y]][k] += 1;
                }
        return M;
    };
    const std::vector<Mat> M = build_class_matrices();

    // try a few primes p = 1 (mod e), p > 4n
    long long p = 4LL * n + 1;
    for (int attempt = 0; attempt < 5; ++attempt, ++p) {
        while (!(is_prime_ll(p) && (p - 1) % e == 0)) ++p;

        // split the class algebra into common eigenspaces
        std::vector<std::vector<Vec>> spaces;
        {
            std::vector<Vec> full;
            for (int i = 0; i < r; ++i) {
                Vec v(r, 0);
                v[i] = 1;
                full.push_back(std::move(v));
            }
            spaces.push_back(std::move(full));
        }
        for (int i = 0; i < r; ++i) {
            if (i == id_class) continue;
            std::vector<std::vector<Vec>> next;
            for (auto& W : spaces) {
                int d = static_cast<int>(W.size());
                if (d == 1) {
                    next.push_back(std::move(W));
                    continue;
                }
                // restriction of M_i to W
                Mat A(d, Vec(d, 0));
                for (int b = 0; b < d; ++b) {
                    Vec mv(r, 0);
                    for (int row = 0; row < r; ++row) {
                        long long acc = 0;
                        for (int col = 0; col < r; ++col)
                            acc = (acc + M[i][row][col] % p * (W[b][col] % p)) % p;
                        mv[row] = acc;
                    }
                    Vec c = coords_in_basis(W, mv, p);
                    for (int row = 0; row < d; ++row) A[row][b] = c[row];
                }
                Vec cp = char_poly_mod_p(A, p);
                for (long long lam = 0; lam < p; ++lam) {
                    if (eval_poly(cp, lam, p) != 0) continue;
                    Mat Ashift = A;
                    for (int k = 0; k < d; ++k)
                        Ashift[k][k] = ((Ashift[k][k] - lam) % p + p) % p;
                    auto ker = kernel_mod_p(Ashift, p);
                    if (ker.empty()) continue;
                    std::vector<Vec> sub;
                    for (auto& kv : ker) {
                        Vec amb(r, 0);
                        for (int b = 0; b < d; ++b)
                            for (int row = 0; row < r; ++row)
                                amb[row] = (amb[row] + kv[b] % p * (W[b][row] % p)) % p;
                        sub.push_back(std::move(amb));
                    }
                    next.push_back(std::move(sub));
                }
            }
            spaces = std::move(next);
        }
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const std::vector<Vec>& w) { return w.size() == 1; });
        if (!all_one || static_cast<int>(spaces.size()) != r) continue; // retry with larger p

        // recover characters mod p
        std::vector<std::vector<long long>> chi_mod(r, std::vector<long long>(r, 0));
        std::vector<int> degs(r, 0);
        bool ok = true;
        for (int s = 0; s < r && ok; ++s) {
            const Vec& w = spaces[s][0];
            int nz = -1;
            for (int i = 0; i < r; ++i)
                if (w[i] % p != 0) {
                    nz = i;
                    break;
                }
            long long winv = inv_mod(w[nz], p);
            std::vector<long long> omega(r);
            for (int i = 0; i < r; ++i) {
                long long acc = 0;
                for (int col = 0; col < r; ++col)
                    acc = (acc + M[i][nz][col] % p * (w[col] % p)) % p;
                omega[i] = acc * winv % p;
            }
            long long S = 0;
            for (int i = 0; i < r; ++i)
                S = (S + omega[i] * omega[inv_class[i]] % p * inv_mod(csize[i], p)) % p;
            if (S == 0) {
                ok = false;
                break;
            }
            long long d2 = n % p * inv_mod(S, p) % p;
            int deg = 0;
            for (int d = 1; static_cast<long long>(d) * d <= n; ++d)
                if (static_cast<long long>(d) * d % p == d2) {
                    deg = d;
                    break;
                }
            if (deg == 0) {
                ok = false;
                break;
            }
            degs[s] = deg;
            for (int i = 0; i < r; ++i)
                chi_mod[s][i] = static_cast<long long>(deg) % p * omega[i] % p * inv_mod(csize[i], p) % p;
        }
        if (!ok) continue;

        // lift to exact cyclotomic values in Q(zeta_e)
        long long z = pow_mod(find_generator(p), (p - 1) / e, p);
        long long einv = inv_mod(e, p);
        std::vector<std::vector<Cyclotomic>> chars(r, std::vector<Cyclotomic>(r));
        bool lifted = true;
        for (int s = 0; s < r && lifted; ++s) {
            for (int c = 0; c < r && lifted; ++c) {
                int rep = reps[c];
                Cyclotomic val = Cyclotomic::zero(e == 1 ? 1 : static_cast<unsigned>(e));
                for (int k = 0; k < e; ++k) {
                    long long mk = 0;
                    for (int l = 0; l < e; ++l) {
                        int gl = g.power(rep, l);
                        long long zkl = pow_mod(z, static_cast<long long>(k) * l % (p - 1), p);
                        mk = (mk + chi_mod[s][T.class_of[gl]] * inv_mod(zkl, p)) % p;
                    }
                    mk = mk * einv % p;
                    if (mk > degs[s]) {
                        lifted = false;
                        break;
                    }
                    if (mk > 0)
                        val = val + Cyclotomic::rational(Rat(mk)) *
                                        Cyclotomic::root_of_unity(static_cast<unsigned>(e), k);
                }
                chars[s][c] = val;
            }
        }
        if (!lifted) continue;

        // order: trivial first, then by degree
        std::vector<int> perm(r);
        for (int i = 0; i < r; ++i) perm[i] = i;
        auto triv = [&](int s) {
            if (degs[s] != 1) return false;
            for (int c = 0; c < r; ++c)
                if (!chars[s][c].is_one()) return false;
            return true;
        };
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            bool ta = triv(a), tb = triv(b);
            if (ta != tb) return ta;
            return degs[a] < degs[b];
        });
        for (int i : perm) {
            T.degrees.push_back(degs[i]);
            T.chars.push_back(std::move(chars[i]));
        }
        return T;
    }
    throw Error("character_table: Dixon splitting failed for all tried primes");
}

} // namespace stt
