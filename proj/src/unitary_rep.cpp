#include "stt/unitary_rep.hpp"

#include "stt/errors.hpp"

namespace stt {

bool UnitaryRep::is_genuine() const {
    int n = group.order();
    if (!images[group.identity].is_identity()) return false;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (images[s] * images[t] != images[group.mul[s][t]]) return false;
    return true;
}

bool UnitaryRep::all_unitary() const {
    for (const auto& m : images)
        if (!m.is_unitary()) return false;
    return true;
}

bool UnitaryRep::has_multiplier(const Cocycle2& c) const {
    int n = group.order();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (images[s] * images[t] != images[group.mul[s][t]].scaled(c.at(s, t)))
                return false;
    return true;
}

UnitaryRep UnitaryRep::trivial(const FiniteGroup& g) {
    UnitaryRep r;
    r.group = g;
    r.dim = 1;
    r.images.assign(g.order(), CycMatrix::identity(1));
    return r;
}

UnitaryRep UnitaryRep::one_dim(const FiniteGroup& g, std::vector<Cyclotomic> values) {
    UnitaryRep r;
    r.group = g;
    r.dim = 1;
    for (const auto& v : values) {
        CycMatrix m(1, 1);
        m.at(0, 0) = v;
        r.images.push_back(m);
    }
    if (!r.is_genuine()) throw NotAHomomorphism("one_dim: values are not a character");
    return r;
}

UnitaryRep UnitaryRep::regular(const FiniteGroup& g) {
    UnitaryRep r;
    r.group = g;
    r.dim = g.order();
    int n = g.order();
    for (int s = 0; s < n; ++s) {
        CycMatrix m(n, n);
        for (int t = 0; t < n; ++t) m.at(g.mul[s][t], t) = Cyclotomic::one();
        r.images.push_back(std::move(m));
    }
    return r;
}

std::vector<Cyclotomic> character(const UnitaryRep& rho) {
    std::vector<Cyclotomic> chi;
    chi.reserve(rho.images.size());
    for (const auto& m : rho.images) chi.push_back(m.trace());
    return chi;
}

UnitaryRep twist_projective_rep(const UnitaryRep& rho, const Cocycle2& c, const Splitting& alpha) {
    const FiniteGroup& g = rho.group;
    const int n = g.order();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (rho.images[s] * rho.images[t] != rho.images[g.mul[s][t]].scaled(c.at(s, t)))
                throw MultiplierMismatch("rho(s)rho(t) != c(s,t) rho(st) at (" +
                                         std::to_string(s) + "," + std::to_string(t) + ")");
    if (coboundary(alpha).values != c.values)
        throw MultiplierMismatch("alpha is not a splitting of c");

    UnitaryRep out;
    out.group = g;
    out.dim = rho.dim;
    out.images.reserve(n);
    for (int s = 0; s < n; ++s)
        out.images.push_back(rho.images[s].scaled(alpha.alpha[s].inverse()));
    if (!out.is_genuine())
        throw MultiplierMismatch("twisted map failed the homomorphism check");
    return out;
}

MatrixGroup MatrixGroup::closure(const std::vector<CycMatrix>& generators, int cap) {
    if (generators.empty()) throw Error("MatrixGroup::closure: no generators");
    int dim = generators[0].rows();
    MatrixGroup mg;
    mg.elements.push_back(CycMatrix::identity(dim));
    auto find_in = [&](const CycMatrix& m) {
        for (size_t i = 0; i < mg.elements.size(); ++i)
            if (mg.elements[i] == m) return static_cast<int>(i);
        return -1;
    };
    std::vector<CycMatrix> frontier = {CycMatrix::identity(dim)};
    while (!frontier.empty()) {
        std::vector<CycMatrix> next;
        for (const auto& x : frontier) {
            for (const auto& gmat : generators) {
                CycMatrix y = x * gmat;
                if (find_in(y) < 0) {
                    mg.elements.push_back(y);
                    next.push_back(y);
                    if (static_cast<int>(mg.elements.size()) > cap)
                        throw Error("MatrixGroup::closure: cap exceeded");
                }
            }
        }
        frontier = std::move(next);
    }
    int n = static_cast<int>(mg.elements.size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int idx = find_in(mg.elements[s] * mg.elements[t]);
            if (idx < 0) throw Error("MatrixGroup::closure: not closed");
            mul[s][t] = idx;
        }
    mg.group = FiniteGroup::from_table(std::move(mul));
    return mg;
}

int MatrixGroup::find(const CycMatrix& m) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == m) return static_cast<int>(i);
    return -1;
}

UnitaryRep MatrixGroup::inclusion_rep() const {
    UnitaryRep r;
    r.group = group;
    r.dim = elements.empty() ? 0 : elements[0].rows();
    r.images = elements;
    return r;
}

UnitaryRep build_eta_e(const UnitaryRep& theta, const MatrixGroup& h, const UnitaryRep& eta,
                       const UnitaryRep& epsilon, int e,
                       const std::vector<Cyclotomic>& sqrt_choice) {
    const FiniteGroup& g = theta.group;
    const int n = g.order();
    if (static_cast<int>(sqrt_choice.size()) != n)
        throw Error("build_eta_e: sqrt_choice size mismatch");

    // parity hypothesis eta(-I) = (-1)^e I
    int minus_idx = h.find(-CycMatrix::identity(h.elements[0].rows()));
    if (minus_idx < 0) throw Error("build_eta_e: -I not in H");
    CycMatrix expected = CycMatrix::identity(eta.dim);
    if (e % 2 == 1) expected = -expected;
    if (eta.images[minus_idx] != expected)
        throw ParityViolation("eta(-I) != (-1)^e I");

    for (int s = 0; s < n; ++s) {
        if (sqrt_choice[s] * sqrt_choice[s] != epsilon.images[s].at(0, 0))
            throw Error("build_eta_e: sqrt_choice(s)^2 != epsilon(s)");
    }

    UnitaryRep out;
    out.group = g;
    out.dim = eta.dim;
    out.images.reserve(n);
    for (int s = 0; s < n; ++s) {
        CycMatrix lifted = theta.images[s].scaled(sqrt_choice[s]);
        int idx = h.find(lifted);
        if (idx < 0) throw Error("build_eta_e: sqrt(s)*theta(s) not in H");
        out.images.push_back(eta.images[idx].scaled(sqrt_choice[s].pow(-e)));
    }
    if (!out.is_genuine())
        throw NotAHomomorphism("build_eta_e: result is not a homomorphism");
    return out;
}

} // namespace stt
