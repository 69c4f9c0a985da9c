#pragma once

#include "l2b/weil.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace l2b {

/// Bracket of bidegree (-1,-1) on W(g), fixed by its generator table:
///   [gamma_a, gamma_b] = sum_c core(a,b,c) gamma_c
///   [gamma_a, alpha_i] = sum_j side(a,i,j) alpha_j
///   [alpha_i, alpha_j] = 0
/// and extended by graded skew symmetry and the Leibniz rule in total degree.
class GerstenhaberStructure {
  public:
    GerstenhaberStructure(std::size_t n0, std::size_t n1, SparseTensor core, SparseTensor side)
        : n0_(n0), n1_(n1), core_(std::move(core)), side_(std::move(side)) {
        if (n0 > max_side_dim)
            throw Error(ErrorKind::dimension_mismatch, "Weil algebra supports at most 32 side generators");
        if (core_.dims() != std::vector<std::size_t>{n1, n1, n1})
            throw Error(ErrorKind::dimension_mismatch, "gamma-gamma table must have shape (n1,n1,n1)");
        if (side_.dims() != std::vector<std::size_t>{n1, n0, n0})
            throw Error(ErrorKind::dimension_mismatch, "gamma-alpha table must have shape (n1,n0,n0)");
    }

    static GerstenhaberStructure zero(std::size_t n0, std::size_t n1) {
        return GerstenhaberStructure(n0, n1, SparseTensor({n1, n1, n1}), SparseTensor({n1, n0, n0}));
    }

    std::size_t n0() const { return n0_; }
    std::size_t n1() const { return n1_; }
    const SparseTensor &core_table() const { return core_; }
    const SparseTensor &side_table() const { return side_; }

    WeilElement generator_bracket(const Generator &g, const Generator &h) const {
        WeilElement out(n0_, n1_);
        if (g.is_gamma && h.is_gamma) {
            for (std::size_t c = 0; c < n1_; ++c)
                out.add_term(WeilMonomial::of({true, c}), core_.get({g.index, h.index, c}));
        } else if (g.is_gamma) {
            for (std::size_t j = 0; j < n0_; ++j)
                out.add_term(WeilMonomial::of({false, j}), side_.get({g.index, h.index, j}));
        } else if (h.is_gamma) {
            // |alpha||gamma| = 2, so [alpha, gamma] = -[gamma, alpha]
            for (std::size_t j = 0; j < n0_; ++j)
                out.add_term(WeilMonomial::of({false, j}), -side_.get({h.index, g.index, j}));
        }
        return out;
    }

    friend bool operator==(const GerstenhaberStructure &, const GerstenhaberStructure &) = default;

  private:
    std::size_t n0_, n1_;
    SparseTensor core_, side_;
};

/// The structure induced by the dual crossed module [g0* -> g1*]: its base
/// bracket on g1* gives the gamma table, its action of g1* on g0* the mixed one.
inline GerstenhaberStructure build_gerstenhaber(const CrossedModuleData &cm2) {
    return GerstenhaberStructure(cm2.n1(), cm2.n0(), cm2.base().structure(), cm2.action());
}

/// Memoizes monomial brackets; keep one per structure when bracketing many times.
class GerstenhaberEvaluator {
  public:
    explicit GerstenhaberEvaluator(const GerstenhaberStructure &g) : g_(g) {}

    const GerstenhaberStructure &structure() const { return g_; }

    WeilElement bracket(const WeilElement &a, const WeilElement &b) {
        a.check_dims(b);
        if (a.n0() != g_.n0() || a.n1() != g_.n1())
            throw Error(ErrorKind::dimension_mismatch, "elements do not live on the bracket's Weil algebra");
        WeilElement out(g_.n0(), g_.n1());
        for (const auto &[m1, c1] : a.terms())
            for (const auto &[m2, c2] : b.terms()) {
                WeilElement t = monomial_bracket(m1, m2);
                if (!t.is_zero())
                    out += (c1 * c2) * t;
            }
        return out;
    }

    const WeilElement &monomial_bracket(const WeilMonomial &x, const WeilMonomial &y) {
        auto key = std::make_pair(x, y);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        WeilElement v = compute(x, y);
        return cache_.emplace(std::move(key), std::move(v)).first->second;
    }

  private:
    WeilElement compute(const WeilMonomial &x, const WeilMonomial &y) {
        const std::size_t n0 = g_.n0(), n1 = g_.n1();
        WeilElement out(n0, n1);
        if (x.is_constant() || y.is_constant())
            return out;
        auto gy = y.generators();
        if (gy.size() > 1) {
            // [x, y1...yr] = sum_k (-1)^{|x| |y1..y_{k-1}|} y1..[x,yk]..yr
            int prefix = 0;
            for (std::size_t k = 0; k < gy.size(); ++k) {
                WeilMonomial pre, post;
                for (std::size_t t = 0; t < k; ++t)
                    pre = monomial_product(pre, WeilMonomial::of(gy[t])).first;
                for (std::size_t t = k + 1; t < gy.size(); ++t)
                    post = monomial_product(post, WeilMonomial::of(gy[t])).first;
                const WeilElement &inner = monomial_bracket(x, WeilMonomial::of(gy[k]));
                if (!inner.is_zero()) {
                    WeilElement t = weil_mul(weil_mul(WeilElement::monomial(n0, n1, pre), inner),
                                             WeilElement::monomial(n0, n1, post));
                    if ((x.total_degree() * prefix) % 2 != 0)
                        t *= Rational(-1);
                    out += t;
                }
                prefix += gy[k].degree();
            }
            return out;
        }
        auto gx = x.generators();
        if (gx.size() > 1) {
            // [x, g] = -(-1)^{|x||g|} [g, x]
            WeilElement t = monomial_bracket(y, x);
            if ((x.total_degree() * y.total_degree()) % 2 == 0)
                t *= Rational(-1);
            return t;
        }
        return g_.generator_bracket(gx[0], gy[0]);
    }

    const GerstenhaberStructure &g_;
    std::map<std::pair<WeilMonomial, WeilMonomial>, WeilElement> cache_;
};

inline WeilElement gerst_bracket(const GerstenhaberStructure &g, const WeilElement &a, const WeilElement &b) {
    GerstenhaberEvaluator ev(g);
    return ev.bracket(a, b);
}

inline constexpr int default_degree_bound = 4;

namespace detail {

inline int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

inline Witness monomial_witness(const std::vector<std::size_t> &positions, const std::vector<WeilMonomial> &ms,
                                const WeilElement &lhs, const WeilElement &rhs) {
    static const char *names[] = {"x", "y", "z"};
    std::string note;
    for (std::size_t k = 0; k < positions.size(); ++k)
        note += (k ? ", " : "") + std::string(names[k]) + "=" + ms[positions[k]].str();
    return Witness{positions, lhs.str(), rhs.str(), note + " (indices are positions in the degree-ordered monomial list)"};
}

} // namespace detail

/// Graded skew symmetry, Jacobi and Leibniz on all monomials of total degree
/// 1..degree_bound.
inline VerificationReport check_gerst_axioms(const GerstenhaberStructure &g, int degree_bound = default_degree_bound) {
    const std::size_t n0 = g.n0(), n1 = g.n1();
    const auto ms = monomials_up_to(n0, n1, degree_bound);
    std::vector<WeilElement> el;
    for (const auto &m : ms)
        el.push_back(WeilElement::monomial(n0, n1, m));
    GerstenhaberEvaluator ev(g);
    VerificationReport rep;
    const std::size_t n = ms.size();

    [&] {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const int dx = ms[x].total_degree(), dy = ms[y].total_degree();
                auto lhs = ev.bracket(el[x], el[y]);
                auto rhs = Rational(-detail::sign_pow(dx * dy)) * ev.bracket(el[y], el[x]);
                if (lhs != rhs) {
                    rep.add_fail("skew_symmetry", detail::monomial_witness({x, y}, ms, lhs, rhs));
                    return;
                }
            }
        rep.add_pass("skew_symmetry");
    }();

    [&] {
        std::vector<std::vector<WeilElement>> pair(n, std::vector<WeilElement>(n));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                pair[x][y] = ev.bracket(el[x], el[y]);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    const int dx = ms[x].total_degree(), dy = ms[y].total_degree();
                    auto lhs = ev.bracket(el[x], pair[y][z]);
                    auto rhs = ev.bracket(pair[x][y], el[z]) +
                               Rational(detail::sign_pow(dx * dy)) * ev.bracket(el[y], pair[x][z]);
                    if (lhs != rhs) {
                        rep.add_fail("jacobi", detail::monomial_witness({x, y, z}, ms, lhs, rhs));
                        return;
                    }
                }
        rep.add_pass("jacobi");
    }();

    [&] {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    const int dx = ms[x].total_degree(), dy = ms[y].total_degree();
                    if (dy + ms[z].total_degree() > degree_bound)
                        continue;
                    auto lhs = ev.bracket(el[x], weil_mul(el[y], el[z]));
                    auto rhs = weil_mul(ev.bracket(el[x], el[y]), el[z]) +
                               Rational(detail::sign_pow(dx * dy)) * weil_mul(el[y], ev.bracket(el[x], el[z]));
                    if (lhs != rhs) {
                        rep.add_fail("leibniz", detail::monomial_witness({x, y, z}, ms, lhs, rhs));
                        return;
                    }
                }
        rep.add_pass("leibniz");
    }();
    return rep;
}

/// d[a,b] = [da,b] + (-1)^{|a|}[a,db]; checked on generator pairs and then on
/// all monomial pairs up to degree_bound.
inline VerificationReport check_derivation_of_bracket(const GradedDerivation &d, const GerstenhaberStructure &g,
                                                      int degree_bound = default_degree_bound) {
    if (!d.is_odd())
        throw Error(ErrorKind::unsupported, "derivation-of-bracket check needs an odd derivation");
    if (d.n0() != g.n0() || d.n1() != g.n1())
        throw Error(ErrorKind::dimension_mismatch, "derivation and bracket live on different Weil algebras");
    const std::size_t n0 = g.n0(), n1 = g.n1();
    GerstenhaberEvaluator ev(g);
    VerificationReport rep;

    auto run = [&](const std::string &id, const std::vector<WeilMonomial> &ms) {
        std::vector<WeilElement> el, del;
        for (const auto &m : ms) {
            el.push_back(WeilElement::monomial(n0, n1, m));
            del.push_back(apply_derivation(d, el.back()));
        }
        for (std::size_t x = 0; x < ms.size(); ++x)
            for (std::size_t y = 0; y < ms.size(); ++y) {
                auto lhs = apply_derivation(d, ev.bracket(el[x], el[y]));
                auto rhs = ev.bracket(del[x], el[y]) +
                           Rational(detail::sign_pow(ms[x].total_degree())) * ev.bracket(el[x], del[y]);
                if (lhs != rhs) {
                    rep.add_fail(id, detail::monomial_witness({x, y}, ms, lhs, rhs));
                    return;
                }
            }
        rep.add_pass(id);
    };
    std::vector<WeilMonomial> gens;
    for (std::size_t i = 0; i < n0; ++i)
        gens.push_back(WeilMonomial::of({false, i}));
    for (std::size_t b = 0; b < n1; ++b)
        gens.push_back(WeilMonomial::of({true, b}));
    run("generators", gens);
    run("monomials", monomials_up_to(n0, n1, degree_bound));
    return rep;
}

} // namespace l2b
