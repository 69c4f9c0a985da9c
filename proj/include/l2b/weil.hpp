#pragma once

#include "l2b/two_term.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace l2b {

// W(g) = ^g0* (x) Sym g1*. Generators alpha_i of g0* have bidegree (1,0) and
// total degree 1; generators gamma_b of g1* have bidegree (1,1) and total
// degree 2. Only the alphas anticommute.

using Bidegree = std::pair<int, int>;

inline constexpr std::size_t max_side_dim = 32;

struct Generator {
    bool is_gamma = false;
    std::size_t index = 0;

    int degree() const { return is_gamma ? 2 : 1; }
    Bidegree bidegree() const { return is_gamma ? Bidegree{1, 1} : Bidegree{1, 0}; }
    std::string name() const { return (is_gamma ? "g" : "a") + std::to_string(index); }
    friend auto operator<=>(const Generator &, const Generator &) = default;
};

/// alpha_{ext} gamma^{sym}: ext is a bitmask over g0* indices (strictly
/// increasing product), sym a sorted multiset over g1* indices.
struct WeilMonomial {
    std::uint32_t ext = 0;
    std::vector<std::uint8_t> sym;

    static WeilMonomial of(const Generator &g) {
        WeilMonomial m;
        if (g.is_gamma)
            m.sym.push_back(static_cast<std::uint8_t>(g.index));
        else
            m.ext = std::uint32_t{1} << g.index;
        return m;
    }

    int ext_degree() const { return std::popcount(ext); }
    int sym_degree() const { return static_cast<int>(sym.size()); }
    int total_degree() const { return ext_degree() + 2 * sym_degree(); }
    Bidegree bidegree() const { return {ext_degree() + sym_degree(), sym_degree()}; }
    bool is_constant() const { return ext == 0 && sym.empty(); }

    std::vector<std::size_t> ext_indices() const {
        std::vector<std::size_t> out;
        for (std::uint32_t e = ext; e; e &= e - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(e)));
        return out;
    }

    /// Canonical factorization: alphas ascending, then gammas ascending.
    std::vector<Generator> generators() const {
        std::vector<Generator> out;
        for (auto i : ext_indices())
            out.push_back({false, i});
        for (auto b : sym)
            out.push_back({true, b});
        return out;
    }

    std::string str() const {
        if (is_constant())
            return "1";
        std::string s;
        for (auto i : ext_indices())
            s += (s.empty() ? "" : "*") + std::string("a") + std::to_string(i);
        for (std::size_t k = 0; k < sym.size();) {
            std::size_t e = k;
            while (e < sym.size() && sym[e] == sym[k])
                ++e;
            s += (s.empty() ? "" : "*") + std::string("g") + std::to_string(sym[k]);
            if (e - k > 1)
                s += "^" + std::to_string(e - k);
            k = e;
        }
        return s;
    }

    friend auto operator<=>(const WeilMonomial &, const WeilMonomial &) = default;
    friend bool operator==(const WeilMonomial &, const WeilMonomial &) = default;
};

/// Product of monomials with its Koszul sign; sign 0 when an alpha repeats.
inline std::pair<WeilMonomial, int> monomial_product(const WeilMonomial &x, const WeilMonomial &y) {
    if (x.ext & y.ext)
        return {{}, 0};
    int swaps = 0;
    for (std::uint32_t e = y.ext; e; e &= e - 1) {
        int bit = std::countr_zero(e);
        swaps += std::popcount(x.ext >> (bit + 1));
    }
    WeilMonomial m;
    m.ext = x.ext | y.ext;
    m.sym.resize(x.sym.size() + y.sym.size());
    std::merge(x.sym.begin(), x.sym.end(), y.sym.begin(), y.sym.end(), m.sym.begin());
    return {std::move(m), (swaps % 2) ? -1 : 1};
}

class WeilElement {
  public:
    WeilElement() = default;
    WeilElement(std::size_t n0, std::size_t n1) : n0_(n0), n1_(n1) {
        if (n0 > max_side_dim)
            throw Error(ErrorKind::dimension_mismatch, "Weil algebra supports at most 32 side generators");
    }

    static WeilElement one(std::size_t n0, std::size_t n1) { return monomial(n0, n1, WeilMonomial{}); }
    static WeilElement monomial(std::size_t n0, std::size_t n1, const WeilMonomial &m, const Rational &c = 1) {
        WeilElement e(n0, n1);
        e.add_term(m, c);
        return e;
    }
    static WeilElement alpha(std::size_t n0, std::size_t n1, std::size_t i) {
        if (i >= n0)
            throw Error(ErrorKind::range, "alpha index out of range");
        return monomial(n0, n1, WeilMonomial::of({false, i}));
    }
    static WeilElement gamma(std::size_t n0, std::size_t n1, std::size_t b) {
        if (b >= n1)
            throw Error(ErrorKind::range, "gamma index out of range");
        return monomial(n0, n1, WeilMonomial::of({true, b}));
    }

    std::size_t n0() const { return n0_; }
    std::size_t n1() const { return n1_; }
    const std::map<WeilMonomial, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const WeilMonomial &m, const Rational &c) {
        if (c.is_zero())
            return;
        check_monomial(m);
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Rational coefficient(const WeilMonomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational() : it->second;
    }

    /// Bidegree if homogeneous (the zero element reports nullopt).
    std::optional<Bidegree> bidegree() const {
        std::optional<Bidegree> b;
        for (const auto &[m, c] : terms_) {
            if (b && *b != m.bidegree())
                return std::nullopt;
            b = m.bidegree();
        }
        return b;
    }

    std::optional<int> total_degree() const {
        std::optional<int> d;
        for (const auto &[m, c] : terms_) {
            if (d && *d != m.total_degree())
                return std::nullopt;
            d = m.total_degree();
        }
        return d;
    }

    WeilElement &operator+=(const WeilElement &o) {
        check_dims(o);
        for (const auto &[m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    WeilElement &operator-=(const WeilElement &o) {
        check_dims(o);
        for (const auto &[m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    WeilElement &operator*=(const Rational &s) {
        if (s.is_zero())
            terms_.clear();
        for (auto &[m, c] : terms_)
            c *= s;
        return *this;
    }
    friend WeilElement operator+(WeilElement a, const WeilElement &b) { return a += b; }
    friend WeilElement operator-(WeilElement a, const WeilElement &b) { return a -= b; }
    friend WeilElement operator*(const Rational &s, WeilElement a) { return a *= s; }
    WeilElement operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const WeilElement &a, const WeilElement &b) {
        return a.n0_ == b.n0_ && a.n1_ == b.n1_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto &[m, c] : terms_) {
            if (c.sign() < 0)
                s += s.empty() ? "-" : " - ";
            else if (!s.empty())
                s += " + ";
            Rational mag = c.sign() < 0 ? -c : c;
            if (m.is_constant())
                s += mag.str();
            else if (mag == Rational(1))
                s += m.str();
            else
                s += mag.str() + "*" + m.str();
        }
        return s;
    }

    void check_dims(const WeilElement &o) const {
        if (n0_ != o.n0_ || n1_ != o.n1_)
            throw Error(ErrorKind::dimension_mismatch, "Weil elements over different spaces: (" +
                                                           std::to_string(n0_) + "," + std::to_string(n1_) + ") vs (" +
                                                           std::to_string(o.n0_) + "," + std::to_string(o.n1_) + ")");
    }

  private:
    void check_monomial(const WeilMonomial &m) const {
        if (n0_ < max_side_dim && (m.ext >> n0_) != 0)
            throw Error(ErrorKind::range, "monomial uses an alpha outside g0*");
        for (auto b : m.sym)
            if (b >= n1_)
                throw Error(ErrorKind::range, "monomial uses a gamma outside g1*");
    }

    std::size_t n0_ = 0, n1_ = 0;
    std::map<WeilMonomial, Rational> terms_;
};

inline WeilElement weil_mul(const WeilElement &a, const WeilElement &b) {
    a.check_dims(b);
    WeilElement out(a.n0(), a.n1());
    for (const auto &[m1, c1] : a.terms())
        for (const auto &[m2, c2] : b.terms()) {
            auto [m, s] = monomial_product(m1, m2);
            if (s != 0)
                out.add_term(m, s > 0 ? c1 * c2 : -(c1 * c2));
        }
    return out;
}

inline WeilElement generator_element(std::size_t n0, std::size_t n1, const Generator &g) {
    return g.is_gamma ? WeilElement::gamma(n0, n1, g.index) : WeilElement::alpha(n0, n1, g.index);
}

/// All monomials of total degree 1..max_degree, ordered by degree then (ext, sym).
inline std::vector<WeilMonomial> monomials_up_to(std::size_t n0, std::size_t n1, int max_degree) {
    std::vector<WeilMonomial> out;
    std::vector<std::uint8_t> sym;
    auto rec_sym = [&](auto &self, std::uint32_t ext, std::size_t start, int deg_left) -> void {
        WeilMonomial m{ext, sym};
        if (!m.is_constant())
            out.push_back(m);
        if (deg_left < 2)
            return;
        for (std::size_t b = start; b < n1; ++b) {
            sym.push_back(static_cast<std::uint8_t>(b));
            self(self, ext, b, deg_left - 2);
            sym.pop_back();
        }
    };
    for (std::uint32_t ext = 0; ext < (std::uint32_t{1} << n0); ++ext) {
        int d = std::popcount(ext);
        if (d <= max_degree)
            rec_sym(rec_sym, ext, 0, max_degree - d);
    }
    std::stable_sort(out.begin(), out.end(), [](const WeilMonomial &x, const WeilMonomial &y) {
        if (x.total_degree() != y.total_degree())
            return x.total_degree() < y.total_degree();
        return x < y;
    });
    return out;
}

/// Derivation of W(g) given by its values on generators. Odd total degree
/// derivations are extended with the Koszul sign (-1)^{deg * |prefix|}.
class GradedDerivation {
  public:
    GradedDerivation(std::size_t n0, std::size_t n1, int total_degree, std::optional<Bidegree> bidegree,
                     std::vector<WeilElement> alpha_images, std::vector<WeilElement> gamma_images)
        : n0_(n0), n1_(n1), total_degree_(total_degree), bidegree_(bidegree),
          alpha_images_(std::move(alpha_images)), gamma_images_(std::move(gamma_images)) {
        if (alpha_images_.size() != n0 || gamma_images_.size() != n1)
            throw Error(ErrorKind::dimension_mismatch, "derivation needs one image per generator");
        if (bidegree_ && bidegree_->first + bidegree_->second != total_degree_)
            throw Error(ErrorKind::dimension_mismatch, "bidegree does not sum to the total degree");
        for (std::size_t k = 0; k < n0 + n1; ++k) {
            Generator g = k < n0 ? Generator{false, k} : Generator{true, k - n0};
            const WeilElement &img = image(g);
            if (img.n0() != n0 || img.n1() != n1)
                throw Error(ErrorKind::dimension_mismatch, "derivation image over the wrong Weil algebra");
            for (const auto &[m, c] : img.terms()) {
                if (m.total_degree() != g.degree() + total_degree_)
                    throw Error(ErrorKind::dimension_mismatch, "image of " + g.name() + " has the wrong total degree");
                if (bidegree_ && m.bidegree() != Bidegree{g.bidegree().first + bidegree_->first,
                                                          g.bidegree().second + bidegree_->second})
                    throw Error(ErrorKind::dimension_mismatch, "image of " + g.name() + " has the wrong bidegree");
            }
        }
    }

    static GradedDerivation zero(std::size_t n0, std::size_t n1, int total_degree, std::optional<Bidegree> bd) {
        return GradedDerivation(n0, n1, total_degree, bd, std::vector<WeilElement>(n0, WeilElement(n0, n1)),
                                std::vector<WeilElement>(n1, WeilElement(n0, n1)));
    }

    std::size_t n0() const { return n0_; }
    std::size_t n1() const { return n1_; }
    int total_degree() const { return total_degree_; }
    bool is_odd() const { return total_degree_ % 2 != 0; }
    const std::optional<Bidegree> &bidegree() const { return bidegree_; }
    const WeilElement &image(const Generator &g) const {
        return g.is_gamma ? gamma_images_.at(g.index) : alpha_images_.at(g.index);
    }
    const std::vector<WeilElement> &alpha_images() const { return alpha_images_; }
    const std::vector<WeilElement> &gamma_images() const { return gamma_images_; }

    bool is_zero() const {
        return std::all_of(alpha_images_.begin(), alpha_images_.end(), [](auto &e) { return e.is_zero(); }) &&
               std::all_of(gamma_images_.begin(), gamma_images_.end(), [](auto &e) { return e.is_zero(); });
    }

    friend GradedDerivation operator+(const GradedDerivation &a, const GradedDerivation &b) {
        if (a.n0_ != b.n0_ || a.n1_ != b.n1_ || a.total_degree_ != b.total_degree_)
            throw Error(ErrorKind::dimension_mismatch, "can only add derivations of equal total degree");
        std::optional<Bidegree> bd = a.bidegree_ == b.bidegree_ ? a.bidegree_ : std::nullopt;
        auto ai = a.alpha_images_, gi = a.gamma_images_;
        for (std::size_t i = 0; i < ai.size(); ++i)
            ai[i] += b.alpha_images_[i];
        for (std::size_t i = 0; i < gi.size(); ++i)
            gi[i] += b.gamma_images_[i];
        return GradedDerivation(a.n0_, a.n1_, a.total_degree_, bd, std::move(ai), std::move(gi));
    }

  private:
    std::size_t n0_, n1_;
    int total_degree_;
    std::optional<Bidegree> bidegree_;
    std::vector<WeilElement> alpha_images_, gamma_images_;
};

inline WeilElement apply_derivation(const GradedDerivation &d, const WeilElement &a) {
    if (a.n0() != d.n0() || a.n1() != d.n1())
        throw Error(ErrorKind::dimension_mismatch, "derivation and element live on different Weil algebras");
    const std::size_t n0 = a.n0(), n1 = a.n1();
    WeilElement out(n0, n1);
    for (const auto &[m, c] : a.terms()) {
        auto gens = m.generators();
        int prefix_degree = 0;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            WeilMonomial pre, post;
            for (std::size_t t = 0; t < k; ++t) {
                auto [p, s] = monomial_product(pre, WeilMonomial::of(gens[t]));
                pre = p;
            }
            for (std::size_t t = k + 1; t < gens.size(); ++t) {
                auto [p, s] = monomial_product(post, WeilMonomial::of(gens[t]));
                post = p;
            }
            const bool flip = (d.total_degree() * prefix_degree) % 2 != 0;
            WeilElement term = weil_mul(weil_mul(WeilElement::monomial(n0, n1, pre), d.image(gens[k])),
                                        WeilElement::monomial(n0, n1, post));
            term *= flip ? -c : c;
            out += term;
            prefix_degree += gens[k].degree();
        }
    }
    return out;
}

/// d1 d2 - (-1)^{|d1||d2|} d2 d1, evaluated on generators.
inline GradedDerivation graded_commutator(const GradedDerivation &d1, const GradedDerivation &d2) {
    if (d1.n0() != d2.n0() || d1.n1() != d2.n1())
        throw Error(ErrorKind::dimension_mismatch, "derivations on different Weil algebras");
    const bool both_odd = d1.is_odd() && d2.is_odd();
    auto on = [&](const Generator &g) {
        auto x = apply_derivation(d1, d2.image(g));
        auto y = apply_derivation(d2, d1.image(g));
        return both_odd ? x + y : x - y;
    };
    std::vector<WeilElement> ai, gi;
    for (std::size_t i = 0; i < d1.n0(); ++i)
        ai.push_back(on({false, i}));
    for (std::size_t b = 0; b < d1.n1(); ++b)
        gi.push_back(on({true, b}));
    std::optional<Bidegree> bd;
    if (d1.bidegree() && d2.bidegree())
        bd = Bidegree{d1.bidegree()->first + d2.bidegree()->first, d1.bidegree()->second + d2.bidegree()->second};
    return GradedDerivation(d1.n0(), d1.n1(), d1.total_degree() + d2.total_degree(), bd, std::move(ai),
                            std::move(gi));
}

/// delta_v(alpha_i) = sum_b partial(i,b) gamma_b, delta_v(gamma) = 0.
inline GradedDerivation build_delta_v(const TwoVectorSpace &t) {
    const std::size_t n0 = t.dim0(), n1 = t.dim1();
    std::vector<WeilElement> ai(n0, WeilElement(n0, n1)), gi(n1, WeilElement(n0, n1));
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t b = 0; b < n1; ++b)
            ai[i].add_term(WeilMonomial::of({true, b}), t.partial()(i, b));
    return GradedDerivation(n0, n1, 1, Bidegree{0, 1}, std::move(ai), std::move(gi));
}

/// Chevalley-Eilenberg signs: delta_h alpha_k = -sum_{i<j} c^k_{ij} alpha_i alpha_j,
/// delta_h gamma_b = -sum_{i,a} a^b_{ia} alpha_i gamma_a.
inline GradedDerivation build_delta_h(const SparseTensor &bracket0, const SparseTensor &action) {
    if (bracket0.rank() != 3 || action.rank() != 3)
        throw Error(ErrorKind::dimension_mismatch, "bracket and action must be rank 3");
    const std::size_t n0 = bracket0.dim(0), n1 = action.dim(1);
    if (bracket0.dims() != std::vector<std::size_t>{n0, n0, n0} ||
        action.dims() != std::vector<std::size_t>{n0, n1, n1})
        throw Error(ErrorKind::dimension_mismatch, "bracket (n0,n0,n0) and action (n0,n1,n1) shapes disagree");
    std::vector<WeilElement> ai(n0, WeilElement(n0, n1)), gi(n1, WeilElement(n0, n1));
    for (const auto &[idx, v] : bracket0.entries())
        if (idx[0] < idx[1]) {
            WeilMonomial m;
            m.ext = (std::uint32_t{1} << idx[0]) | (std::uint32_t{1} << idx[1]);
            ai[idx[2]].add_term(m, -v);
        }
    for (const auto &[idx, v] : action.entries()) {
        WeilMonomial m;
        m.ext = std::uint32_t{1} << idx[0];
        m.sym = {static_cast<std::uint8_t>(idx[1])};
        gi[idx[2]].add_term(m, -v);
    }
    return GradedDerivation(n0, n1, 1, Bidegree{1, 0}, std::move(ai), std::move(gi));
}

/// delta_J gamma_b = -sum_{x<y<z} l3^b_{xyz} alpha_x alpha_y alpha_z, delta_J alpha = 0.
inline GradedDerivation build_delta_j(const SparseTensor &l3) {
    if (l3.rank() != 4 || l3.dim(0) != l3.dim(1) || l3.dim(1) != l3.dim(2))
        throw Error(ErrorKind::dimension_mismatch, "jacobiator must have shape (n0,n0,n0,n1)");
    for (const auto &[idx, v] : l3.entries())
        if (l3.get({idx[1], idx[0], idx[2], idx[3]}) != -v || l3.get({idx[0], idx[2], idx[1], idx[3]}) != -v)
            throw Error(ErrorKind::antisymmetry, "jacobiator entry " + index_string(idx) +
                                                     " is not antisymmetric in its g0 slots");
    const std::size_t n0 = l3.dim(0), n1 = l3.dim(3);
    std::vector<WeilElement> ai(n0, WeilElement(n0, n1)), gi(n1, WeilElement(n0, n1));
    for (const auto &[idx, v] : l3.entries())
        if (idx[0] < idx[1] && idx[1] < idx[2]) {
            WeilMonomial m;
            m.ext = (std::uint32_t{1} << idx[0]) | (std::uint32_t{1} << idx[1]) | (std::uint32_t{1} << idx[2]);
            gi[idx[3]].add_term(m, -v);
        }
    return GradedDerivation(n0, n1, 1, Bidegree{2, -1}, std::move(ai), std::move(gi));
}

namespace detail {

inline Witness generator_witness(const Generator &g, const WeilElement &value) {
    return Witness{{g.is_gamma ? 1u : 0u, g.index}, value.str(), "0",
                   std::string("generator ") + g.name() + " (first index: 0 = alpha, 1 = gamma)"};
}

/// One check over the alpha generators and one over the gamma generators.
inline void generator_checks(VerificationReport &rep, const std::string &id, std::size_t n0, std::size_t n1,
                             const std::function<WeilElement(const Generator &)> &value) {
    for (bool gamma : {false, true}) {
        const std::size_t n = gamma ? n1 : n0;
        const std::string cid = id + (gamma ? ".gamma" : ".alpha");
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Generator g{gamma, i};
            auto v = value(g);
            if (!v.is_zero()) {
                rep.add_fail(cid, generator_witness(g, v));
                ok = false;
            }
        }
        if (ok)
            rep.add_pass(cid);
    }
}

} // namespace detail

/// d(d(x)) = 0 on every generator, reported separately on alphas and gammas.
inline VerificationReport check_square_zero(const GradedDerivation &d) {
    if (!d.is_odd())
        throw Error(ErrorKind::unsupported, "square-zero check needs an odd derivation");
    VerificationReport rep;
    detail::generator_checks(rep, "square_zero", d.n0(), d.n1(),
                             [&](const Generator &g) { return apply_derivation(d, d.image(g)); });
    return rep;
}

/// Weil-side reading of a crossed-module candidate: delta_h^2 on alphas
/// (Jacobi), on gammas (representation), delta_v^2, and the anticommutator
/// [delta_h, delta_v] on alphas (^1 (x) Sym^1 component, condition A) and on
/// gammas (Sym^2 component, condition B).
inline VerificationReport verify_cm_weil(const CrossedModuleData &cm) {
    auto dh = build_delta_h(cm.base().structure(), cm.action());
    auto dv = build_delta_v(cm.tvs());
    VerificationReport rep;
    rep.merge(check_square_zero(dh), "delta_h");
    rep.merge(check_square_zero(dv), "delta_v");
    auto comm = graded_commutator(dh, dv);
    detail::generator_checks(rep, "commutator", cm.n0(), cm.n1(), [&](const Generator &g) { return comm.image(g); });
    return rep;
}

/// delta = delta_v + delta_h + delta_J; delta^2 = 0 on generators, with each
/// bidegree component of delta^2 reported on its own.
inline VerificationReport verify_weak_lie2(const WeakLie2Data &w) {
    auto dv = build_delta_v(TwoVectorSpace(w.partial()));
    auto dh = build_delta_h(w.bracket0(), w.action());
    auto dj = build_delta_j(w.jacobiator());
    auto delta = dv + dh + dj;
    const std::vector<Bidegree> components = {{0, 2}, {1, 1}, {2, 0}, {3, -1}, {4, -2}};
    std::map<Bidegree, std::optional<Witness>> failures;
    for (auto c : components)
        failures[c] = std::nullopt;

    const std::size_t n0 = w.dim0(), n1 = w.dim1();
    for (std::size_t k = 0; k < n0 + n1; ++k) {
        Generator g = k < n0 ? Generator{false, k} : Generator{true, k - n0};
        auto sq = apply_derivation(delta, delta.image(g));
        std::map<Bidegree, WeilElement> split;
        for (const auto &[m, c] : sq.terms()) {
            auto bd = m.bidegree();
            Bidegree op{bd.first - g.bidegree().first, bd.second - g.bidegree().second};
            split.try_emplace(op, n0, n1).first->second.add_term(m, c);
        }
        for (const auto &[op, part] : split)
            if (!failures[op])
                failures[op] = detail::generator_witness(g, part);
    }
    VerificationReport rep;
    for (const auto &[op, wit] : failures) {
        std::string id = "delta_squared(" + std::to_string(op.first) + "," + std::to_string(op.second) + ")";
        if (wit)
            rep.add_fail(id, *wit);
        else
            rep.add_pass(id);
    }
    return rep;
}

} // namespace l2b
