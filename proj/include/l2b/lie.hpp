#pragma once

#include "l2b/matrix.hpp"
#include "l2b/report.hpp"
#include "l2b/sparse_tensor.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace l2b {

inline std::vector<std::string> default_labels(const std::string &stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(stem + std::to_string(i));
    return out;
}

/// Toggles a trailing '*' so that dual-of-dual labels return to the original.
inline std::string dual_label(const std::string &s) {
    if (!s.empty() && s.back() == '*')
        return s.substr(0, s.size() - 1);
    return s + "*";
}

inline std::vector<std::string> dual_labels(const std::vector<std::string> &labels) {
    std::vector<std::string> out;
    for (const auto &l : labels)
        out.push_back(dual_label(l));
    return out;
}

/// Sets c^k_{ij} = v and c^k_{ji} = -v.
inline void set_antisymmetric(SparseTensor &c, std::size_t i, std::size_t j, std::size_t k, const Rational &v) {
    c.set({i, j, k}, v);
    c.set({j, i, k}, -v);
}

/// Antisymmetric bracket [e_i, e_j] = sum_k c^k_{ij} e_k, stored as c(i,j,k).
/// Jacobi is deliberately not enforced here; see verify_lie.
class LieAlgebra {
  public:
    LieAlgebra() : LieAlgebra(std::vector<std::string>{}, SparseTensor({0, 0, 0})) {}

    LieAlgebra(std::vector<std::string> labels, SparseTensor bracket)
        : labels_(std::move(labels)), bracket_(std::move(bracket)) {
        const std::size_t n = labels_.size();
        if (bracket_.dims() != std::vector<std::size_t>{n, n, n})
            throw Error(ErrorKind::dimension_mismatch,
                        "bracket tensor must have shape (" + std::to_string(n) + "," + std::to_string(n) + "," +
                            std::to_string(n) + ")");
        for (const auto &[idx, v] : bracket_.entries()) {
            if (bracket_.get({idx[1], idx[0], idx[2]}) != -v)
                throw Error(ErrorKind::antisymmetry,
                            "bracket entry " + index_string(idx) + " = " + v.str() + " has no antisymmetric partner");
        }
        dense_ = DenseTensor(bracket_);
    }

    static LieAlgebra abelian(std::size_t n, const std::string &stem = "e") {
        return LieAlgebra(default_labels(stem, n), SparseTensor({n, n, n}));
    }

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }
    const SparseTensor &structure() const { return bracket_; }
    const Rational &c(std::size_t i, std::size_t j, std::size_t k) const { return dense_(i, j, k); }

    std::vector<Rational> bracket(const std::vector<Rational> &x, const std::vector<Rational> &y) const {
        std::vector<Rational> out(dim());
        for (const auto &[idx, v] : bracket_.entries())
            if (!x[idx[0]].is_zero() && !y[idx[1]].is_zero())
                out[idx[2]] += v * x[idx[0]] * y[idx[1]];
        return out;
    }

    friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) { return a.bracket_ == b.bracket_; }

  private:
    std::vector<std::string> labels_;
    SparseTensor bracket_;
    DenseTensor dense_;
};

/// rho(e_i) as an m x m matrix: e_i . f_j = sum_k rho(e_i)(k,j) f_k.
class Representation {
  public:
    Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<Matrix> matrices)
        : algebra_(std::move(algebra)), module_dim_(module_dim), matrices_(std::move(matrices)) {
        if (matrices_.size() != algebra_.dim())
            throw Error(ErrorKind::dimension_mismatch, "representation needs one matrix per basis element");
        for (const auto &m : matrices_)
            if (m.rows() != module_dim_ || m.cols() != module_dim_)
                throw Error(ErrorKind::dimension_mismatch, "representation matrix has wrong shape");
    }

    /// From an action tensor a(i,j,k): e_i . f_j = sum_k a(i,j,k) f_k.
    static Representation from_action(const LieAlgebra &g, const SparseTensor &action) {
        if (action.rank() != 3 || action.dim(0) != g.dim() || action.dim(1) != action.dim(2))
            throw Error(ErrorKind::dimension_mismatch, "action tensor shape does not match the algebra");
        const std::size_t m = action.dim(1);
        std::vector<Matrix> mats(g.dim(), Matrix(m, m));
        for (const auto &[idx, v] : action.entries())
            mats[idx[0]](idx[2], idx[1]) = v;
        return Representation(g, m, std::move(mats));
    }

    const LieAlgebra &algebra() const { return algebra_; }
    std::size_t module_dim() const { return module_dim_; }
    const std::vector<Matrix> &matrices() const { return matrices_; }
    const Matrix &rho(std::size_t i) const { return matrices_.at(i); }

    SparseTensor to_action() const {
        SparseTensor a({algebra_.dim(), module_dim_, module_dim_});
        for (std::size_t i = 0; i < matrices_.size(); ++i)
            for (std::size_t k = 0; k < module_dim_; ++k)
                for (std::size_t j = 0; j < module_dim_; ++j)
                    a.set({i, j, k}, matrices_[i](k, j));
        return a;
    }

  private:
    LieAlgebra algebra_;
    std::size_t module_dim_;
    std::vector<Matrix> matrices_;
};

/// delta(e_i) = sum_{j<k} d^{jk}_i e_j ^ e_k stored as d(i,j,k), antisymmetric in (j,k).
class LieCobracket {
  public:
    explicit LieCobracket(SparseTensor tensor) : tensor_(std::move(tensor)) {
        if (tensor_.rank() != 3 || tensor_.dim(0) != tensor_.dim(1) || tensor_.dim(1) != tensor_.dim(2))
            throw Error(ErrorKind::dimension_mismatch, "cobracket tensor must be n x n x n");
        for (const auto &[idx, v] : tensor_.entries())
            if (tensor_.get({idx[0], idx[2], idx[1]}) != -v)
                throw Error(ErrorKind::antisymmetry,
                            "cobracket entry " + index_string(idx) + " has no antisymmetric partner");
    }

    static LieCobracket zero(std::size_t n) { return LieCobracket(SparseTensor({n, n, n})); }

    std::size_t dim() const { return tensor_.dim(0); }
    const SparseTensor &tensor() const { return tensor_; }

  private:
    SparseTensor tensor_;
};

/// Jacobi on basis triples i<j<k; witness (i,j,k,l).
inline VerificationReport verify_lie(const LieAlgebra &g) {
    VerificationReport rep;
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s;
                    for (std::size_t m = 0; m < n; ++m) {
                        if (!g.c(i, j, m).is_zero())
                            s += g.c(i, j, m) * g.c(m, k, l);
                        if (!g.c(j, k, m).is_zero())
                            s += g.c(j, k, m) * g.c(m, i, l);
                        if (!g.c(k, i, m).is_zero())
                            s += g.c(k, i, m) * g.c(m, j, l);
                    }
                    if (!s.is_zero()) {
                        rep.add_fail("jacobi", Witness{{i, j, k, l}, s.str(), "0",
                                                       "[[e_i,e_j],e_k] + cyclic, component l"});
                        return rep;
                    }
                }
    rep.add_pass("jacobi");
    return rep;
}

/// The homomorphism condition alone, without the Jacobi prerequisite.
inline Check representation_check(const Representation &r, const std::string &id = "homomorphism") {
    const auto &g = r.algebra();
    const std::size_t n = g.dim(), m = r.module_dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs(m, m);
            for (std::size_t k = 0; k < n; ++k)
                if (!g.c(i, j, k).is_zero())
                    lhs += r.rho(k) * g.c(i, j, k);
            Matrix rhs = r.rho(i) * r.rho(j) - r.rho(j) * r.rho(i);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (lhs(a, b) != rhs(a, b))
                        return Check{id, false,
                                     Witness{{i, j, a, b}, lhs(a, b).str(), rhs(a, b).str(),
                                             "rho([e_i,e_j]) vs [rho(e_i),rho(e_j)], matrix entry (a,b)"}};
        }
    return Check{id, true, std::nullopt};
}

inline VerificationReport verify_rep(const Representation &r) {
    VerificationReport rep;
    auto lie = verify_lie(r.algebra());
    if (lie.passed())
        rep.add_pass("prerequisite.lie");
    else
        rep.add_fail("prerequisite.lie", lie.first_failure()->witness.value_or(Witness{}));
    rep.add(representation_check(r));
    return rep;
}

inline Representation adjoint_rep(const LieAlgebra &g) {
    const std::size_t n = g.dim();
    std::vector<Matrix> mats(n, Matrix(n, n));
    for (const auto &[idx, v] : g.structure().entries())
        mats[idx[0]](idx[2], idx[1]) = v;
    return Representation(g, n, std::move(mats));
}

/// Lie algebra on the dual space with c*^i_{jk} = d^{jk}_i.
inline LieAlgebra cobracket_to_dual_lie(const LieCobracket &d, std::vector<std::string> labels = {}) {
    if (labels.empty())
        labels = default_labels("e", d.dim());
    return LieAlgebra(std::move(labels), d.tensor().permute_axes({1, 2, 0}));
}

/// Inverse of cobracket_to_dual_lie: the cobracket on g* whose dual is g.
inline LieCobracket dual_lie_to_cobracket(const LieAlgebra &g) {
    return LieCobracket(g.structure().permute_axes({2, 0, 1}));
}

/// delta[e_i,e_j] = ad^(2)_{e_i} delta e_j - ad^(2)_{e_j} delta e_i for i<j.
inline VerificationReport verify_cocycle(const LieAlgebra &g, const LieCobracket &d) {
    if (g.dim() != d.dim())
        throw Error(ErrorKind::dimension_mismatch, "algebra has dimension " + std::to_string(g.dim()) +
                                                       " but cobracket has dimension " + std::to_string(d.dim()));
    VerificationReport rep;
    rep.merge(verify_lie(g), "lie");
    rep.merge(verify_lie(cobracket_to_dual_lie(d)), "dual_lie");

    const std::size_t n = g.dim();
    DenseTensor dd(d.tensor());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) {
                    Rational lhs, rhs;
                    for (std::size_t m = 0; m < n; ++m)
                        if (!g.c(i, j, m).is_zero())
                            lhs += g.c(i, j, m) * dd(m, p, q);
                    for (std::size_t r = 0; r < n; ++r) {
                        rhs += g.c(i, r, p) * dd(j, r, q) + g.c(i, r, q) * dd(j, p, r);
                        rhs -= g.c(j, r, p) * dd(i, r, q) + g.c(j, r, q) * dd(i, p, r);
                    }
                    if (lhs != rhs) {
                        rep.add_fail("cocycle", Witness{{i, j, p, q}, lhs.str(), rhs.str(),
                                                        "e_p^e_q coefficient of delta[e_i,e_j] vs "
                                                        "ad_i delta e_j - ad_j delta e_i"});
                        return rep;
                    }
                }
    rep.add_pass("cocycle");
    return rep;
}

/// Bracket on g + V: [(x,u),(y,w)] = ([x,y], x.w - y.u + [u,w]_V).
inline LieAlgebra semidirect(const LieAlgebra &g, const Representation &r,
                             const std::optional<LieAlgebra> &core_bracket = std::nullopt,
                             std::vector<std::string> module_labels = {}) {
    const std::size_t n = g.dim(), m = r.module_dim();
    if (r.algebra().dim() != n)
        throw Error(ErrorKind::dimension_mismatch, "representation is of a different algebra");
    if (core_bracket && core_bracket->dim() != m)
        throw Error(ErrorKind::dimension_mismatch, "core bracket has dimension " +
                                                       std::to_string(core_bracket->dim()) + ", module has " +
                                                       std::to_string(m));
    if (module_labels.empty())
        module_labels = core_bracket ? core_bracket->labels() : default_labels("f", m);
    std::vector<std::string> labels = g.labels();
    labels.insert(labels.end(), module_labels.begin(), module_labels.end());

    SparseTensor t({n + m, n + m, n + m});
    for (const auto &[idx, v] : g.structure().entries())
        t.set(idx, v);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                const auto &v = r.rho(i)(b, a);
                if (!v.is_zero())
                    set_antisymmetric(t, i, n + a, n + b, v);
            }
    if (core_bracket)
        for (const auto &[idx, v] : core_bracket->structure().entries())
            t.set({n + idx[0], n + idx[1], n + idx[2]}, v);
    return LieAlgebra(std::move(labels), std::move(t));
}

} // namespace l2b
