#pragma once

#include "l2b/gerstenhaber.hpp"
#include "l2b/two_term.hpp"
#include "l2b/weil.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace l2b {

/// cm1 on [g1 -> g0], cm2 on [g0* -> g1*]. cm2's base is g1* and its core g0*.
class Lie2BialgebraData {
  public:
    Lie2BialgebraData(CrossedModuleData cm1, CrossedModuleData cm2) : cm1_(std::move(cm1)), cm2_(std::move(cm2)) {
        if (cm2_.n0() != cm1_.n1() || cm2_.n1() != cm1_.n0())
            throw Error(ErrorKind::dimension_mismatch,
                        "dual crossed module has dims (" + std::to_string(cm2_.n0()) + "," + std::to_string(cm2_.n1()) +
                            "), expected (" + std::to_string(cm1_.n1()) + "," + std::to_string(cm1_.n0()) + ")");
        if (!(cm2_.tvs().partial() == cm1_.tvs().partial().transpose()))
            throw Error(ErrorKind::dimension_mismatch, "dual structure map is not the transpose of partial");
    }

    const CrossedModuleData &cm1() const { return cm1_; }
    const CrossedModuleData &cm2() const { return cm2_; }
    std::size_t n0() const { return cm1_.n0(); }
    std::size_t n1() const { return cm1_.n1(); }

    Lie2BialgebraData swapped() const { return Lie2BialgebraData(cm2_, cm1_); }

  private:
    CrossedModuleData cm1_, cm2_;
};

/// cm2 with zero bracket and zero action on the dual 2-vector space of cm1.
inline CrossedModuleData zero_dual(const CrossedModuleData &cm1) {
    const std::size_t n0 = cm1.n0(), n1 = cm1.n1();
    return CrossedModuleData(LieAlgebra(dual_labels(cm1.core_labels()), SparseTensor({n1, n1, n1})),
                             dual_two_vs(cm1.tvs()), SparseTensor({n1, n0, n0}), dual_labels(cm1.base().labels()));
}

/// (x |> xi)(c) = -xi(x |> c): T(i,c,a) = -A(i,a,c).
inline SparseTensor dual_action_side(const CrossedModuleData &cm1) {
    SparseTensor t({cm1.n0(), cm1.n1(), cm1.n1()});
    for (const auto &[idx, v] : cm1.action().entries())
        t.set({idx[0], idx[2], idx[1]}, -v);
    return t;
}

/// <alpha, xi |> x> = -<xi |> alpha, x>: S(a,j,k) = -M(a,k,j).
inline SparseTensor dual_action_core(const CrossedModuleData &cm2) {
    SparseTensor t({cm2.n0(), cm2.n1(), cm2.n1()});
    for (const auto &[idx, v] : cm2.action().entries())
        t.set({idx[0], idx[2], idx[1]}, -v);
    return t;
}

class MatchedPairData {
  public:
    MatchedPairData(LieAlgebra h, LieAlgebra k, SparseTensor act_h_on_k, SparseTensor act_k_on_h)
        : h_(std::move(h)), k_(std::move(k)), hk_(std::move(act_h_on_k)), kh_(std::move(act_k_on_h)) {
        const std::size_t n = h_.dim(), m = k_.dim();
        if (hk_.dims() != std::vector<std::size_t>{n, m, m})
            throw Error(ErrorKind::dimension_mismatch, "act_h_on_k must have shape (dim h, dim k, dim k)");
        if (kh_.dims() != std::vector<std::size_t>{m, n, n})
            throw Error(ErrorKind::dimension_mismatch, "act_k_on_h must have shape (dim k, dim h, dim h)");
    }

    const LieAlgebra &h() const { return h_; }
    const LieAlgebra &k() const { return k_; }
    const SparseTensor &act_h_on_k() const { return hk_; }
    const SparseTensor &act_k_on_h() const { return kh_; }

  private:
    LieAlgebra h_, k_;
    SparseTensor hk_, kh_;
};

/// [(x,xi),(y,eta)] = ([x,y] + xi|>y - eta|>x, [xi,eta] + x|>eta - y|>xi) on h + k.
inline LieAlgebra bicrossed_sum(const MatchedPairData &mp) {
    const std::size_t n = mp.h().dim(), m = mp.k().dim();
    SparseTensor t({n + m, n + m, n + m});
    for (const auto &[idx, v] : mp.h().structure().entries())
        t.set(idx, v);
    for (const auto &[idx, v] : mp.k().structure().entries())
        t.set({n + idx[0], n + idx[1], n + idx[2]}, v);
    for (const auto &[idx, v] : mp.act_h_on_k().entries()) {
        t.add({idx[0], n + idx[1], n + idx[2]}, v);
        t.add({n + idx[1], idx[0], n + idx[2]}, -v);
    }
    for (const auto &[idx, v] : mp.act_k_on_h().entries()) {
        t.add({n + idx[0], idx[1], idx[2]}, v);
        t.add({idx[1], n + idx[0], idx[2]}, -v);
    }
    auto labels = mp.h().labels();
    labels.insert(labels.end(), mp.k().labels().begin(), mp.k().labels().end());
    return LieAlgebra(std::move(labels), std::move(t));
}

inline VerificationReport verify_matched_pair(const MatchedPairData &mp) {
    VerificationReport rep;
    rep.merge(verify_lie(mp.h()), "h");
    rep.merge(verify_lie(mp.k()), "k");
    rep.add(representation_check(Representation::from_action(mp.h(), mp.act_h_on_k()), "act_h_on_k"));
    rep.add(representation_check(Representation::from_action(mp.k(), mp.act_k_on_h()), "act_k_on_h"));
    rep.merge(verify_lie(bicrossed_sum(mp)), "bicrossed");
    return rep;
}

/// Cobracket on Gamma = g0 + g1 dual to the bracket of Gamma' = g1* + g0*,
/// transported through <(x,c),(xi,alpha)> = alpha(x) - xi(c).
inline LieCobracket transported_cobracket(const LieAlgebra &gamma_dual, std::size_t n0, std::size_t n1) {
    const std::size_t n = n0 + n1;
    if (gamma_dual.dim() != n)
        throw Error(ErrorKind::dimension_mismatch, "dual total algebra has dimension " +
                                                       std::to_string(gamma_dual.dim()) + ", expected " +
                                                       std::to_string(n));
    SparseTensor d({n, n, n});
    for (const auto &[idx, v] : gamma_dual.structure().entries()) {
        // idx = (p', q', i') in Gamma' order; d(i,p,q) = c'(p',q',i') with one sign per core slot
        std::size_t p = idx[0] < n1 ? n0 + idx[0] : idx[0] - n1;
        std::size_t q = idx[1] < n1 ? n0 + idx[1] : idx[1] - n1;
        std::size_t i = idx[2] < n1 ? n0 + idx[2] : idx[2] - n1;
        int s = (p >= n0 ? -1 : 1) * (q >= n0 ? -1 : 1) * (i >= n0 ? -1 : 1);
        d.set({i, p, q}, s > 0 ? v : -v);
    }
    return LieCobracket(std::move(d));
}

inline VerificationReport verify_l2b_def(const Lie2BialgebraData &d) {
    VerificationReport rep;
    rep.merge(verify_cm(d.cm1()), "cm1");
    rep.merge(verify_cm(d.cm2()), "cm2");
    rep.set_metadata("pairing_core_sign", "-1");
    const bool b1 = detail::check_condition_b(d.cm1()).pass, b2 = detail::check_condition_b(d.cm2()).pass;
    if (!b1 || !b2) {
        rep.add_fail("bialgebra.cocycle",
                     Witness{{}, "", "", std::string("not evaluated: total Lie algebra undefined because condition B "
                                                     "fails for ") +
                                             (b1 ? "cm2" : "cm1")});
        return rep;
    }
    auto gamma = gamma_total(d.cm1());
    auto gamma_dual = gamma_total(d.cm2());
    rep.merge(verify_cocycle(gamma, transported_cobracket(gamma_dual, d.n0(), d.n1())), "bialgebra");
    return rep;
}

inline MatchedPairData matched_pair_of(const Lie2BialgebraData &d) {
    return MatchedPairData(d.cm1().base(), d.cm2().base(), dual_action_side(d.cm1()), dual_action_core(d.cm2()));
}

inline VerificationReport verify_l2b_matched(const Lie2BialgebraData &d) {
    VerificationReport rep;
    rep.merge(verify_cm(d.cm1()), "cm1");
    rep.merge(verify_cm(d.cm2()), "cm2");
    rep.merge(verify_matched_pair(matched_pair_of(d)), "matched_pair");
    return rep;
}

/// Weil-side compatibility of cm1's differentials with an explicit bracket.
inline VerificationReport verify_weil_compatibility(const CrossedModuleData &cm1, const GerstenhaberStructure &g,
                                                    int degree_bound = default_degree_bound) {
    auto dh = build_delta_h(cm1.base().structure(), cm1.action());
    auto dv = build_delta_v(cm1.tvs());
    VerificationReport rep;
    rep.merge(check_square_zero(dh), "delta_h");
    rep.merge(check_square_zero(dv), "delta_v");
    auto comm = graded_commutator(dh, dv);
    detail::generator_checks(rep, "commutator", cm1.n0(), cm1.n1(),
                             [&](const Generator &gen) { return comm.image(gen); });
    rep.merge(check_gerst_axioms(g, degree_bound), "gerstenhaber");
    rep.merge(check_derivation_of_bracket(dh + dv, g, degree_bound), "derivation");
    rep.set_metadata("degree_bound", std::to_string(degree_bound));
    return rep;
}

inline VerificationReport verify_l2b_weil(const Lie2BialgebraData &d, int degree_bound = default_degree_bound) {
    if (d.n1() == 0)
        throw Error(ErrorKind::degenerate_core,
                    "g1 = 0: the Weil route does not apply; check the underlying Lie bialgebra with verify_cocycle");
    return verify_weil_compatibility(d.cm1(), build_gerstenhaber(d.cm2()), degree_bound);
}

/// Runs every applicable verifier. Disagreement is reported as a kernel
/// defect through a failing "agreement" check.
inline VerificationReport cross_check(const Lie2BialgebraData &d, int degree_bound = default_degree_bound) {
    VerificationReport rep;
    std::vector<std::pair<std::string, bool>> verdicts;
    auto run = [&](const std::string &name, const VerificationReport &r) {
        rep.merge(r, name);
        verdicts.emplace_back(name, r.passed());
        rep.set_metadata("verdict." + name, r.passed() ? "pass" : "fail");
    };
    run("def", verify_l2b_def(d));
    run("matched", verify_l2b_matched(d));
    if (d.n1() != 0)
        run("weil", verify_l2b_weil(d, degree_bound));
    else
        rep.set_metadata("verdict.weil", "skipped: g1 = 0");

    bool agree = true;
    for (const auto &[name, v] : verdicts)
        agree = agree && v == verdicts.front().second;
    rep.set_agreement(agree);
    if (!agree) {
        std::string lhs, rhs;
        for (const auto &[name, v] : verdicts)
            (v ? lhs : rhs) += (v ? (lhs.empty() ? "" : ",") : (rhs.empty() ? "" : ",")) + name;
        rep.add_fail("agreement", Witness{{}, "pass: " + lhs, "fail: " + rhs,
                                          "kernel defect: equivalent characterizations disagree"});
    }
    return rep;
}

} // namespace l2b
