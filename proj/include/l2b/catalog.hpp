#pragma once

#include "l2b/document.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace l2b {

namespace instances {

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h; basis order (e, f, h).
inline LieAlgebra sl2() {
    SparseTensor c({3, 3, 3});
    set_antisymmetric(c, 2, 0, 0, 2);
    set_antisymmetric(c, 2, 1, 1, -2);
    set_antisymmetric(c, 0, 1, 2, 1);
    return LieAlgebra({"e", "f", "h"}, c);
}

/// [e1,e2] = e2
inline LieAlgebra axb() {
    SparseTensor c({2, 2, 2});
    set_antisymmetric(c, 0, 1, 1, 1);
    return LieAlgebra({"e1", "e2"}, c);
}

/// [x,y] = z
inline LieAlgebra heisenberg(std::vector<std::string> labels = {"x", "y", "z"}) {
    SparseTensor c({3, 3, 3});
    set_antisymmetric(c, 0, 1, 2, 1);
    return LieAlgebra(std::move(labels), c);
}

inline LieCobracket cobracket(std::size_t n, const std::vector<std::pair<Index, Rational>> &entries) {
    SparseTensor d({n, n, n});
    for (const auto &[idx, v] : entries) {
        d.set(idx, v);
        d.set({idx[0], idx[2], idx[1]}, -v);
    }
    return LieCobracket(d);
}

/// delta e = e^h, delta f = f^h
inline LieCobracket sl2_standard_cobracket() { return cobracket(3, {{{0, 0, 2}, 1}, {{1, 1, 2}, 1}}); }

/// delta h = e^f; not a cocycle
inline LieCobracket sl2_bad_cobracket() { return cobracket(3, {{{2, 0, 1}, 1}}); }

/// delta e2 = e1^e2
inline LieCobracket axb_cobracket() { return cobracket(2, {{{1, 0, 1}, 1}}); }

inline CrossedModuleData abelian_cm(std::size_t n0, std::size_t n1) {
    return CrossedModuleData(LieAlgebra::abelian(n0, "e"), TwoVectorSpace(Matrix(n0, n1)),
                             SparseTensor({n0, n1, n1}));
}

/// [g -id-> g] with the adjoint action.
inline CrossedModuleData adjoint(const LieAlgebra &g, std::vector<std::string> core_labels = {}) {
    if (core_labels.empty())
        for (const auto &l : g.labels())
            core_labels.push_back(l + "'");
    return CrossedModuleData(g, TwoVectorSpace(Matrix::identity(g.dim())), g.structure(), std::move(core_labels));
}

/// ax+b acting on span(f) by e1 |> f = f, partial = 0.
inline CrossedModuleData affine() {
    SparseTensor a({2, 1, 1});
    a.set({0, 0, 0}, 1);
    return CrossedModuleData(axb(), TwoVectorSpace(Matrix(2, 1)), a, {"f"});
}

/// Inclusion of the ideal span(e2) into ax+b.
inline CrossedModuleData axb_ideal() {
    SparseTensor a({2, 1, 1});
    a.set({0, 0, 0}, 1);
    Matrix p(2, 1);
    p(1, 0) = 1;
    return CrossedModuleData(axb(), TwoVectorSpace(p), a, {"f"});
}

/// heis -> heis/center with the action lifted through the obvious section.
inline CrossedModuleData heisenberg_central() {
    Matrix p(2, 3);
    p(0, 0) = 1;
    p(1, 1) = 1;
    SparseTensor a({2, 3, 3});
    a.set({0, 1, 2}, 1);
    a.set({1, 0, 2}, -1);
    return CrossedModuleData(LieAlgebra::abelian(2, "x"), TwoVectorSpace(p), a, {"x'", "y'", "z'"});
}

/// g0 = span(e), g1 = span(f), partial = 0, e |> f = lambda f, f* |> e* = mu e*.
inline Lie2BialgebraData scaling(const Rational &lambda, const Rational &mu) {
    SparseTensor a({1, 1, 1}), m({1, 1, 1});
    a.set({0, 0, 0}, lambda);
    m.set({0, 0, 0}, mu);
    CrossedModuleData cm1(LieAlgebra({"e"}, SparseTensor({1, 1, 1})), TwoVectorSpace(Matrix(1, 1)), a, {"f"});
    CrossedModuleData cm2(LieAlgebra({"f*"}, SparseTensor({1, 1, 1})), TwoVectorSpace(Matrix(1, 1)), m, {"e*"});
    return Lie2BialgebraData(std::move(cm1), std::move(cm2));
}

inline Lie2BialgebraData abelian_dual(const CrossedModuleData &cm1) { return Lie2BialgebraData(cm1, zero_dual(cm1)); }

/// Adjoint crossed modules of g and of the dual Lie algebra of delta.
inline Lie2BialgebraData bialgebra_double(const LieAlgebra &g, const LieCobracket &delta) {
    auto cm1 = adjoint(g);
    LieAlgebra dual = cobracket_to_dual_lie(delta, dual_labels(cm1.core_labels()));
    return Lie2BialgebraData(cm1, CrossedModuleData(dual, TwoVectorSpace(Matrix::identity(g.dim())),
                                                    dual.structure(), dual_labels(g.labels())));
}

/// adjoint(sl2) paired with adjoint(heisenberg) on the dual; each side is a
/// crossed module but the pair is not compatible.
inline Lie2BialgebraData sl2_heisenberg_double() {
    auto cm1 = adjoint(sl2());
    auto h = heisenberg(dual_labels(cm1.core_labels()));
    return Lie2BialgebraData(cm1, CrossedModuleData(h, TwoVectorSpace(Matrix::identity(3)), h.structure(),
                                                    dual_labels(cm1.base().labels())));
}

/// g0 = sl2 acting on g1 = sl2* by the coadjoint action, partial = 0; dual
/// side g1* = sl2 with zero action on g0*.
inline Lie2BialgebraData semidirect_mp(const LieAlgebra &dual_bracket = sl2()) {
    auto g = sl2();
    SparseTensor a({3, 3, 3});
    for (const auto &[idx, v] : g.structure().entries())
        a.set({idx[0], idx[2], idx[1]}, -v);
    CrossedModuleData cm1(g, TwoVectorSpace(Matrix(3, 3)), a, {"e*", "f*", "h*"});
    CrossedModuleData cm2(LieAlgebra(dual_labels(cm1.core_labels()), dual_bracket.structure()), TwoVectorSpace(Matrix(3, 3)),
                          SparseTensor({3, 3, 3}), {"e*", "f*", "h*"});
    return Lie2BialgebraData(std::move(cm1), std::move(cm2));
}

inline Lie2BialgebraData semidirect_mp_mismatched() { return semidirect_mp(heisenberg()); }

inline SparseTensor alternating_l3(std::size_t n0, std::size_t n1, std::size_t x, std::size_t y, std::size_t z,
                                   std::size_t b, const Rational &v) {
    SparseTensor t({n0, n0, n0, n1});
    const std::size_t ids[3] = {x, y, z};
    std::vector<std::size_t> p = {0, 1, 2};
    do {
        t.set({ids[p[0]], ids[p[1]], ids[p[2]], b}, Rational(detail::permutation_parity_sign(p)) * v);
    } while (std::next_permutation(p.begin(), p.end()));
    return t;
}

/// g0 abelian of dim 3, g1 = span(f), partial = 0, l3(e0,e1,e2) = f.
inline WeakLie2Data weak_l3() {
    return WeakLie2Data(Matrix(3, 1), SparseTensor({3, 3, 3}), SparseTensor({3, 1, 1}),
                        alternating_l3(3, 1, 0, 1, 2, 0, 1), {"e0", "e1", "e2"}, {"f"});
}

} // namespace instances

struct CatalogEntry {
    std::string name;
    std::string description;
    bool valid = true;
    Document doc;
};

inline std::vector<CatalogEntry> catalog() {
    using namespace instances;
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, std::string descr, bool valid, Document doc) {
        doc.id = name;
        out.push_back({std::move(name), std::move(descr), valid, std::move(doc)});
    };

    add("zero", "zero-dimensional Lie algebra", true, document_of(LieAlgebra::abelian(0)));
    add("abelian3", "abelian Lie algebra of dimension 3", true, document_of(LieAlgebra::abelian(3)));
    add("sl2", "sl2 with [h,e]=2e, [h,f]=-2f, [e,f]=h", true, document_of(sl2()));
    {
        auto c = sl2().structure();
        set_antisymmetric(c, 2, 0, 0, 3);
        add("sl2_perturbed", "sl2 with [h,e]=3e; Jacobi fails", false, document_of(LieAlgebra({"e", "f", "h"}, c)));
    }
    add("axb_bialgebra", "ax+b with delta e2 = e1^e2", true, document_of(axb(), axb_cobracket()));
    add("sl2_standard_bialgebra", "sl2 with delta e = e^h, delta f = f^h", true,
        document_of(sl2(), sl2_standard_cobracket()));
    add("sl2_bad_cobracket", "sl2 with delta h = e^f; cocycle fails", false, document_of(sl2(), sl2_bad_cobracket()));

    add("abelian_cm", "abelian crossed module, dims (2,1)", true, document_of(abelian_cm(2, 1)));
    add("adjoint_sl2", "[sl2 -id-> sl2] with adjoint action and core bracket sl2", true,
        document_of(adjoint(sl2()), "", LieAlgebra(adjoint(sl2()).core_labels(), sl2().structure())));
    add("adjoint_sl2_abelian_core", "adjoint sl2 crossed module with an abelian core bracket", false,
        document_of(adjoint(sl2()), "", LieAlgebra::abelian(3, "e")));
    {
        auto cm = adjoint(sl2());
        auto a = cm.action();
        a.set({0, 0, 2}, 1);
        add("adjoint_sl2_perturbed", "adjoint sl2 crossed module with e |> e' = h'", false,
            document_of(CrossedModuleData(cm.base(), cm.tvs(), a, cm.core_labels())));
    }
    add("affine", "ax+b acting on a line, partial = 0", true, document_of(affine()));
    add("axb_ideal", "inclusion of the ideal span(e2) in ax+b", true, document_of(axb_ideal()));
    add("heisenberg_central", "heisenberg over its abelian quotient", true, document_of(heisenberg_central()));

    add("scaling_pair", "scaling Lie 2-bialgebra, lambda = mu = 1", true, document_of(scaling(1, 1)));
    {
        auto s = scaling(1, 1);
        Matrix p(1, 1);
        p(0, 0) = 1;
        Lie2BialgebraData bad(
            CrossedModuleData(s.cm1().base(), TwoVectorSpace(p), s.cm1().action(), s.cm1().core_labels()),
            CrossedModuleData(s.cm2().base(), TwoVectorSpace(p), s.cm2().action(), s.cm2().core_labels()));
        add("scaling_pair_bad_partial", "scaling pair with partial = 1; condition A fails", false, document_of(bad));
    }
    add("abelian_dual_adjoint_sl2", "adjoint sl2 paired with the zero dual crossed module", true,
        document_of(abelian_dual(adjoint(sl2()))));
    add("abelian_dual_affine", "affine crossed module paired with the zero dual", true,
        document_of(abelian_dual(affine())));
    add("sl2_double", "adjoint double of the standard sl2 bialgebra", true,
        document_of(bialgebra_double(sl2(), sl2_standard_cobracket())));
    add("axb_double", "adjoint double of the ax+b bialgebra", true,
        document_of(bialgebra_double(axb(), axb_cobracket())));
    add("sl2_heisenberg_double", "adjoint sl2 paired with adjoint heisenberg; incompatible", false,
        document_of(sl2_heisenberg_double()));
    add("semidirect_mp", "sl2 on sl2* coadjointly, dual bracket sl2", true, document_of(semidirect_mp()));
    add("semidirect_mp_mirror", "semidirect_mp with the two crossed modules exchanged", true,
        document_of(semidirect_mp().swapped()));
    add("semidirect_mp_mismatched", "semidirect_mp with a heisenberg dual bracket", false,
        document_of(semidirect_mp_mismatched()));

    add("weak_l3", "abelian g0 of dim 3, l3(e0,e1,e2) = f", true, document_of(weak_l3()));
    {
        auto w = weak_l3();
        Matrix p(3, 1);
        p(0, 0) = 1;
        add("weak_l3_perturbed", "weak_l3 with partial(f) = e0", false,
            document_of(WeakLie2Data(p, w.bracket0(), w.action(), w.jacobiator(), w.labels0(), w.labels1())));
    }

    add("dvb_231", "split double vector bundle with dims (2,3,1)", true,
        document_of(SplitDvb{{"A", 2, false}, {"B", 3, false}, {"C", 1, false}}));

    {
        auto mp = matched_pair_of(bialgebra_double(sl2(), sl2_standard_cobracket()));
        add("sl2_matched_pair", "(sl2, sl2*) with the dual actions of the standard double", true, document_of(mp));
        auto act = mp.act_h_on_k();
        act.add({0, 0, 0}, 1);
        add("sl2_matched_pair_perturbed", "sl2_matched_pair with one action entry shifted", false,
            document_of(MatchedPairData(mp.h(), mp.k(), act, mp.act_k_on_h())));
    }
    return out;
}

inline CatalogEntry catalog_find(const std::string &name) {
    for (auto &e : catalog())
        if (e.name == name)
            return e;
    throw Error(ErrorKind::unknown_name, "no catalog instance named '" + name + "'");
}

} // namespace l2b
