#pragma once

#include "l2b/bicross.hpp"

namespace l2b {

// New basis vectors are the columns of Q: e'_j = sum_i Q(i,j) e_i.

/// T'(i,j,k) = sum Qa(p,i) Qb(q,j) T(p,q,r) Qc^{-1}(k,r)
inline SparseTensor transform_rank3(const SparseTensor &t, const Matrix &qa, const Matrix &qb, const Matrix &qc_inv) {
    if (t.rank() != 3 || qa.rows() != t.dim(0) || qb.rows() != t.dim(1) || qc_inv.cols() != t.dim(2))
        throw Error(ErrorKind::dimension_mismatch, "basis change matrices do not fit the tensor");
    SparseTensor out({qa.cols(), qb.cols(), qc_inv.rows()});
    for (const auto &[idx, v] : t.entries())
        for (std::size_t i = 0; i < qa.cols(); ++i) {
            if (qa(idx[0], i).is_zero())
                continue;
            for (std::size_t j = 0; j < qb.cols(); ++j) {
                if (qb(idx[1], j).is_zero())
                    continue;
                Rational w = v * qa(idx[0], i) * qb(idx[1], j);
                for (std::size_t k = 0; k < qc_inv.rows(); ++k)
                    out.add({i, j, k}, w * qc_inv(k, idx[2]));
            }
        }
    return out;
}

inline LieAlgebra change_basis(const LieAlgebra &g, const Matrix &q) {
    return LieAlgebra(g.labels(), transform_rank3(g.structure(), q, q, q.inverse()));
}

inline CrossedModuleData change_basis(const CrossedModuleData &cm, const Matrix &q0, const Matrix &q1) {
    auto base = change_basis(cm.base(), q0);
    auto action = transform_rank3(cm.action(), q0, q1, q1.inverse());
    return CrossedModuleData(std::move(base), TwoVectorSpace(q0.inverse() * cm.tvs().partial() * q1),
                             std::move(action), cm.core_labels());
}

/// Dual spaces move by the inverse transpose.
inline Lie2BialgebraData change_basis(const Lie2BialgebraData &d, const Matrix &q0, const Matrix &q1) {
    return Lie2BialgebraData(change_basis(d.cm1(), q0, q1),
                             change_basis(d.cm2(), q1.inverse().transpose(), q0.inverse().transpose()));
}

} // namespace l2b
