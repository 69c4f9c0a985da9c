#pragma once

#include "l2b/basis.hpp"
#include "l2b/catalog.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace l2b {

/// Platform-independent draws: raw mt19937_64 output reduced by modulo.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
    bool coin() { return below(2) == 1; }

  private:
    std::mt19937_64 eng_;
};

/// Q = L U with unit lower L and upper U whose diagonal is in {1, -1, 2}.
inline Matrix random_invertible(std::size_t n, SeededRng &rng) {
    Matrix l = Matrix::identity(n), u(n, n);
    static const long diag[] = {1, -1, 2};
    for (std::size_t i = 0; i < n; ++i) {
        u(i, i) = diag[rng.below(3)];
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i)
                l(i, j) = rng.between(-1, 1);
            else if (j > i)
                u(i, j) = rng.between(-1, 1);
        }
    }
    return l * u;
}

namespace detail {

// antisymmetric slot groups per block; the partner entries move together
inline std::vector<std::vector<std::size_t>> antisymmetric_slots(const std::string &block) {
    if (block == "bracket" || block == "bracket0" || block == "dual_bracket" || block == "bracket_h" ||
        block == "bracket_k" || block == "core_bracket")
        return {{0, 1}};
    if (block == "cobracket")
        return {{1, 2}};
    if (block == "jacobiator")
        return {{0, 1, 2}};
    return {};
}

/// Adds delta to one entry of the block, keeping its antisymmetries.
/// Returns false when the drawn index lies on a forced-zero diagonal.
inline bool shift_entry(SparseTensor &t, const std::string &block, const Index &idx, const Rational &delta) {
    auto slots = antisymmetric_slots(block);
    if (slots.empty()) {
        t.add(idx, delta);
        return true;
    }
    const auto &s = slots.front();
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (idx[s[a]] == idx[s[b]])
                return false;
    std::vector<std::size_t> p(s.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        Index j = idx;
        for (std::size_t a = 0; a < s.size(); ++a)
            j[s[a]] = idx[s[p[a]]];
        t.add(j, Rational(permutation_parity_sign(p)) * delta);
    } while (std::next_permutation(p.begin(), p.end()));
    return true;
}

} // namespace detail

/// One seeded single-entry modification of a random block. Nullopt if the
/// draw hit an index that cannot carry a value.
inline std::optional<Document> perturb_once(const Document &doc, SeededRng &rng, std::string *what = nullptr) {
    std::vector<std::string> names;
    for (const auto &[name, t] : doc.blocks) {
        std::size_t total = 1;
        for (auto d : t.dims())
            total *= d;
        if (total > 0)
            names.push_back(name);
    }
    if (names.empty())
        return std::nullopt;
    const std::string &name = names[rng.below(names.size())];
    Document out = doc;
    SparseTensor &t = out.blocks[name];
    Index idx;
    for (auto d : t.dims())
        idx.push_back(rng.below(d));
    static const long deltas[] = {1, -1, 2, -2};
    Rational delta = deltas[rng.below(4)];
    if (!detail::shift_entry(t, name, idx, delta))
        return std::nullopt;
    if (what)
        *what = name + index_string(idx) + " += " + delta.str();
    return out;
}

inline constexpr int perturbation_retries = 64;

/// Re-rolls until `still_valid` reports false; throws retry_exhausted.
inline Document perturb(const Document &doc, std::uint64_t seed, const std::function<bool(const Document &)> &still_valid,
                        std::string *what = nullptr) {
    SeededRng rng(seed);
    for (int attempt = 0; attempt < perturbation_retries; ++attempt) {
        auto p = perturb_once(doc, rng, what);
        if (!p)
            continue;
        bool valid = true;
        try {
            valid = still_valid(*p);
        } catch (const Error &) {
            valid = false;
        }
        if (!valid)
            return *p;
    }
    throw Error(ErrorKind::retry_exhausted, "no invalidating single-entry perturbation found in " +
                                                std::to_string(perturbation_retries) + " attempts");
}

namespace detail {

struct FamilyCall {
    std::string name;
    std::vector<std::string> args;
};

inline FamilyCall parse_family(const std::string &s) {
    auto open = s.find('(');
    if (open == std::string::npos)
        return {s, {}};
    if (s.back() != ')')
        throw Error(ErrorKind::unknown_name, "malformed family '" + s + "'");
    FamilyCall call{s.substr(0, open), {}};
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    int depth = 0;
    std::string cur;
    for (char c : inner) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            call.args.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!inner.empty())
        call.args.push_back(cur);
    return call;
}

inline void expect_args(const FamilyCall &c, std::size_t n) {
    if (c.args.size() != n)
        throw Error(ErrorKind::unknown_name,
                    "family " + c.name + " takes " + std::to_string(n) + " argument(s), got " + std::to_string(c.args.size()));
}

inline std::size_t small_dim(const std::string &s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos != s.size() || v > 8)
        throw Error(ErrorKind::unknown_name, "'" + s + "' is not a dimension in 0..8");
    return v;
}

inline LieAlgebra named_algebra(const std::string &s) {
    if (s == "sl2")
        return instances::sl2();
    if (s == "axb")
        return instances::axb();
    if (s == "heisenberg")
        return instances::heisenberg();
    if (s.rfind("abelian", 0) == 0 && s.size() > 7)
        return LieAlgebra::abelian(small_dim(s.substr(7)));
    throw Error(ErrorKind::unknown_name, "unknown Lie algebra '" + s + "' (sl2, axb, heisenberg, abelianN)");
}

inline Document seeded_basis_change(const Document &doc, SeededRng &rng) {
    if (doc.kind == "lie_algebra") {
        auto g = to_lie_algebra(doc);
        return document_of(change_basis(g, random_invertible(g.dim(), rng)));
    }
    if (doc.kind == "crossed_module") {
        auto cm = to_crossed_module(doc);
        auto q0 = random_invertible(cm.n0(), rng);
        auto q1 = random_invertible(cm.n1(), rng);
        return document_of(change_basis(cm, q0, q1));
    }
    if (doc.kind == "lie2_bialgebra") {
        auto d = to_lie2_bialgebra(doc);
        auto q0 = random_invertible(d.n0(), rng);
        auto q1 = random_invertible(d.n1(), rng);
        return document_of(change_basis(d, q0, q1));
    }
    throw Error(ErrorKind::unsupported, "random_basis_change supports lie_algebra, crossed_module and lie2_bialgebra");
}

} // namespace detail

/// Valid instance of a named family. `seed` only matters for random families.
inline Document generate_family(const std::string &family, std::uint64_t seed) {
    using namespace instances;
    auto call = detail::parse_family(family);
    const auto &n = call.name;
    if (n == "abelian") {
        detail::expect_args(call, 2);
        return document_of(abelian_cm(detail::small_dim(call.args[0]), detail::small_dim(call.args[1])));
    }
    if (n == "adjoint") {
        detail::expect_args(call, 1);
        return document_of(adjoint(detail::named_algebra(call.args[0])));
    }
    if (n == "affine" || n == "axb_ideal" || n == "heisenberg_central") {
        detail::expect_args(call, 0);
        return document_of(n == "affine" ? affine() : n == "axb_ideal" ? axb_ideal() : heisenberg_central());
    }
    if (n == "scaling") {
        detail::expect_args(call, 2);
        Rational l, m;
        try {
            l = Rational::parse(call.args[0]);
            m = Rational::parse(call.args[1]);
        } catch (const Error &e) {
            throw Error(ErrorKind::unknown_name, std::string("scaling parameters: ") + e.what());
        }
        return document_of(scaling(l, m));
    }
    if (n == "abelian_dual") {
        detail::expect_args(call, 1);
        auto inner = generate_family(call.args[0], seed);
        if (inner.kind != "crossed_module")
            throw Error(ErrorKind::unknown_name, "abelian_dual needs a crossed-module family");
        return document_of(abelian_dual(to_crossed_module(inner)));
    }
    if (n == "bialgebra_double") {
        detail::expect_args(call, 1);
        if (call.args[0] == "sl2")
            return document_of(bialgebra_double(sl2(), sl2_standard_cobracket()));
        if (call.args[0] == "axb")
            return document_of(bialgebra_double(axb(), axb_cobracket()));
        throw Error(ErrorKind::unknown_name, "bialgebra_double knows sl2 and axb");
    }
    if (n == "semidirect_mp") {
        detail::expect_args(call, 0);
        return document_of(semidirect_mp());
    }
    if (n == "weak_abelian_l3") {
        detail::expect_args(call, 0);
        return document_of(weak_l3());
    }
    if (n == "random_basis_change") {
        detail::expect_args(call, 1);
        SeededRng rng(seed);
        return detail::seeded_basis_change(generate_family(call.args[0], seed), rng);
    }
    throw Error(ErrorKind::unknown_name, "unknown family '" + n + "'");
}

inline const std::vector<std::string> &family_names() {
    static const std::vector<std::string> names = {
        "abelian(n0,n1)",        "adjoint(sl2|axb|heisenberg|abelianN)", "affine", "axb_ideal", "heisenberg_central",
        "scaling(lambda,mu)",    "abelian_dual(<crossed-module family>)", "bialgebra_double(sl2|axb)",
        "semidirect_mp",         "weak_abelian_l3",                       "random_basis_change(<family>)"};
    return names;
}

// populations for the equivalence suites

namespace detail {

inline SparseTensor r_matrix_cobracket(const LieAlgebra &g, const Matrix &r) {
    const std::size_t n = g.dim();
    SparseTensor d({n, n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational v;
                for (std::size_t p = 0; p < n; ++p)
                    v += g.c(i, p, j) * r(p, k) + r(j, p) * g.c(i, p, k);
                d.set({i, j, k}, v);
            }
    return d;
}

} // namespace detail

/// Coboundary cobracket delta(x) = ad_x r for a random r in ^2 g.
inline LieCobracket random_coboundary(const LieAlgebra &g, SeededRng &rng) {
    const std::size_t n = g.dim();
    Matrix r(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            r(p, q) = rng.between(-2, 2);
            r(q, p) = -r(p, q);
        }
    return LieCobracket(detail::r_matrix_cobracket(g, r));
}

inline CrossedModuleData sl2_standard_rep() {
    SparseTensor a({3, 2, 2});
    a.set({0, 1, 0}, 1);  // e: v1 -> v0
    a.set({1, 0, 1}, 1);  // f: v0 -> v1
    a.set({2, 0, 0}, 1);
    a.set({2, 1, 1}, -1);
    return CrossedModuleData(instances::sl2(), TwoVectorSpace(Matrix(3, 2)), a, {"v0", "v1"});
}

/// Valid crossed modules with dims <= 3 per space.
inline std::vector<CrossedModuleData> base_crossed_modules() {
    using namespace instances;
    return {abelian_cm(1, 1),        abelian_cm(2, 2),          abelian_cm(3, 1),         adjoint(sl2()),
            adjoint(axb()),          adjoint(heisenberg()),     adjoint(LieAlgebra::abelian(2)),
            affine(),                axb_ideal(),               heisenberg_central(),     sl2_standard_rep(),
            semidirect_mp().cm1(),   semidirect_mp().swapped().cm1()};
}

struct PopulationMember {
    Document doc;
    std::string origin;
};

/// Mixed valid and perturbed crossed modules (perturbations are not re-rolled).
inline std::vector<PopulationMember> crossed_module_population(std::uint64_t seed, std::size_t count) {
    auto bases = base_crossed_modules();
    SeededRng rng(seed);
    std::vector<PopulationMember> out;
    while (out.size() < count) {
        std::size_t b = rng.below(bases.size());
        Document doc = document_of(bases[b]);
        std::string origin = "base" + std::to_string(b);
        if (rng.coin()) {
            doc = detail::seeded_basis_change(doc, rng);
            origin += "+basis";
        }
        if (rng.below(3) != 0) {
            std::string what;
            if (auto p = perturb_once(doc, rng, &what)) {
                doc = *p;
                origin += "+" + what;
            }
        }
        out.push_back({std::move(doc), std::move(origin)});
    }
    return out;
}

inline std::vector<Lie2BialgebraData> base_lie2_bialgebras(SeededRng &rng) {
    using namespace instances;
    std::vector<Lie2BialgebraData> out = {
        bialgebra_double(sl2(), sl2_standard_cobracket()),
        bialgebra_double(axb(), axb_cobracket()),
        bialgebra_double(sl2(), random_coboundary(sl2(), rng)),
        scaling(rng.between(-2, 2), rng.between(-2, 2)),
        semidirect_mp(),
        semidirect_mp().swapped(),
        sl2_heisenberg_double(),
        semidirect_mp_mismatched(),
        bialgebra_double(sl2(), sl2_bad_cobracket()),
    };
    for (const auto &cm : base_crossed_modules())
        out.push_back(abelian_dual(cm));
    return out;
}

/// Lie 2-bialgebra candidates with g1 != 0: valid bases, basis changes and
/// unfiltered single-entry perturbations (the partial block is shared by
/// both crossed modules, so it stays transposed).
inline std::vector<PopulationMember> lie2_bialgebra_population(std::uint64_t seed, std::size_t count) {
    SeededRng rng(seed);
    std::vector<PopulationMember> out;
    while (out.size() < count) {
        auto bases = base_lie2_bialgebras(rng);
        std::size_t b = rng.below(bases.size());
        Document doc = document_of(bases[b]);
        std::string origin = "base" + std::to_string(b);
        if (rng.coin()) {
            doc = detail::seeded_basis_change(doc, rng);
            origin += "+basis";
        }
        if (rng.coin()) {
            std::string what;
            if (auto p = perturb_once(doc, rng, &what)) {
                doc = *p;
                origin += "+" + what;
            }
        }
        out.push_back({std::move(doc), std::move(origin)});
    }
    return out;
}

} // namespace l2b
