#include "l2b/commands.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace l2b;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            if (problems.size() < 5)
                problems.push_back(what);
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

bool has_witness(const VerificationReport &r) {
    for (const auto &c : r.checks())
        if (!c.pass && c.witness && (!c.witness->indices.empty() || !c.witness->note.empty()))
            return true;
    return false;
}

const auto cm_population = [] { return crossed_module_population(20261016, 240); };
const auto l2b_population = [] { return lie2_bialgebra_population(4242, 120); };

Outcome criterion1() {
    Outcome o;
    auto t0 = Clock::now();
    std::size_t valid = 0, invalid = 0;
    for (const auto &e : catalog()) {
        auto r = verify_document(e.doc, "auto", default_degree_bound).report;
        if (e.valid) {
            o.require(r.passed(), e.name + " should pass");
            ++valid;
        } else {
            o.require(!r.passed() && has_witness(r), e.name + " should fail with a witness");
            ++invalid;
        }
    }
    using namespace instances;
    o.require(verify_lie(sl2()).passed(), "sl2 verify_lie");
    o.require(verify_cocycle(axb(), axb_cobracket()).passed(), "ax+b verify_cocycle");
    o.require(verify_cm(adjoint(sl2())).passed(), "adjoint verify_cm");
    o.require(verify_full_crossed_module(adjoint(sl2()), sl2()).passed(), "adjoint verify_full_crossed_module");
    auto sc = cross_check(scaling(1, 1));
    o.require(sc.passed() && sc.agreement() == std::optional<bool>(true), "scaling cross_check");
    o.require(cross_check(abelian_dual(adjoint(sl2()))).passed(), "abelian dual of adjoint(sl2)");
    o.require(cross_check(abelian_dual(affine())).passed(), "abelian dual of affine");
    o.require(verify_weak_lie2(weak_l3()).passed(), "weak_l3 verify_weak_lie2");
    double s = seconds_since(t0);
    o.require(s < 5.0, "took " + fmt_seconds(s));
    o.detail = std::to_string(valid) + " valid pass, " + std::to_string(invalid) + " invalid fail, " + fmt_seconds(s);
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto t0 = Clock::now();
    auto pop = cm_population();
    std::size_t valid = 0;
    std::map<std::string, std::size_t> failing;
    const std::vector<std::pair<std::string, std::string>> mapping = {
        {"J", "delta_h.square_zero.alpha"},
        {"R", "delta_h.square_zero.gamma"},
        {"A", "commutator.alpha"},
        {"B", "commutator.gamma"},
    };
    for (const auto &m : pop) {
        auto cm = to_crossed_module(m.doc);
        o.require(cm.n0() <= 3 && cm.n1() <= 3, m.origin + " too large");
        auto def = verify_cm(cm);
        auto dh = build_delta_h(cm.base().structure(), cm.action());
        auto dv = build_delta_v(cm.tvs());
        bool weil = check_square_zero(dh).passed() && check_square_zero(dv).passed() &&
                    graded_commutator(dh, dv).is_zero();
        o.require(def.passed() == weil, m.origin + ": verify_cm and Weil disagree");
        valid += def.passed();
        auto w = verify_cm_weil(cm);
        for (const auto &[d, c] : mapping) {
            o.require(def.find(d)->pass == w.find(c)->pass, m.origin + ": " + d + " vs " + c);
            if (!def.find(d)->pass)
                ++failing[d];
        }
    }
    double s = seconds_since(t0);
    o.require(s < 30.0, "took " + fmt_seconds(s));
    o.detail = std::to_string(pop.size()) + " instances (" + std::to_string(valid) + " valid); failing J/R/A/B = " +
               std::to_string(failing["J"]) + "/" + std::to_string(failing["R"]) + "/" + std::to_string(failing["A"]) +
               "/" + std::to_string(failing["B"]) + ", " + fmt_seconds(s);
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto t0 = Clock::now();
    std::vector<std::pair<std::string, Lie2BialgebraData>> cases;
    for (const auto &e : catalog())
        if (e.doc.kind == "lie2_bialgebra")
            cases.emplace_back(e.name, to_lie2_bialgebra(e.doc));
    const std::size_t from_catalog = cases.size();
    for (const auto &m : l2b_population())
        cases.emplace_back(m.origin, to_lie2_bialgebra(m.doc));
    std::size_t valid = 0;
    for (const auto &[name, d] : cases) {
        o.require(d.n1() > 0, name + ": g1 = 0");
        bool a = verify_l2b_def(d).passed(), b = verify_l2b_matched(d).passed(),
             c = verify_l2b_weil(d, default_degree_bound).passed();
        o.require(a == b && b == c, name + ": def/matched/weil = " + std::to_string(a) + std::to_string(b) +
                                        std::to_string(c));
        valid += a && b && c;
    }
    double s = seconds_since(t0);
    o.require(s < 60.0, "took " + fmt_seconds(s));
    o.require(valid > 0 && valid < cases.size(), "population is not mixed");
    o.detail = std::to_string(from_catalog) + " catalog + " + std::to_string(cases.size() - from_catalog) +
               " seeded, " + std::to_string(valid) + " valid, all three verifiers agree, " + fmt_seconds(s);
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::size_t n = 0;
    for (const auto &m : cm_population()) {
        auto cm = to_crossed_module(m.doc);
        if (!verify_cm(cm).passed())
            continue;
        ++n;
        auto derived = derived_bracket(cm);
        o.require(verify_lie(derived).passed(), m.origin + ": derived bracket not Lie");
        auto full = verify_full_crossed_module(cm, derived);
        o.require(full.find("partial_is_morphism")->pass, m.origin + ": partial not a morphism");
        o.require(full.find("action_by_derivations")->pass, m.origin + ": action not by derivations");
        o.require(verify_lie(gamma_total(cm)).passed(), m.origin + ": gamma_total not Lie");
    }
    o.require(n > 0, "no valid crossed modules");
    o.detail = std::to_string(n) + " valid crossed modules";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::vector<std::pair<std::string, CrossedModuleData>> cms;
    for (const auto &m : cm_population()) {
        auto cm = to_crossed_module(m.doc);
        if (verify_cm(cm).passed())
            cms.emplace_back(m.origin, cm);
    }
    for (const auto &m : l2b_population()) {
        auto d = to_lie2_bialgebra(m.doc);
        if (verify_cm(d.cm1()).passed())
            cms.emplace_back("cm1 of " + m.origin, d.cm1());
    }
    for (const auto &[name, cm] : cms) {
        auto r = cross_check(instances::abelian_dual(cm));
        o.require(r.passed() && r.agreement() == std::optional<bool>(true), name);
    }
    o.detail = std::to_string(cms.size()) + " valid cm1 paired with the zero dual";
    return o;
}

Outcome criterion6() {
    Outcome o;
    SeededRng rng(606);
    for (int t = 0; t < 50; ++t) {
        SplitDvb d{{"A", rng.below(6), false}, {"B", rng.below(6), false}, {"C", rng.below(6), false}};
        auto r = check_duality_identity(d);
        o.require(r.passed() && r.metadata().at("core_sign") == "-1", "triple " + std::to_string(t));
        o.require(dvb_vertical_dual(dvb_vertical_dual(d)) == d, "vertical dual not involutive");
        o.require(dvb_horizontal_dual(dvb_horizontal_dual(d)) == d, "horizontal dual not involutive");
        o.require(dvb_flip(dvb_flip(d)) == d, "flip not involutive");
        Document doc = document_of(d, "triple" + std::to_string(t));
        for (const char *w : {"dvb_vertical", "dvb_horizontal", "flip"})
            o.require(dualize_document(dualize_document(doc, w), w) == doc, std::string(w) + " document");
        Matrix p(rng.below(4), rng.below(4));
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j)
                p(i, j) = rng.between(-3, 3);
        TwoVectorSpace tv(p);
        o.require(dual_two_vs(dual_two_vs(tv)) == tv, "dual_two_vs not involutive");
    }
    for (const auto &m : l2b_population()) {
        auto once = dualize_document(m.doc, "two_vs");
        o.require(dualize_document(once, "two_vs") == m.doc, "two_vs on " + m.origin);
    }
    o.detail = "50 random triples, core sign -1; all dual operations involutive";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::size_t n = 0;
    for (const auto &m : cm_population()) {
        auto cm = to_crossed_module(m.doc);
        o.require(verify_weak_lie2(WeakLie2Data::from_crossed_module(cm)).passed() == verify_cm(cm).passed(),
                  m.origin);
        ++n;
    }
    o.require(verify_weak_lie2(instances::weak_l3()).passed(), "weak_l3 fails");
    std::size_t perturbed = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = cmd_gen("weak_abelian_l3", seed, true);
        o.require(g.exit_code == 0, "gen weak_abelian_l3 seed " + std::to_string(seed) + ": " + g.err);
        if (g.exit_code != 0)
            continue;
        auto r = verify_weak_lie2(to_weak_lie2(parse_document(g.out)));
        o.require(!r.passed() && has_witness(r), "perturbation seed " + std::to_string(seed) + " passes");
        ++perturbed;
    }
    o.detail = std::to_string(n) + " strict instances agree; weak_l3 passes; " + std::to_string(perturbed) +
               " seeded perturbations fail";
    return o;
}

int run(const std::string &cmd) {
    int st = std::system(cmd.c_str());
    if (st == -1 || !WIFEXITED(st))
        return -1;
    return WEXITSTATUS(st);
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion8() {
    Outcome o;
    const std::string cli = L2B_CLI_PATH;
    fs::path dir = fs::temp_directory_path() / ("l2b_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto q = [](const fs::path &p) { return "'" + p.string() + "'"; };

    std::size_t cases = 0;
    for (const auto &e : catalog()) {
        fs::path in = dir / (e.name + ".json");
        std::ofstream(in, std::ios::binary) << serialize_document(e.doc);
        std::vector<std::string> methods = {"auto"};
        if (e.doc.kind == "lie2_bialgebra")
            methods = {"auto", "def", "matched", "weil", "all"};
        if (e.doc.kind == "crossed_module")
            methods = {"auto", "def", "all"};
        for (const auto &m : methods) {
            fs::path a = dir / (e.name + "." + m + ".a"), b = dir / (e.name + "." + m + ".b");
            int ca = run(cli + " verify " + q(in) + " --method " + m + " --out " + q(a) + " 2>/dev/null");
            int cb = run(cli + " verify " + q(in) + " --method " + m + " > " + q(b) + " 2>/dev/null");
            int want = e.valid ? 0 : 1;
            if (m != "auto")
                want = verify_document(e.doc, m, default_degree_bound).report.passed() ? 0 : 1;
            o.require(ca == want && cb == want,
                      "verify " + e.name + " --method " + m + " exit " + std::to_string(ca) + "/" + std::to_string(cb));
            o.require(slurp(a) == slurp(b) && !slurp(a).empty(), "report bytes differ for " + e.name);
            ++cases;
        }
    }

    struct Cmd {
        std::string args;
        int want;
    };
    fs::path bad = dir / "bad.json";
    std::ofstream(bad) << "{\"kind\": \"lie_algebra\", \"spaces\": {\"g\": {\"dim\": 1}}, \"blocks\": {\"bracket\": [[[0,0,1], \"1\"]]}}";
    fs::path junk = dir / "junk.json";
    std::ofstream(junk) << "{ not json";
    const std::vector<Cmd> matrix = {
        {"", 2},
        {"--help", 0},
        {"frobnicate", 2},
        {"verify", 2},
        {"verify " + q(dir / "missing.json"), 2},
        {"verify " + q(bad), 2},
        {"verify " + q(junk), 2},
        {"verify " + q(dir / "sl2.json") + " --method weil", 2},
        {"verify " + q(dir / "sl2.json") + " --method bogus", 2},
        {"verify " + q(dir / "dvb_231.json") + " --method weil", 2},
        {"verify " + q(dir / "sl2.json") + " --unknown-flag", 2},
        {"verify " + q(dir / "sl2.json") + " --out " + q(dir / "no/such/dir/out.json"), 2},
        {"dualize " + q(dir / "dvb_231.json") + " --which flip", 0},
        {"dualize " + q(dir / "dvb_231.json"), 2},
        {"dualize " + q(dir / "sl2.json") + " --which two_vs", 2},
        {"dualize " + q(dir / "scaling_pair.json") + " --which two_vs", 0},
        {"gen --family 'scaling(1,1)' --seed 3", 0},
        {"gen --family 'adjoint(sl2)' --seed 7 --perturbed", 0},
        {"gen --family nothing --seed 1", 2},
        {"gen --seed 1", 2},
        {"gen --family 'scaling(1,1)' --seed notanumber", 2},
        {"catalog list", 0},
        {"catalog show sl2", 0},
        {"catalog show nonexistent", 2},
        {"catalog", 2},
    };
    for (const auto &c : matrix) {
        int code = run(cli + " " + c.args + " > /dev/null 2>&1");
        o.require(code == c.want, "'" + c.args + "' exit " + std::to_string(code) + ", want " + std::to_string(c.want));
        ++cases;
    }
    int env = run("L2B_DEGREE_BOUND=0 " + cli + " verify " + q(dir / "scaling_pair.json") + " > /dev/null 2>&1");
    o.require(env == 2, "bad L2B_DEGREE_BOUND exit " + std::to_string(env));
    ++cases;

    for (const char *fam : {"random_basis_change(adjoint(sl2))", "abelian_dual(heisenberg_central)"}) {
        fs::path a = dir / "gen_a", b = dir / "gen_b";
        run(cli + " gen --family '" + fam + "' --seed 11 > " + q(a));
        run(cli + " gen --family '" + fam + "' --seed 11 --out " + q(b));
        o.require(slurp(a) == slurp(b) && !slurp(a).empty(), std::string("gen not deterministic for ") + fam);
    }
    fs::remove_all(dir);
    o.detail = std::to_string(cases) + " CLI invocations, exit codes in {0,1,2} as expected, reports byte-identical";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
        {"catalog soundness", criterion1},
        {"E1 crossed module vs Weil differentials", criterion2},
        {"E2 definition / matched pair / Weil", criterion3},
        {"derived bracket theorems", criterion4},
        {"abelian-dual closure", criterion5},
        {"duality bookkeeping", criterion6},
        {"weak/strict consistency", criterion7},
        {"determinism and CLI contract", criterion8},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail << "\n";
        for (const auto &p : o.problems)
            std::cout << "      " << p << "\n";
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
