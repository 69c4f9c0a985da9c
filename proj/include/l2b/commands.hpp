#pragma once

#include "l2b/generator.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace l2b {

inline constexpr const char *kernel_version = "0.1.0";

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// L2B_DEGREE_BOUND, default 4.
inline int degree_bound_from_env() {
    const char *v = std::getenv("L2B_DEGREE_BOUND");
    if (!v || !*v)
        return default_degree_bound;
    char *end = nullptr;
    long b = std::strtol(v, &end, 10);
    if (*end != '\0' || b < 1 || b > 12)
        throw Error(ErrorKind::range, std::string("L2B_DEGREE_BOUND must be an integer in 1..12, got '") + v + "'");
    return static_cast<int>(b);
}

struct DocumentVerification {
    std::string method;
    VerificationReport report;
};

namespace detail {

[[noreturn]] inline void unsupported_method(const Document &doc, const std::string &method) {
    throw Error(ErrorKind::unsupported, "method '" + method + "' is not available for " + doc.kind + " documents");
}

/// Runs two routes that must agree and records the comparison.
inline VerificationReport agreeing(const std::vector<std::pair<std::string, VerificationReport>> &routes) {
    VerificationReport rep;
    bool agree = true;
    for (const auto &[name, r] : routes) {
        rep.merge(r, name);
        rep.set_metadata("verdict." + name, r.passed() ? "pass" : "fail");
        agree = agree && r.passed() == routes.front().second.passed();
    }
    rep.set_agreement(agree);
    if (!agree)
        rep.add_fail("agreement", Witness{{}, "", "", "kernel defect: equivalent characterizations disagree"});
    return rep;
}

} // namespace detail

/// Dispatches a document to its verifier(s). Throws Error for input problems.
inline DocumentVerification verify_document(const Document &doc, const std::string &method, int degree_bound) {
    static const std::vector<std::string> methods = {"auto", "def", "matched", "weil", "all"};
    if (std::find(methods.begin(), methods.end(), method) == methods.end())
        throw Error(ErrorKind::unsupported, "unknown method '" + method + "'");
    const auto &k = doc.kind;
    if (k == "lie_algebra") {
        if (method != "auto" && method != "def")
            detail::unsupported_method(doc, method);
        return {"def", verify_lie(to_lie_algebra(doc))};
    }
    if (k == "bialgebra") {
        if (method != "auto" && method != "def")
            detail::unsupported_method(doc, method);
        auto [g, d] = to_bialgebra(doc);
        return {"def", verify_cocycle(g, d)};
    }
    if (k == "crossed_module") {
        auto cm = to_crossed_module(doc);
        auto core = core_bracket_of(doc);
        auto def = [&] { return core ? verify_full_crossed_module(cm, *core) : verify_cm(cm); };
        if (method == "auto" || method == "def")
            return {"def", def()};
        if (method == "weil")
            return {"weil", verify_cm_weil(cm)};
        if (method == "all")
            return {"all", detail::agreeing({{"def", verify_cm(cm)}, {"weil", verify_cm_weil(cm)}})};
        detail::unsupported_method(doc, method);
    }
    if (k == "weak_lie2") {
        if (method != "auto" && method != "weil")
            detail::unsupported_method(doc, method);
        return {"weil", verify_weak_lie2(to_weak_lie2(doc))};
    }
    if (k == "lie2_bialgebra") {
        auto d = to_lie2_bialgebra(doc);
        if (method == "auto" || method == "all")
            return {"all", cross_check(d, degree_bound)};
        if (method == "def")
            return {"def", verify_l2b_def(d)};
        if (method == "matched")
            return {"matched", verify_l2b_matched(d)};
        return {"weil", verify_l2b_weil(d, degree_bound)};
    }
    if (k == "matched_pair") {
        if (method != "auto" && method != "matched")
            detail::unsupported_method(doc, method);
        return {"matched", verify_matched_pair(to_matched_pair(doc))};
    }
    if (k == "dvb") {
        if (method != "auto" && method != "def")
            detail::unsupported_method(doc, method);
        return {"def", check_duality_identity(to_dvb(doc))};
    }
    throw Error(ErrorKind::unknown_kind, "unknown document kind '" + k + "'");
}

inline std::string report_json(const std::string &instance, const std::string &kind, const DocumentVerification &v) {
    using ojson = nlohmann::ordered_json;
    ojson j;
    j["instance"] = instance;
    j["kind"] = kind;
    j["method"] = v.method;
    j["kernel_version"] = kernel_version;
    j["verdict"] = v.report.passed() ? "pass" : "fail";
    j["agreement"] = v.report.agreement() ? ojson(*v.report.agreement()) : ojson(nullptr);
    ojson checks = ojson::array();
    for (const auto &c : v.report.checks()) {
        ojson cj;
        cj["id"] = c.id;
        cj["pass"] = c.pass;
        if (c.witness) {
            ojson w;
            w["indices"] = c.witness->indices;
            w["lhs"] = c.witness->lhs;
            w["rhs"] = c.witness->rhs;
            w["note"] = c.witness->note;
            cj["witness"] = w;
        }
        checks.push_back(cj);
    }
    j["checks"] = checks;
    ojson meta = ojson::object();
    for (const auto &[key, val] : v.report.metadata())
        meta[key] = val;
    j["metadata"] = meta;
    return j.dump(2) + "\n";
}

namespace detail {

template <class F> CommandResult guarded(F &&f) {
    try {
        return f();
    } catch (const Error &e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace detail

inline CommandResult cmd_verify_text(const std::string &bytes, const std::string &instance, const std::string &method) {
    return detail::guarded([&] {
        Document doc = parse_document(bytes);
        auto v = verify_document(doc, method, degree_bound_from_env());
        return CommandResult{v.report.passed() ? 0 : 1, report_json(doc.id.empty() ? instance : doc.id, doc.kind, v),
                             ""};
    });
}

inline CommandResult cmd_verify(const std::string &path, const std::string &method) {
    return detail::guarded([&] { return cmd_verify_text(read_file(path), path, method); });
}

inline Document dualize_document(const Document &doc, const std::string &which) {
    if (which == "two_vs") {
        if (doc.kind == "lie2_bialgebra") {
            Document out = document_of(to_lie2_bialgebra(doc).swapped());
            out.id = doc.id;
            return out;
        }
        if (doc.kind == "crossed_module") {
            auto cm = to_crossed_module(doc);
            if (!cm.base().structure().is_zero() || !cm.action().is_zero() || doc.has_block("core_bracket"))
                throw Error(ErrorKind::unsupported,
                            "two_vs dual of a crossed module is only defined when bracket0 and action vanish; "
                            "use a lie2_bialgebra document");
            Document out = document_of(zero_dual(cm));
            out.id = doc.id;
            return out;
        }
        throw Error(ErrorKind::unsupported, "two_vs dualization needs a crossed_module or lie2_bialgebra document");
    }
    if (which == "dvb_vertical" || which == "dvb_horizontal" || which == "flip") {
        if (doc.kind != "dvb")
            throw Error(ErrorKind::unsupported, which + " needs a dvb document, got " + doc.kind);
        auto d = to_dvb(doc);
        auto r = which == "flip" ? dvb_flip(d) : which == "dvb_vertical" ? dvb_vertical_dual(d) : dvb_horizontal_dual(d);
        return document_of(r, doc.id);
    }
    throw Error(ErrorKind::unsupported, "unknown dualization '" + which + "'");
}

inline CommandResult cmd_dualize(const std::string &path, const std::string &which) {
    return detail::guarded([&] {
        return CommandResult{0, serialize_document(dualize_document(parse_document(read_file(path)), which)), ""};
    });
}

inline bool document_passes(const Document &doc) {
    return verify_document(doc, "auto", default_degree_bound).report.passed();
}

inline CommandResult cmd_gen(const std::string &family, std::uint64_t seed, bool perturbed) {
    return detail::guarded([&] {
        Document doc = generate_family(family, seed);
        std::string what;
        if (perturbed)
            doc = perturb(doc, seed, document_passes, &what);
        doc.id = family + (perturbed ? "/perturbed" : "") + "/seed" + std::to_string(seed);
        return CommandResult{0, serialize_document(doc), ""};
    });
}

inline CommandResult cmd_catalog(const std::string &action, const std::string &name) {
    return detail::guarded([&] {
        if (action == "list") {
            std::string out;
            for (const auto &e : catalog())
                out += e.name + "\t" + e.doc.kind + "\t" + (e.valid ? "valid" : "invalid") + "\t" + e.description + "\n";
            return CommandResult{0, out, ""};
        }
        if (action == "show") {
            if (name.empty())
                throw Error(ErrorKind::unknown_name, "catalog show needs an instance name");
            return CommandResult{0, serialize_document(catalog_find(name).doc), ""};
        }
        throw Error(ErrorKind::unsupported, "catalog action must be list or show");
    });
}

} // namespace l2b
