#pragma once

#include "l2b/bicross.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace l2b {

struct Space {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    // only used by dvb documents
    std::string name;
    bool dual = false;

    friend bool operator==(const Space &, const Space &) = default;
};

struct Document {
    std::string kind;
    std::string id;
    std::map<std::string, Space> spaces;
    std::map<std::string, SparseTensor> blocks;

    const Space &space(const std::string &name) const {
        auto it = spaces.find(name);
        if (it == spaces.end())
            throw Error(ErrorKind::syntax, "document has no space '" + name + "'");
        return it->second;
    }
    bool has_block(const std::string &name) const { return blocks.count(name) != 0; }
    const SparseTensor &block(const std::string &name) const {
        auto it = blocks.find(name);
        if (it == blocks.end())
            throw Error(ErrorKind::syntax, "document has no block '" + name + "'");
        return it->second;
    }

    friend bool operator==(const Document &, const Document &) = default;
};

struct BlockSpec {
    std::string name;
    std::vector<std::string> axes;
    bool required = true;
};

struct KindSpec {
    std::string kind;
    std::vector<std::string> spaces;
    std::vector<BlockSpec> blocks;
};

inline const std::vector<KindSpec> &document_kinds() {
    static const std::vector<KindSpec> kinds = {
        {"lie_algebra", {"g"}, {{"bracket", {"g", "g", "g"}}}},
        {"bialgebra", {"g"}, {{"bracket", {"g", "g", "g"}}, {"cobracket", {"g", "g", "g"}}}},
        {"crossed_module",
         {"g0", "g1"},
         {{"bracket0", {"g0", "g0", "g0"}},
          {"action", {"g0", "g1", "g1"}},
          {"partial", {"g0", "g1"}},
          {"core_bracket", {"g1", "g1", "g1"}, false}}},
        {"weak_lie2",
         {"g0", "g1"},
         {{"bracket0", {"g0", "g0", "g0"}},
          {"action", {"g0", "g1", "g1"}},
          {"partial", {"g0", "g1"}},
          {"jacobiator", {"g0", "g0", "g0", "g1"}}}},
        {"lie2_bialgebra",
         {"g0", "g1"},
         {{"bracket0", {"g0", "g0", "g0"}},
          {"action", {"g0", "g1", "g1"}},
          {"partial", {"g0", "g1"}},
          {"dual_bracket", {"g1", "g1", "g1"}},
          {"dual_action", {"g1", "g0", "g0"}}}},
        {"matched_pair",
         {"h", "k"},
         {{"bracket_h", {"h", "h", "h"}},
          {"bracket_k", {"k", "k", "k"}},
          {"act_h_on_k", {"h", "k", "k"}},
          {"act_k_on_h", {"k", "h", "h"}}}},
        {"dvb", {"side_h", "side_v", "core"}, {}},
    };
    return kinds;
}

inline const KindSpec &kind_spec(const std::string &kind) {
    for (const auto &k : document_kinds())
        if (k.kind == kind)
            return k;
    throw Error(ErrorKind::unknown_kind, "unknown document kind '" + kind + "'");
}

namespace detail {

using json = nlohmann::json;

inline std::string pointer_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

inline void reject_unknown(const json &obj, const std::vector<std::string> &allowed, const std::string &path) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw Error(ErrorKind::unknown_field, path + "/" + pointer_escape(it.key()) + ": unknown field");
}

inline const json &require(const json &obj, const std::string &key, const std::string &path) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw Error(ErrorKind::syntax, path + ": missing field '" + key + "'");
    return *it;
}

inline std::vector<std::size_t> block_dims(const Document &doc, const BlockSpec &spec) {
    std::vector<std::size_t> dims;
    for (const auto &a : spec.axes)
        dims.push_back(doc.space(a).dim);
    return dims;
}

inline Space parse_space(const json &j, const std::string &path, bool dvb) {
    if (!j.is_object())
        throw Error(ErrorKind::syntax, path + ": space must be an object");
    reject_unknown(j, dvb ? std::vector<std::string>{"name", "dim", "dual"} : std::vector<std::string>{"dim", "labels"},
                   path);
    Space s;
    const json &dim = require(j, "dim", path);
    if (!dim.is_number_unsigned())
        throw Error(ErrorKind::syntax, path + "/dim: must be a non-negative integer");
    s.dim = dim.get<std::size_t>();
    if (dvb) {
        const json &name = require(j, "name", path);
        if (!name.is_string())
            throw Error(ErrorKind::syntax, path + "/name: must be a string");
        s.name = name.get<std::string>();
        if (auto it = j.find("dual"); it != j.end()) {
            if (!it->is_boolean())
                throw Error(ErrorKind::syntax, path + "/dual: must be a boolean");
            s.dual = it->get<bool>();
        }
        return s;
    }
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array())
            throw Error(ErrorKind::syntax, path + "/labels: must be an array of strings");
        for (std::size_t k = 0; k < it->size(); ++k) {
            if (!(*it)[k].is_string())
                throw Error(ErrorKind::syntax, path + "/labels/" + std::to_string(k) + ": must be a string");
            s.labels.push_back((*it)[k].get<std::string>());
        }
        if (s.labels.size() != s.dim)
            throw Error(ErrorKind::range, path + "/labels: " + std::to_string(s.labels.size()) +
                                              " labels for dimension " + std::to_string(s.dim));
    }
    return s;
}

inline SparseTensor parse_block(const json &j, const std::string &path, const std::string &name,
                                const std::vector<std::size_t> &dims) {
    if (!j.is_array())
        throw Error(ErrorKind::syntax, path + ": block must be an array of [index, value] entries");
    SparseTensor t(dims);
    std::map<Index, bool> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string ep = path + "/" + std::to_string(e);
        const json &entry = j[e];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array())
            throw Error(ErrorKind::syntax, ep + ": entry must be [[indices...], \"p/q\"]");
        Index idx;
        for (std::size_t k = 0; k < entry[0].size(); ++k) {
            if (!entry[0][k].is_number_unsigned())
                throw Error(ErrorKind::syntax, ep + "/0/" + std::to_string(k) + ": index must be a non-negative integer");
            idx.push_back(entry[0][k].get<std::size_t>());
        }
        if (idx.size() != dims.size())
            throw Error(ErrorKind::range, ep + ": block " + name + " takes " + std::to_string(dims.size()) +
                                              " indices, got " + std::to_string(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (idx[k] >= dims[k])
                throw Error(ErrorKind::range, ep + ": index " + index_string(idx) + " out of range in block " + name +
                                                  " with dims " + index_string(dims));
        if (!entry[1].is_string())
            throw Error(ErrorKind::syntax, ep + "/1: value must be a rational string \"p/q\"");
        Rational v;
        try {
            v = Rational::parse(entry[1].get<std::string>());
        } catch (const Error &err) {
            throw Error(ErrorKind::bad_rational, ep + "/1: " + err.what());
        }
        if (seen.count(idx))
            throw Error(ErrorKind::syntax, ep + ": duplicate index " + index_string(idx) + " in block " + name);
        seen[idx] = true;
        t.set(idx, v);
    }
    return t;
}

} // namespace detail

inline Document parse_document(std::string_view bytes) {
    using detail::json;
    json j;
    try {
        j = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::syntax, "byte " + std::to_string(e.byte) + ": malformed JSON");
    }
    if (!j.is_object())
        throw Error(ErrorKind::syntax, "byte 0: document must be a JSON object");
    detail::reject_unknown(j, {"kind", "id", "spaces", "blocks"}, "");
    const json &kind = detail::require(j, "kind", "");
    if (!kind.is_string())
        throw Error(ErrorKind::syntax, "/kind: must be a string");
    Document doc;
    doc.kind = kind.get<std::string>();
    const KindSpec &spec = kind_spec(doc.kind);
    if (auto it = j.find("id"); it != j.end()) {
        if (!it->is_string())
            throw Error(ErrorKind::syntax, "/id: must be a string");
        doc.id = it->get<std::string>();
    }

    const json &spaces = detail::require(j, "spaces", "");
    if (!spaces.is_object())
        throw Error(ErrorKind::syntax, "/spaces: must be an object");
    detail::reject_unknown(spaces, spec.spaces, "/spaces");
    const bool dvb = doc.kind == "dvb";
    for (const auto &name : spec.spaces) {
        Space s = detail::parse_space(detail::require(spaces, name, "/spaces"), "/spaces/" + name, dvb);
        if (!dvb && s.labels.empty())
            s.labels = default_labels(name == "g1" || name == "k" ? "f" : "e", s.dim);
        doc.spaces[name] = std::move(s);
    }

    if (dvb) {
        if (auto it = j.find("blocks"); it != j.end() && !(it->is_object() && it->empty()))
            throw Error(ErrorKind::unknown_field, "/blocks: dvb documents carry no blocks");
        return doc;
    }
    const json &blocks = detail::require(j, "blocks", "");
    if (!blocks.is_object())
        throw Error(ErrorKind::syntax, "/blocks: must be an object");
    std::vector<std::string> names;
    for (const auto &b : spec.blocks)
        names.push_back(b.name);
    detail::reject_unknown(blocks, names, "/blocks");
    for (const auto &b : spec.blocks) {
        auto it = blocks.find(b.name);
        if (it == blocks.end()) {
            if (b.required)
                throw Error(ErrorKind::syntax, "/blocks: missing block '" + b.name + "'");
            continue;
        }
        doc.blocks[b.name] = detail::parse_block(*it, "/blocks/" + b.name, b.name, detail::block_dims(doc, b));
    }
    return doc;
}

/// Canonical text: fixed key order, one block entry per line, entries in index order.
inline std::string serialize_document(const Document &doc) {
    using detail::json;
    const KindSpec &spec = kind_spec(doc.kind);
    const bool dvb = doc.kind == "dvb";
    std::string out = "{\n";
    out += "  \"kind\": " + json(doc.kind).dump() + ",\n";
    if (!doc.id.empty())
        out += "  \"id\": " + json(doc.id).dump() + ",\n";
    out += "  \"spaces\": {\n";
    for (std::size_t k = 0; k < spec.spaces.size(); ++k) {
        const Space &s = doc.space(spec.spaces[k]);
        if (dvb)
            out += "    " + json(spec.spaces[k]).dump() + ": {\"name\": " + json(s.name).dump() +
                   ", \"dim\": " + std::to_string(s.dim) + ", \"dual\": " + (s.dual ? "true" : "false") + "}";
        else
            out += "    " + json(spec.spaces[k]).dump() + ": {\"dim\": " + std::to_string(s.dim) +
                   ", \"labels\": " + json(s.labels).dump() + "}";
        out += k + 1 < spec.spaces.size() ? ",\n" : "\n";
    }
    out += "  }";
    if (dvb)
        return out + "\n}\n";
    out += ",\n  \"blocks\": {\n";
    std::vector<const BlockSpec *> present;
    for (const auto &b : spec.blocks)
        if (doc.has_block(b.name))
            present.push_back(&b);
        else if (b.required)
            throw Error(ErrorKind::syntax, "document lacks required block '" + b.name + "'");
    for (std::size_t k = 0; k < present.size(); ++k) {
        const SparseTensor &t = doc.block(present[k]->name);
        out += "    " + json(present[k]->name).dump() + ": [";
        if (t.nnz() == 0) {
            out += "]";
        } else {
            out += "\n";
            std::size_t e = 0;
            for (const auto &[idx, v] : t.entries()) {
                out += "      [" + json(idx).dump() + ", " + json(v.str()).dump() + "]";
                out += ++e < t.nnz() ? ",\n" : "\n";
            }
            out += "    ]";
        }
        out += k + 1 < present.size() ? ",\n" : "\n";
    }
    out += "  }\n}\n";
    return out;
}

// conversions between documents and kernel values

inline SparseTensor matrix_block(const Matrix &m) {
    SparseTensor t({m.rows(), m.cols()});
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            t.set({r, c}, m(r, c));
    return t;
}

inline Matrix block_matrix(const SparseTensor &t) {
    if (t.rank() != 2)
        throw Error(ErrorKind::dimension_mismatch, "matrix block must have rank 2");
    Matrix m(t.dim(0), t.dim(1));
    for (const auto &[idx, v] : t.entries())
        m(idx[0], idx[1]) = v;
    return m;
}

namespace detail {

inline void expect_kind(const Document &doc, const std::string &kind) {
    if (doc.kind != kind)
        throw Error(ErrorKind::unsupported, "expected a " + kind + " document, got " + doc.kind);
}

inline Space space_of(const std::vector<std::string> &labels) { return Space{labels.size(), labels, "", false}; }

} // namespace detail

inline LieAlgebra to_lie_algebra(const Document &doc) {
    detail::expect_kind(doc, "lie_algebra");
    return LieAlgebra(doc.space("g").labels, doc.block("bracket"));
}

inline Document document_of(const LieAlgebra &g, std::string id = "") {
    Document d{"lie_algebra", std::move(id), {{"g", detail::space_of(g.labels())}}, {{"bracket", g.structure()}}};
    return d;
}

inline std::pair<LieAlgebra, LieCobracket> to_bialgebra(const Document &doc) {
    detail::expect_kind(doc, "bialgebra");
    return {LieAlgebra(doc.space("g").labels, doc.block("bracket")), LieCobracket(doc.block("cobracket"))};
}

inline Document document_of(const LieAlgebra &g, const LieCobracket &d, std::string id = "") {
    return Document{"bialgebra",
                    std::move(id),
                    {{"g", detail::space_of(g.labels())}},
                    {{"bracket", g.structure()}, {"cobracket", d.tensor()}}};
}

inline CrossedModuleData to_crossed_module(const Document &doc) {
    detail::expect_kind(doc, "crossed_module");
    return CrossedModuleData(LieAlgebra(doc.space("g0").labels, doc.block("bracket0")),
                             TwoVectorSpace(block_matrix(doc.block("partial"))), doc.block("action"),
                             doc.space("g1").labels);
}

inline std::optional<LieAlgebra> core_bracket_of(const Document &doc) {
    detail::expect_kind(doc, "crossed_module");
    if (!doc.has_block("core_bracket"))
        return std::nullopt;
    return LieAlgebra(doc.space("g1").labels, doc.block("core_bracket"));
}

inline Document document_of(const CrossedModuleData &cm, std::string id = "",
                            const std::optional<LieAlgebra> &core_bracket = std::nullopt) {
    Document d{"crossed_module",
               std::move(id),
               {{"g0", detail::space_of(cm.base().labels())}, {"g1", detail::space_of(cm.core_labels())}},
               {{"bracket0", cm.base().structure()},
                {"action", cm.action()},
                {"partial", matrix_block(cm.tvs().partial())}}};
    if (core_bracket)
        d.blocks["core_bracket"] = core_bracket->structure();
    return d;
}

inline WeakLie2Data to_weak_lie2(const Document &doc) {
    detail::expect_kind(doc, "weak_lie2");
    return WeakLie2Data(block_matrix(doc.block("partial")), doc.block("bracket0"), doc.block("action"),
                        doc.block("jacobiator"), doc.space("g0").labels, doc.space("g1").labels);
}

inline Document document_of(const WeakLie2Data &w, std::string id = "") {
    return Document{"weak_lie2",
                    std::move(id),
                    {{"g0", detail::space_of(w.labels0())}, {"g1", detail::space_of(w.labels1())}},
                    {{"bracket0", w.bracket0()},
                     {"action", w.action()},
                     {"partial", matrix_block(w.partial())},
                     {"jacobiator", w.jacobiator()}}};
}

inline Lie2BialgebraData to_lie2_bialgebra(const Document &doc) {
    detail::expect_kind(doc, "lie2_bialgebra");
    const auto &l0 = doc.space("g0").labels, &l1 = doc.space("g1").labels;
    Matrix p = block_matrix(doc.block("partial"));
    CrossedModuleData cm1(LieAlgebra(l0, doc.block("bracket0")), TwoVectorSpace(p), doc.block("action"), l1);
    CrossedModuleData cm2(LieAlgebra(dual_labels(l1), doc.block("dual_bracket")), TwoVectorSpace(p.transpose()),
                          doc.block("dual_action"), dual_labels(l0));
    return Lie2BialgebraData(std::move(cm1), std::move(cm2));
}

inline Document document_of(const Lie2BialgebraData &d, std::string id = "") {
    return Document{"lie2_bialgebra",
                    std::move(id),
                    {{"g0", detail::space_of(d.cm1().base().labels())}, {"g1", detail::space_of(d.cm1().core_labels())}},
                    {{"bracket0", d.cm1().base().structure()},
                     {"action", d.cm1().action()},
                     {"partial", matrix_block(d.cm1().tvs().partial())},
                     {"dual_bracket", d.cm2().base().structure()},
                     {"dual_action", d.cm2().action()}}};
}

inline MatchedPairData to_matched_pair(const Document &doc) {
    detail::expect_kind(doc, "matched_pair");
    return MatchedPairData(LieAlgebra(doc.space("h").labels, doc.block("bracket_h")),
                           LieAlgebra(doc.space("k").labels, doc.block("bracket_k")), doc.block("act_h_on_k"),
                           doc.block("act_k_on_h"));
}

inline Document document_of(const MatchedPairData &mp, std::string id = "") {
    return Document{"matched_pair",
                    std::move(id),
                    {{"h", detail::space_of(mp.h().labels())}, {"k", detail::space_of(mp.k().labels())}},
                    {{"bracket_h", mp.h().structure()},
                     {"bracket_k", mp.k().structure()},
                     {"act_h_on_k", mp.act_h_on_k()},
                     {"act_k_on_h", mp.act_k_on_h()}}};
}

inline SplitDvb to_dvb(const Document &doc) {
    detail::expect_kind(doc, "dvb");
    auto sd = [&](const char *n) {
        const Space &s = doc.space(n);
        return SpaceDescriptor{s.name, s.dim, s.dual};
    };
    return SplitDvb{sd("side_h"), sd("side_v"), sd("core")};
}

inline Document document_of(const SplitDvb &d, std::string id = "") {
    auto sp = [](const SpaceDescriptor &s) { return Space{s.dim, {}, s.name, s.dual}; };
    return Document{"dvb", std::move(id), {{"side_h", sp(d.side_h)}, {"side_v", sp(d.side_v)}, {"core", sp(d.core)}}, {}};
}

} // namespace l2b
