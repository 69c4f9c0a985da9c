#pragma once

#include "l2b/rational.hpp"
#include "l2b/sparse_tensor.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace l2b {

/// Minimal failing basis tuple plus the two sides of the violated identity.
struct Witness {
    Index indices;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct Check {
    std::string id;
    bool pass = true;
    std::optional<Witness> witness;
};

class VerificationReport {
  public:
    bool passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check &c) { return c.pass; });
    }

    const std::vector<Check> &checks() const { return checks_; }
    const std::map<std::string, std::string> &metadata() const { return metadata_; }
    const std::optional<bool> &agreement() const { return agreement_; }

    void add_pass(std::string id) { checks_.push_back(Check{std::move(id), true, std::nullopt}); }
    void add_fail(std::string id, Witness w) { checks_.push_back(Check{std::move(id), false, std::move(w)}); }
    void add(Check c) { checks_.push_back(std::move(c)); }

    void set_metadata(const std::string &key, std::string value) { metadata_[key] = std::move(value); }
    void set_agreement(bool a) { agreement_ = a; }

    /// Appends another report's checks with ids prefixed by `prefix.`.
    void merge(const VerificationReport &sub, const std::string &prefix) {
        for (const auto &c : sub.checks_) {
            Check copy = c;
            copy.id = prefix.empty() ? c.id : prefix + "." + c.id;
            checks_.push_back(std::move(copy));
        }
        for (const auto &[k, v] : sub.metadata_)
            metadata_[prefix.empty() ? k : prefix + "." + k] = v;
    }

    const Check *find(const std::string &id) const {
        for (const auto &c : checks_)
            if (c.id == id)
                return &c;
        return nullptr;
    }

    /// True iff every check whose id starts with `prefix` passes.
    bool passed_prefix(const std::string &prefix) const {
        for (const auto &c : checks_)
            if (c.id.compare(0, prefix.size(), prefix) == 0 && !c.pass)
                return false;
        return true;
    }

    const Check *first_failure() const {
        for (const auto &c : checks_)
            if (!c.pass)
                return &c;
        return nullptr;
    }

  private:
    std::vector<Check> checks_;
    std::map<std::string, std::string> metadata_;
    std::optional<bool> agreement_;
};

} // namespace l2b
