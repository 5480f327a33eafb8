#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetafree/interval.hpp"

namespace zetafree {

enum class CertStatus { Pass, Fail, Indeterminate, Incomplete };

const char* to_string(CertStatus s);
CertStatus status_from_string(const std::string& s);
CertStatus combine(CertStatus a, CertStatus b);  // worst of the two

// One named subcheck inside a certificate.
struct Check {
    std::string name;
    CertStatus status = CertStatus::Indeterminate;
    std::string detail;
};

// The unit of verified output: a claim, its status, the named enclosures the
// decision rests on, and a machine-readable witness. A Pass status means every
// enclosure comparison behind it was strict.
struct Certificate {
    std::string id;     // lemma / equation identifier
    std::string claim;  // rendered inequality text
    CertStatus status = CertStatus::Indeterminate;
    std::vector<std::pair<std::string, Interval>> enclosures;
    std::vector<Check> checks;
    std::map<std::string, std::string> witness;
    double wall_time_ms = 0;
    mpfr_prec_t precision_used = 0;

    void add_enclosure(const std::string& name, const Interval& v) {
        enclosures.emplace_back(name, v);
    }
    void add_check(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok ? CertStatus::Pass : CertStatus::Fail, detail});
    }
    void add_check_status(const std::string& name, CertStatus st, const std::string& detail = "") {
        checks.push_back({name, st, detail});
    }
    // Pass only if every recorded check passed.
    void settle() {
        CertStatus s = CertStatus::Pass;
        for (const auto& c : checks) s = combine(s, c.status);
        status = s;
    }
    bool passed() const { return status == CertStatus::Pass; }
    const Check* find_check(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    // JSON serialization; interval endpoints carried both as decimal strings
    // (outward-rounded, for humans) and hex floats (lossless round-trip).
    std::string to_json(bool deterministic = false, int indent = 2) const;
    static Certificate from_json(const std::string& text);
};

// Content-addressed certificate store: one JSON file per (id, params digest),
// written atomically (write-temp-then-rename).
class CertificateStore {
public:
    explicit CertificateStore(std::string directory);
    std::optional<Certificate> load(const std::string& id, const std::string& digest) const;
    void save(const Certificate& cert, const std::string& digest, bool deterministic) const;
    std::string path_for(const std::string& id, const std::string& digest) const;

private:
    std::string dir_;
};

// FNV-1a digest of a canonical parameter string, as stable hex.
std::string params_digest(const std::string& canonical);

}  // namespace zetafree
