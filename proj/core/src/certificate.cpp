#include "zetafree/certificate.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace zetafree {

using json = nlohmann::ordered_json;

const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Pass: return "PASS";
        case CertStatus::Fail: return "FAIL";
        case CertStatus::Indeterminate: return "INDETERMINATE";
        case CertStatus::Incomplete: return "INCOMPLETE";
    }
    return "?";
}

CertStatus status_from_string(const std::string& s) {
    if (s == "PASS") return CertStatus::Pass;
    if (s == "FAIL") return CertStatus::Fail;
    if (s == "INDETERMINATE") return CertStatus::Indeterminate;
    if (s == "INCOMPLETE") return CertStatus::Incomplete;
    throw std::invalid_argument("unknown certificate status: " + s);
}

CertStatus combine(CertStatus a, CertStatus b) {
    auto rank = [](CertStatus s) {
        switch (s) {
            case CertStatus::Pass: return 0;
            case CertStatus::Indeterminate: return 1;
            case CertStatus::Incomplete: return 2;
            case CertStatus::Fail: return 3;
        }
        return 3;
    };
    return rank(a) >= rank(b) ? a : b;
}

namespace {

std::string mpfr_hex(const mpfr_t& x, mpfr_rnd_t rnd) {
    char buf[600];
    mpfr_snprintf(buf, sizeof buf, "%Ra", x);
    (void)rnd;  // hex rendering of a binary float is exact; rounding moot
    return buf;
}

json interval_to_json(const Interval& v) {
    json j;
    j["lo"] = v.lo_string(24);
    j["hi"] = v.hi_string(24);
    j["lo_hex"] = mpfr_hex(v.lo(), MPFR_RNDD);
    j["hi_hex"] = mpfr_hex(v.hi(), MPFR_RNDU);
    j["prec"] = static_cast<long>(v.precision());
    j["dir"] = "outward";
    return j;
}

Interval interval_from_json(const json& j) {
    mpfr_prec_t prec = j.at("prec").get<long>();
    Interval v(prec);
    std::string lo = j.at("lo_hex").get<std::string>();
    std::string hi = j.at("hi_hex").get<std::string>();
    mpfr_set_str(v.mlo(), lo.c_str(), 0, MPFR_RNDD);
    mpfr_set_str(v.mhi(), hi.c_str(), 0, MPFR_RNDU);
    return v;
}

}  // namespace

std::string Certificate::to_json(bool deterministic, int indent) const {
    json j;
    j["schema"] = "zetafree-certificate-v1";
    j["id"] = id;
    j["claim"] = claim;
    j["status"] = zetafree::to_string(status);
    json encs = json::object();
    for (const auto& [name, v] : enclosures) encs[name] = interval_to_json(v);
    j["enclosures"] = encs;
    json cks = json::array();
    for (const auto& c : checks)
        cks.push_back({{"name", c.name}, {"status", zetafree::to_string(c.status)}, {"detail", c.detail}});
    j["checks"] = cks;
    j["witness"] = witness;
    j["precision_used"] = static_cast<long>(precision_used);
    if (!deterministic) j["wall_time_ms"] = wall_time_ms;
    return j.dump(indent);
}

Certificate Certificate::from_json(const std::string& text) {
    json j = json::parse(text);
    Certificate c;
    c.id = j.at("id").get<std::string>();
    c.claim = j.at("claim").get<std::string>();
    c.status = status_from_string(j.at("status").get<std::string>());
    for (auto& [name, v] : j.at("enclosures").items())
        c.enclosures.emplace_back(name, interval_from_json(v));
    for (auto& ck : j.at("checks")) {
        Check k;
        k.name = ck.at("name").get<std::string>();
        k.status = status_from_string(ck.at("status").get<std::string>());
        k.detail = ck.at("detail").get<std::string>();
        c.checks.push_back(std::move(k));
    }
    c.witness = j.at("witness").get<std::map<std::string, std::string>>();
    c.precision_used = j.at("precision_used").get<long>();
    if (j.contains("wall_time_ms")) c.wall_time_ms = j["wall_time_ms"].get<double>();
    return c;
}

CertificateStore::CertificateStore(std::string directory) : dir_(std::move(directory)) {
    std::filesystem::create_directories(dir_);
}

std::string CertificateStore::path_for(const std::string& id, const std::string& digest) const {
    std::string safe = id;
    for (auto& ch : safe)
        if (ch == '/' || ch == ' ') ch = '_';
    return dir_ + "/" + safe + "-" + digest + ".json";
}

std::optional<Certificate> CertificateStore::load(const std::string& id,
                                                  const std::string& digest) const {
    std::ifstream in(path_for(id, digest));
    if (!in) return std::nullopt;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return Certificate::from_json(text);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void CertificateStore::save(const Certificate& cert, const std::string& digest,
                            bool deterministic) const {
    std::string path = path_for(cert.id, digest);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << cert.to_json(deterministic) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::string params_digest(const std::string& canonical) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace zetafree
