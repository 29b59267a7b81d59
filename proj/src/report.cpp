#include "jmcalc/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace jmcalc {

namespace {

using json = nlohmann::ordered_json;

json params_to(const CheckParams& p) {
    return json{{"a2", p.a.twice()}, {"b2", p.b.twice()}, {"c2", p.c.twice()}};
}

CheckParams params_from(const json& j) {
    return CheckParams::make(HalfInt::from_twice(j.at("a2").get<std::int64_t>()),
                             HalfInt::from_twice(j.at("b2").get<std::int64_t>()),
                             HalfInt::from_twice(j.at("c2").get<std::int64_t>()));
}

CheckStatus status_from(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "partial") return CheckStatus::Partial;
    if (s == "fail") return CheckStatus::Fail;
    throw std::invalid_argument("unknown check status: " + s);
}

}  // namespace

Report Report::build(const CheckParams& params, std::vector<CheckResult> checks) {
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& x, const CheckResult& y) { return x.id < y.id; });
    Report r;
    r.params = params;
    r.engine_version = kEngineVersion;
    for (const auto& c : checks) {
        switch (c.status) {
            case CheckStatus::Pass: ++r.summary.pass; break;
            case CheckStatus::Partial: ++r.summary.partial; break;
            case CheckStatus::Fail: ++r.summary.fail; break;
        }
    }
    r.checks = std::move(checks);
    return r;
}

std::string Report::to_json() const {
    json j;
    j["params"] = params_to(params);
    j["engine_version"] = engine_version;
    j["checks"] = json::array();
    for (const auto& c : checks) {
        j["checks"].push_back(json{{"id", c.id},
                                   {"claim", c.claim},
                                   {"params", params_to(c.params)},
                                   {"expected", c.expected},
                                   {"computed", c.computed},
                                   {"status", status_str(c.status)}});
    }
    j["summary"] = json{
        {"pass", summary.pass}, {"partial", summary.partial}, {"fail", summary.fail}};
    return j.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        Report r;
        r.params = params_from(j.at("params"));
        r.engine_version = j.at("engine_version").get<std::string>();
        for (const auto& c : j.at("checks")) {
            CheckResult res;
            res.id = c.at("id").get<std::string>();
            res.claim = c.at("claim").get<std::string>();
            res.params = params_from(c.at("params"));
            res.expected = c.at("expected").get<std::string>();
            res.computed = c.at("computed").get<std::string>();
            res.status = status_from(c.at("status").get<std::string>());
            r.checks.push_back(std::move(res));
        }
        const json& s = j.at("summary");
        r.summary.pass = s.at("pass").get<long>();
        r.summary.partial = s.at("partial").get<long>();
        r.summary.fail = s.at("fail").get<long>();
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

}  // namespace jmcalc
