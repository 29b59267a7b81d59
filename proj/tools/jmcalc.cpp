#include <atomic>
#include <fstream>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "jmcalc/expr.hpp"
#include "jmcalc/ledger.hpp"
#include "jmcalc/mustar.hpp"
#include "jmcalc/report.hpp"
#include "jmcalc/theorems.hpp"

namespace {

using namespace jmcalc;

// Exit codes: 0 all checks hold, 1 a check failed, 2 usage error,
// 3 a computation came back unconstrained where an exact value was recorded.
constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string triple_str(const CheckParams& p) {
    return fmt::format("({},{},{})", p.a.str(), p.b.str(), p.c.str());
}

CheckParams parse_triple(const std::string& a, const std::string& b, const std::string& c) {
    return CheckParams::make(HalfInt::parse(a), HalfInt::parse(b), HalfInt::parse(c));
}

struct VerifyOutcome {
    std::string text;
    Report report;
    bool inconclusive = false;
};

VerifyOutcome run_checks(const CheckParams& params, const std::vector<std::string>& only) {
    Checker ck(params);
    Report report = Report::build(params, ck.run_all(only));
    std::string text = fmt::format("checks at {}\n", triple_str(params));
    for (const auto& r : report.checks)
        text += fmt::format("{:<26} {:<8} {} -> {}\n", r.id, status_str(r.status), r.expected,
                            r.computed);
    text += fmt::format("summary: pass={} partial={} fail={}\n", report.summary.pass,
                        report.summary.partial, report.summary.fail);
    return {std::move(text), std::move(report), !ck.inconclusive_ids().empty()};
}

int exit_code_for(const Report& report, bool inconclusive) {
    if (report.summary.fail > 0) return kExitCheckFail;
    if (inconclusive) return kExitInternal;
    return kExitPass;
}

int cmd_verify(const std::string& a, const std::string& b, const std::string& c,
               const std::vector<std::string>& only, const std::string& json_path) {
    CheckParams params = parse_triple(a, b, c);
    VerifyOutcome out = run_checks(params, only);
    fmt::print("{}", out.text);
    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open for writing: " + json_path);
        f << out.report.to_json();
    }
    return exit_code_for(out.report, out.inconclusive);
}

int cmd_sweep(const std::string& max_s, int jobs) {
    HalfInt max = HalfInt::parse(max_s);
    const HalfInt h = HalfInt::half();
    if (!max.is_half_odd() || max < h + 2)
        throw std::invalid_argument("--max must be a half-odd value >= 5/2");
    if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");

    std::vector<CheckParams> triples;
    for (HalfInt a = h; a <= max; a += 1)
        for (HalfInt b = a + 1; b <= max; b += 1)
            for (HalfInt c = b + 1; c <= max; c += 1) triples.push_back(CheckParams::make(a, b, c));

    // Workers fill per-triple slots; output order never depends on scheduling.
    std::vector<VerifyOutcome> outcomes(triples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < triples.size(); i = next.fetch_add(1))
            outcomes[i] = run_checks(triples[i], {});
    };
    std::vector<std::thread> pool;
    std::size_t n_threads = std::min<std::size_t>(jobs, triples.size());
    for (std::size_t t = 0; t + 1 < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    ReportSummary total;
    bool inconclusive = false;
    int worst = kExitPass;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const Report& r = outcomes[i].report;
        fmt::print("{} pass={} partial={} fail={}\n", triple_str(triples[i]), r.summary.pass,
                   r.summary.partial, r.summary.fail);
        total.pass += r.summary.pass;
        total.partial += r.summary.partial;
        total.fail += r.summary.fail;
        inconclusive = inconclusive || outcomes[i].inconclusive;
        worst = std::max(worst, exit_code_for(r, outcomes[i].inconclusive));
    }
    fmt::print("sweep: {} triples pass={} partial={} fail={}\n", triples.size(), total.pass,
               total.partial, total.fail);
    return worst;
}

int cmd_mustar(const std::string& expr_s, const std::string& depth_s) {
    InducedExpr expr = parse_expr(expr_s);
    JacquetEngine engine(Ledger::at(HalfInt::half(), HalfInt::half() + 1, HalfInt::half() + 2));

    if (depth_s == "full") {
        WordMultiset words = engine.full_words(expr);
        long total = 0;
        for (const auto& [w, m] : words) {
            fmt::print("{} * {}\n", m, word_str(w));
            total += m;
        }
        fmt::print("{} words, {} with multiplicity\n", words.size(), total);
        return kExitPass;
    }

    std::size_t pos = 0;
    long depth = 0;
    try {
        depth = std::stol(depth_s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("--depth takes a positive integer or 'full'");
    }
    if (pos != depth_s.size() || depth < 1)
        throw std::invalid_argument("--depth takes a positive integer or 'full'");

    // Level-by-level expansion: each level replaces every term's tail by that
    // tail's own row list, accumulating the general-linear parts.
    std::map<std::pair<GLTerm, InducedExpr>, long> rows;
    rows[{GLTerm::unit(), expr}] = 1;
    for (long level = 0; level < depth; ++level) {
        std::map<std::pair<GLTerm, InducedExpr>, long> out;
        for (const auto& [term, coeff] : rows) {
            for (const auto& row : engine.mu_rows(term.second)) {
                GLTerm gl = term.first;
                for (const auto& f : row.gl.factors()) gl.push(f);
                out[{gl, row.rest}] += coeff * row.coeff;
            }
        }
        rows = std::move(out);
    }
    long total = 0;
    for (const auto& [term, coeff] : rows) {
        fmt::print("{} * {} (x) {}\n", coeff, term.first.str(), term.second.str());
        total += coeff;
    }
    fmt::print("{} terms, {} with multiplicity\n", rows.size(), total);
    return kExitPass;
}

int cmd_factors(const std::string& name, const std::string& a, const std::string& b,
                const std::string& c) {
    CheckParams params = parse_triple(a, b, c);
    Ledger led = Ledger::at(params.a, params.b, params.c);
    const LedgerRow* row = led.find(name);
    if (!row) {
        std::string known;
        for (const auto& r : led.rows()) known += fmt::format("  {}\n", r.name);
        throw std::invalid_argument(
            fmt::format("unknown table name: {}\nknown names:\n{}", name, known));
    }
    fmt::print("{} = {}\n", row->name, row->host.str());
    for (const auto& [g, m] : row->classes.terms()) fmt::print("{} * {}\n", m, g.str());
    fmt::print("{} classes\n", row->classes.size());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact composition-multiplicity checks for segment-induced representations"};
    app.require_subcommand(1);

    std::string a_s, b_s, c_s, json_path, max_s, expr_s, depth_s = "1", name_s;
    std::vector<std::string> only;
    int jobs = 1;

    CLI::App* verify = app.add_subcommand("verify", "run the check registry at one triple");
    verify->add_option("--a", a_s, "first parameter, as p/2 or a .5 decimal")->required();
    verify->add_option("--b", b_s, "second parameter")->required();
    verify->add_option("--c", c_s, "third parameter")->required();
    verify->add_option("--only", only, "run only these check ids");
    verify->add_option("--json", json_path, "also write the JSON certificate here");

    CLI::App* sweep = app.add_subcommand("sweep", "run the registry at every triple with c <= max");
    sweep->add_option("--max", max_s, "largest third parameter, >= 5/2")->required();
    sweep->add_option("--jobs", jobs, "worker threads (results are order-independent)");

    CLI::App* mustar =
        app.add_subcommand("mustar", "print the restriction rows of an induced expression");
    mustar->add_option("--expr", expr_s, "expression, e.g. \"ind(d(1/2,1/2), sigma)\"")
        ->required();
    mustar->add_option("--depth", depth_s, "expansion levels n, or 'full' for exponent words");

    CLI::App* factors = app.add_subcommand("factors", "print one recorded composition table");
    factors->add_option("--name", name_s, "table name, e.g. seg-times-strict")->required();
    factors->add_option("--a", a_s, "first parameter")->required();
    factors->add_option("--b", b_s, "second parameter")->required();
    factors->add_option("--c", c_s, "third parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(a_s, b_s, c_s, only, json_path);
        if (sweep->parsed()) return cmd_sweep(max_s, jobs);
        if (mustar->parsed()) return cmd_mustar(expr_s, depth_s);
        return cmd_factors(name_s, a_s, b_s, c_s);
    } catch (const std::logic_error& e) {
        // invalid_argument / out_of_range / domain errors: the request named
        // something outside the computable grammar.
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        fmt::print(stderr, "internal error: {}\n", e.what());
        return kExitInternal;
    }
}
