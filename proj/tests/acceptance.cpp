// Acceptance gate: one PASS/FAIL line per shipped criterion, exit code equal
// to the number of failed criteria. Runs the full four-triple grid.
#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "jmcalc/gatom.hpp"
#include "jmcalc/gl.hpp"
#include "jmcalc/ledger.hpp"
#include "jmcalc/mustar.hpp"
#include "jmcalc/oracle.hpp"
#include "jmcalc/theorems.hpp"

namespace {

using namespace jmcalc;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const HalfInt kHalf = HalfInt::half();

struct Triple {
    HalfInt a, b, c;
};
const std::vector<Triple> kGrid = {{kHalf, kHalf + 1, kHalf + 2},
                                   {kHalf, kHalf + 1, kHalf + 3},
                                   {kHalf, kHalf + 2, kHalf + 3},
                                   {kHalf + 1, kHalf + 2, kHalf + 3}};

Segment seg(HalfInt x, HalfInt y) { return Segment::make(x, y); }

RGSum sum_of(std::initializer_list<GAtom> atoms) {
    RGSum s;
    for (const auto& g : atoms) s.add(g);
    return s;
}

// The recorded eleven-class ledger and four-step coarsening at one triple,
// built directly from the class factories.
struct Expected {
    GAtom tri_p, tri_bca, tri_abc;
    GAtom L_ha_sp_bc, L_ha_sm_bc, L_hb_sp_ac, L_hb_sm_ac;
    GAtom L_ab_c, L_bc_a, L_ac_b, L_two, L_psi;

    explicit Expected(Triple t) {
        tri_p = GAtom::triple(t.a, t.b, t.c, AtomKind::TriplePlus);
        tri_bca = GAtom::triple(t.a, t.b, t.c, AtomKind::TripleMinusBCA);
        tri_abc = GAtom::triple(t.a, t.b, t.c, AtomKind::TripleMinusABC);
        Segment ha = seg(kHalf, t.a), hb = seg(kHalf, t.b);
        L_ha_sp_bc = GAtom::langlands({ha}, GAtom::seg_pm(-t.b, t.c, true));
        L_ha_sm_bc = GAtom::langlands({ha}, GAtom::seg_pm(-t.b, t.c, false));
        L_hb_sp_ac = GAtom::langlands({hb}, GAtom::seg_pm(-t.a, t.c, true));
        L_hb_sm_ac = GAtom::langlands({hb}, GAtom::seg_pm(-t.a, t.c, false));
        L_ab_c = GAtom::langlands({seg(-t.a, t.b)}, GAtom::strict_ds(t.c));
        L_bc_a = GAtom::langlands({seg(-t.b, t.c)}, GAtom::strict_ds(t.a));
        L_ac_b = GAtom::langlands({seg(-t.a, t.c)}, GAtom::strict_ds(t.b));
        L_two = GAtom::langlands({seg(-t.b, t.c), ha}, GAtom::cuspidal());
        L_psi = GAtom::langlands({seg(-t.a, t.c), hb}, GAtom::cuspidal());
    }

    RGSum main() const {
        return sum_of({tri_p, tri_bca, L_ha_sp_bc, L_ha_sm_bc, L_hb_sp_ac, L_hb_sm_ac,
                       L_ab_c, L_bc_a, L_ac_b, L_two, L_psi});
    }
};

// criterion 1: the eleven-class ledger, exact and fast, at every grid triple.
std::string criterion_main_ledger() {
    double worst = 0.0;
    for (Triple t : kGrid) {
        auto t0 = Clock::now();
        Checker ck(t.a, t.b, t.c);
        RGSum main = ck.main_decomposition();
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        if (dt >= 10.0) return fmt::format("triple took {:.1f}s (limit 10s)", dt);
        if (main.size() != 11 || main.total() != 11) return "class count wrong: " + main.str();
        if (!(main == Expected(t).main())) return "class list mismatch: " + main.str();
    }
    return fmt::format("PASS|11 distinct coefficient-one classes on all {} triples, "
                       "slowest {:.2f}s",
                       kGrid.size(), worst);
}

// criterion 2: the four-step coarsening with exact memberships and totals.
std::string criterion_filtration() {
    for (Triple t : kGrid) {
        Checker ck(t.a, t.b, t.c);
        Expected e(t);
        auto w = ck.filtration();
        if (w.size() != 4) return "wrong step count";
        std::vector<RGSum> want = {
            sum_of({e.tri_p, e.L_ha_sm_bc}),
            sum_of({e.L_ha_sp_bc, e.L_ab_c, e.L_hb_sm_ac, e.L_bc_a}),
            sum_of({e.L_hb_sp_ac, e.L_ac_b, e.tri_bca, e.L_two}),
            sum_of({e.L_psi})};
        RGSum total;
        for (std::size_t i = 0; i < 4; ++i) {
            if (!(w[i] == want[i]))
                return fmt::format("step {} mismatch: {}", i + 1, w[i].str());
            total += w[i];
        }
        if (!(total == ck.main_decomposition())) return "steps do not sum to the ledger";
    }
    return "PASS|step sizes [2,4,4,1] with the recorded memberships; steps sum to the ledger";
}

// criterion 3: the check registry passes broadly, including the named
// multiplicity patterns and candidate counts.
std::string criterion_check_battery() {
    const std::vector<std::string> required = {
        "L4.2-mult2",     "L4.4-plus-host", "L4.5-neg-zero",   "L4.1-candidates",
        "P5.2-candidates", "P5.3-candidates", "L6.1-pair",      "L6.2-wide-pair",
        "L6.3-jac-pair",  "L6.4-jac-pair",  "P6.5-mult-one",   "L7.2-unitary-hook",
        "L7.3-xi-hook",   "L7.4-ladder-hook", "L7.5-wide-hook", "L7.6-plus-hook",
        "P7.7-mult-one",  "L8.1-jac-hook",  "P8.2-mult-one"};
    long min_pass = -1;
    for (Triple t : kGrid) {
        Checker ck(t.a, t.b, t.c);
        auto results = ck.run_all();
        long pass = 0;
        for (const auto& r : results) {
            if (r.status == CheckStatus::Pass) ++pass;
            if (r.status == CheckStatus::Fail)
                return fmt::format("{} failed: {} vs {}", r.id, r.expected, r.computed);
        }
        for (const auto& id : required) {
            auto it = std::find_if(results.begin(), results.end(),
                                   [&](const CheckResult& r) { return r.id == id; });
            if (it == results.end() || it->status != CheckStatus::Pass)
                return "required check not passing: " + id;
        }
        if (pass < 20) return fmt::format("only {} checks pass", pass);
        min_pass = min_pass < 0 ? pass : std::min(min_pass, pass);
    }
    return fmt::format("PASS|{} checks pass per triple (>= 20 required), "
                       "all named patterns included",
                       min_pass);
}

// criterion 4: the order-sensitive square-integrable class missing from the
// wide host is still present in the span host's table.
std::string criterion_ds_exclusion() {
    for (Triple t : kGrid) {
        Checker ck(t.a, t.b, t.c);
        Expected e(t);
        if (ck.main_decomposition().coeff(e.tri_abc) != 0)
            return "excluded class leaked into the wide ledger";
        const LedgerRow* row = ck.engine().ledger().find("seg-ab-rtimes-ds-c");
        if (!row || row->classes.coeff(e.tri_abc) != 1)
            return "span-host table missing the class";
    }
    return "PASS|excluded class has coefficient 0 in the wide ledger, 1 in the span table";
}

// criterion 5: the engine's fully peeled words equal the independent
// reference enumeration on every small product over the base class.
std::string criterion_oracle_equivalence() {
    auto t0 = Clock::now();
    std::vector<Segment> pool;
    for (HalfInt lo = -(kHalf + 2); lo <= kHalf + 2; lo += 1)
        for (HalfInt hi = lo; hi <= std::min(lo + 3, kHalf + 2); hi += 1)
            pool.push_back(seg(lo, hi));

    JacquetEngine engine(Ledger::at(kHalf, kHalf + 1, kHalf + 2));
    long instances = 0;
    // Products with total exponent count <= 4, factors drawn sorted from the
    // pool so each unordered product appears once.
    std::function<void(std::size_t, long, std::vector<Segment>&)> rec;
    std::string failure;
    rec = [&](std::size_t start, long budget, std::vector<Segment>& cur) {
        if (!failure.empty()) return;
        if (!cur.empty()) {
            ++instances;
            InducedExpr host(cur, GAtom::cuspidal());
            if (!(engine.full_words(host) == minimal_jacquet_words(cur)))
                failure = "word multiset mismatch at " + host.str();
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            long card = pool[i].cardinality();
            if (card > budget) continue;
            cur.push_back(pool[i]);
            rec(i, budget - card, cur);
            cur.pop_back();
        }
    };
    std::vector<Segment> cur;
    rec(0, 4, cur);
    double dt = seconds_since(t0);
    if (!failure.empty()) return failure;
    if (instances < 50) return fmt::format("only {} instances generated", instances);
    if (dt >= 30.0) return fmt::format("took {:.1f}s (limit 30s)", dt);
    return fmt::format("PASS|{} products checked against the reference enumeration "
                       "in {:.2f}s, zero mismatches",
                       instances, dt);
}

// criterion 6: the algebraic property suites.
std::string criterion_property_suites() {
    std::mt19937 rng(20260815);
    auto rnd = [&rng](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    const HalfInt top = kHalf + 2;

    // Support conservation on every restriction row of randomized hosts.
    std::vector<GAtom> atom_pool = {GAtom::cuspidal()};
    for (HalfInt x = kHalf; x <= top; x += 1) {
        atom_pool.push_back(GAtom::strict_ds(x));
        atom_pool.push_back(GAtom::langlands({seg(kHalf, x)}, GAtom::cuspidal()));
        for (HalfInt y = x; y <= top; y += 1) {
            atom_pool.push_back(GAtom::seg_pm(-x, y, true));
            atom_pool.push_back(GAtom::seg_pm(-x, y, false));
        }
    }
    JacquetEngine engine(Ledger::at(kHalf, kHalf + 1, kHalf + 2));
    for (int i = 0; i < 10000; ++i) {
        std::vector<Segment> factors;
        long n_factors = rnd(1, 2);
        for (long k = 0; k < n_factors; ++k) {
            HalfInt lo = kHalf + static_cast<int>(rnd(-3, 2));
            factors.push_back(seg(lo, lo + static_cast<int>(rnd(0, 1))));
        }
        InducedExpr host(factors, atom_pool[static_cast<std::size_t>(
                                      rnd(0, static_cast<long>(atom_pool.size()) - 1))]);
        CuspSupport want = host.abs_support();
        for (const auto& row : engine.mu_rows(host)) {
            if (!(row.gl.support().abs() + row.rest.abs_support() == want))
                return "support not conserved at " + host.str();
        }
    }

    // Truncated-subtraction laws on random class sums.
    std::vector<GAtom> basis = {GAtom::cuspidal(), GAtom::strict_ds(kHalf),
                                GAtom::strict_ds(kHalf + 1), GAtom::seg_pm(-kHalf, kHalf, true),
                                GAtom::seg_pm(-kHalf, kHalf + 1, false),
                                GAtom::triple(kHalf, kHalf + 1, kHalf + 2, AtomKind::TriplePlus)};
    auto random_sum = [&] {
        RGSum s;
        for (const auto& g : basis)
            if (long m = rnd(0, 3)) s.add(g, m);
        return s;
    };
    for (int i = 0; i < 1000; ++i) {
        RGSum x = random_sum(), y = random_sum(), z = random_sum();
        if (!(floor_plus(x, RGSum{}) == x)) return "truncation: empty subtrahend changed x";
        if (!floor_plus(x, x).empty()) return "truncation: x minus x not empty";
        if (!sum_leq(floor_plus(x, y), x)) return "truncation: result exceeds minuend";
        if (!(floor_plus(x + y, y) == x)) return "truncation: cancellation failed";
        if (!sum_leq(floor_plus(x, y + z), floor_plus(x, y)))
            return "truncation: monotonicity failed";
    }

    // Two-factor general-linear products: term counts and support totals.
    std::vector<Segment> segs;
    for (HalfInt lo = -top; lo <= top; lo += 1)
        for (HalfInt hi = lo; hi <= std::min(lo + 2, top); hi += 1) segs.push_back(seg(lo, hi));
    for (const auto& d1 : segs)
        for (const auto& d2 : segs) {
            auto terms = pair_decompose(d1, d2);
            std::size_t want_terms = is_linked(d1, d2) ? 2 : 1;
            if (terms.size() != want_terms)
                return fmt::format("pair term count {} at {} x {}", terms.size(), d1.str(),
                                   d2.str());
            CuspSupport want = d1.support() + d2.support();
            for (const auto& term : terms)
                if (!(term.support() == want))
                    return fmt::format("pair support off at {} x {}", d1.str(), d2.str());
        }

    // Layer-flip involution on random stacks.
    for (int i = 0; i < 1000; ++i) {
        std::vector<RGSum> layers;
        long n = rnd(1, 4);
        for (long k = 0; k < n; ++k) layers.push_back(random_sum());
        auto twice = dualize_layers(dualize_layers(layers));
        if (!(twice == layers)) return "layer flip is not an involution";
        auto once = dualize_layers(layers);
        if (!(once.front() == layers.back())) return "layer flip did not reverse";
    }

    // The three square-integrable triple classes share block data but carry
    // pairwise distinct sign tables.
    for (Triple t : kGrid) {
        GAtom p = GAtom::triple(t.a, t.b, t.c, AtomKind::TriplePlus);
        GAtom m1 = GAtom::triple(t.a, t.b, t.c, AtomKind::TripleMinusBCA);
        GAtom m2 = GAtom::triple(t.a, t.b, t.c, AtomKind::TripleMinusABC);
        if (!(jordan_of(p) == jordan_of(m1) && jordan_of(m1) == jordan_of(m2)))
            return "triple classes disagree on block data";
        auto ep = epsilon_of(p), e1 = epsilon_of(m1), e2 = epsilon_of(m2);
        if (ep == e1 || e1 == e2 || ep == e2) return "sign tables not pairwise distinct";
    }

    return "PASS|10000 row-support instances, truncation laws, pair products, "
           "layer-flip involution, sign-table distinctness";
}

// criterion 7: the kernel sandwich with the shared classes identified exactly.
std::string criterion_sandwich() {
    for (Triple t : kGrid) {
        Checker ck(t.a, t.b, t.c);
        Expected e(t);
        KernelLedgers kl = ck.kernel_ledgers();
        RGSum main = ck.main_decomposition();
        if (!sum_leq(kl.k1, main) || !sum_leq(kl.k2, main) || !sum_leq(kl.k3, main))
            return "a kernel ledger is not bounded by the full ledger";
        if (!sum_leq(main, kl.k1 + kl.k2 + kl.k3 + sum_of({e.L_psi})))
            return "full ledger exceeds the kernel total";
        RGSum over = floor_plus(kl.k1 + kl.k2 + kl.k3, floor_plus(main, sum_of({e.L_psi})));
        RGSum want_over = sum_of({e.L_ha_sp_bc, e.L_ha_sm_bc, e.L_ab_c, e.L_bc_a});
        want_over.add(e.tri_p, 2);
        if (!(over == want_over)) return "shared classes misidentified: " + over.str();
    }
    return "PASS|kernel sandwich holds; sharing is one class twice plus four classes once";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
        {"criterion 1 (eleven-class ledger)", criterion_main_ledger},
        {"criterion 2 (four-step coarsening)", criterion_filtration},
        {"criterion 3 (check battery)", criterion_check_battery},
        {"criterion 4 (excluded class)", criterion_ds_exclusion},
        {"criterion 5 (reference-enumeration equivalence)", criterion_oracle_equivalence},
        {"criterion 6 (property suites)", criterion_property_suites},
        {"criterion 7 (kernel sandwich)", criterion_sandwich},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        std::string outcome;
        try {
            outcome = fn();
        } catch (const std::exception& e) {
            outcome = std::string("exception: ") + e.what();
        }
        if (outcome.rfind("PASS|", 0) == 0) {
            fmt::print("PASS {}: {}\n", name, outcome.substr(5));
        } else {
            fmt::print("FAIL {}: {}\n", name, outcome);
            ++failures;
        }
    }
    return failures;
}
