#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "jmcalc/expr.hpp"
#include "jmcalc/gatom.hpp"
#include "jmcalc/gl.hpp"
#include "jmcalc/ledger.hpp"
#include "jmcalc/oracle.hpp"

namespace jmcalc {

// One term of the full comultiplication of an induced expression: a
// general-linear part tensored with a smaller induced expression.
struct MuRow {
    GLTerm gl;
    InducedExpr rest;
    long coeff = 1;
};

// True when atom_mu_rows accepts the class.
bool has_closed_rows(const GAtom& atom);

// Full comultiplication of a bare class. Defined for the cuspidal class, the
// strictly-positive-half-line and signed segment classes, and quotient
// classes carrying one segment over the cuspidal class; throws
// std::logic_error for kinds without a closed row list.
std::vector<MuRow> atom_mu_rows(const GAtom& atom);

// Restriction of a product term all the way to the torus direction; quotient
// factors contribute through their defining pair with alternating sign, so
// every returned count is nonnegative.
WordMultiset gl_torus_words(const GLTerm& term);

// The host an atom is cut out of, together with which table row names its
// siblings: the right-hand sides are the ledger's business.
std::optional<InducedExpr> defining_host(const GAtom& atom);

// Mult-one witness terms in the comultiplication of the class, used for
// upper bounds on composition multiplicities.
std::vector<GGTerm> atom_certificates(const GAtom& atom);

// Computes composition multiplicities by combining comultiplication rows,
// decomposition-table lookups and interval arithmetic. One instance caches
// per parameter triple.
class JacquetEngine {
public:
    explicit JacquetEngine(Ledger ledger) : ledger_(std::move(ledger)) {}

    const Ledger& ledger() const { return ledger_; }

    // Comultiplication rows of the host, aggregated and memoised.
    const std::vector<MuRow>& mu_rows(const InducedExpr& host);

    // Multiplicity interval of target.gl (x) target.g among the host's rows.
    Mult mult_in_mustar(const GGTerm& target, const InducedExpr& host);

    // Multiplicity interval of the class in the host's composition series.
    Mult gcontains(const GAtom& target, const InducedExpr& host);

    // Fully peeled words of the host, with multiplicities.
    WordMultiset full_words(const InducedExpr& host);

private:
    using Key = std::pair<GAtom, InducedExpr>;

    Mult gcontains_routes(const GAtom& target, const InducedExpr& host);
    long chain_lower(const GAtom& target, const InducedExpr& host);
    Mult atom_upper(const GGTerm& target, const GAtom& g);
    std::vector<GGTerm> target_witnesses(const GAtom& target);

    Ledger ledger_;
    std::map<InducedExpr, std::vector<MuRow>> rows_;
    std::map<Key, Mult> gmemo_;
    std::set<Key> inflight_;
    std::map<GAtom, std::vector<GGTerm>> witnesses_;
    std::set<GAtom> winflight_;
    long guard_trips_ = 0;
};

}  // namespace jmcalc
