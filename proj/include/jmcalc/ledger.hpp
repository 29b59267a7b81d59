#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jmcalc/expr.hpp"
#include "jmcalc/gatom.hpp"

namespace jmcalc {

// One recorded decomposition: the composition classes of an induced host,
// each with coefficient one.
struct LedgerRow {
    std::string name;
    InducedExpr host;
    RGSum classes;
    // Recomputed by this library's own checks rather than imported; the
    // verification lives in the named checks of the theorems module.
    bool derived = false;
};

// Flip factors with negative center to their mirror and keep the factor list
// sorted; composition classes are insensitive to both.
InducedExpr normalize_host(const InducedExpr& e);

// Decomposition table for one parameter triple a < b < c. Lookups also match
// the generic one- and two-factor patterns at any half-odd parameters, since
// the underlying statements are uniform in them.
class Ledger {
public:
    static Ledger at(HalfInt a, HalfInt b, HalfInt c);

    HalfInt a() const { return a_; }
    HalfInt b() const { return b_; }
    HalfInt c() const { return c_; }

    // Full class list of the host, if this table knows it.
    std::optional<RGSum> decompose(const InducedExpr& host) const;

    // Named instances at this table's triple, for reporting.
    const LedgerRow* find(const std::string& name) const;
    const std::vector<LedgerRow>& rows() const { return rows_; }

private:
    Ledger(HalfInt a, HalfInt b, HalfInt c);

    HalfInt a_, b_, c_;
    std::vector<LedgerRow> rows_;
};

}  // namespace jmcalc
