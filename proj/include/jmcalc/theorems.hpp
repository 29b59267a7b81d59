#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "jmcalc/expr.hpp"
#include "jmcalc/gatom.hpp"
#include "jmcalc/mustar.hpp"

namespace jmcalc {

// Parameter triple 1/2 <= a < b < c of half-odd exponents. Everything in this
// module is a statement about classes built from these three numbers.
struct CheckParams {
    HalfInt a, b, c;

    // Throws std::invalid_argument unless 1/2 <= a < b < c, all half-odd.
    static CheckParams make(HalfInt a, HalfInt b, HalfInt c);

    friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

enum class CheckStatus { Pass, Partial, Fail };

std::string status_str(CheckStatus s);

// Outcome of one registered identity check: the claim is re-computed from
// scratch and compared against the recorded value.
struct CheckResult {
    std::string id;
    // What is being checked, in words; lists trusted inputs where the
    // computation leans on one.
    std::string claim;
    CheckParams params;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Fail;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Composition ledgers of the three kernel hosts and their factor-flipped
// mirrors. The mirror sums must coincide classwise with the originals.
struct KernelLedgers {
    RGSum k1, k2, k3;
    RGSum h1, h2, h3;
};

// Layer list of a host, bottom (socle) layer first; the layer sum equals the
// host's full composition ledger.
struct LayerStructure {
    std::vector<RGSum> layers;
};

// Runs the registered identity checks at one parameter triple. Construction
// is cheap; every computation is memoised inside the owned engine, so a
// single instance should be reused across checks of the same triple.
class Checker {
public:
    Checker(HalfInt a, HalfInt b, HalfInt c);
    explicit Checker(CheckParams p);

    const CheckParams& params() const { return params_; }
    JacquetEngine& engine() { return engine_; }

    // All registered check ids, sorted.
    static std::vector<std::string> check_ids();

    // Runs one registered check; throws std::out_of_range on unknown ids.
    CheckResult verify_lemma(const std::string& id);

    // Runs the whole registry, or the given subset, sorted by id.
    std::vector<CheckResult> run_all(const std::vector<std::string>& only = {});

    // Ids whose computation came back fully unconstrained where an exact
    // value was recorded; populated by verify_lemma / run_all.
    const std::set<std::string>& inconclusive_ids() const { return inconclusive_; }

    // The square-integrable classes whose exponent multiset matches the wide
    // host's: exactly the three triple classes.
    std::vector<GAtom> enumerate_ds_candidates() const;

    // Non-tempered classes, other than the host's own quotient, that survive
    // the support and sign screens for d([1/2,b]) |x (signed wide class on
    // (a,c)): two for the plus sign, one for the minus sign.
    std::vector<GAtom> enumerate_nontempered(bool plus) const;

    // Composition ledgers of the three kernel hosts plus their mirrors.
    KernelLedgers kernel_ledgers();

    // The eleven-class composition ledger of the wide two-factor host,
    // assembled from the kernel ledgers with shared classes counted once.
    RGSum main_decomposition();

    // True when the given row term appears exactly once among the host's
    // comultiplication rows: the reciprocity certificate for a unique
    // irreducible subrepresentation. Throws std::runtime_error when the
    // count cannot be pinned to one side of 1.
    bool unique_sub_check(const InducedExpr& ambient, const GLTerm& witness_gl,
                          const InducedExpr& witness_rest);

    // Layer lists (bottom first) for the four kernel hosts and their
    // factor-flipped mirrors; mirror stacks are exact reverses.
    std::map<std::string, LayerStructure> layer_structures() const;

    // The four-step coarsening of the wide host's composition series:
    // layer sizes [2,4,4,1], disjoint, summing to main_decomposition().
    std::vector<RGSum> filtration();

private:
    CheckParams params_;
    JacquetEngine engine_;
    std::set<std::string> inconclusive_;
};

// One-shot convenience wrapper over Checker::verify_lemma.
CheckResult verify_lemma(const std::string& id, HalfInt a, HalfInt b, HalfInt c);

}  // namespace jmcalc
