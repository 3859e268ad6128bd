#ifndef LKH_CHECK_HPP
#define LKH_CHECK_HPP

#include <optional>

#include "lkh/proof.hpp"

namespace lkh {

// The Henkin constant belonging to a quantifier formula: the witness for an
// existential formula, the counterexample for a universal one.
TermPtr henkin_constant_of(const FormulaPtr& quantified);

// The exact premise sequents demanded by the rule schema for the given
// conclusion and payload. Throws RuleError when the conclusion itself cannot
// host the rule (missing principal, non-atomic axiom, malformed payload).
std::vector<Sequent> premise_targets(RuleTag tag, const RulePayload& payload,
                                     const Sequent& conclusion);

// Strictly local validity of a single inference: depends only on the tag,
// payload, premise sequents and conclusion sequent.
void check_rule(const ProofNode& node);  // throws RuleError

// Full check; returns the metrics. Errors carry the path of the failing node
// (leftmost-innermost first).
ProofStats check_proof(const ProofPtr& root);  // throws CheckError

struct SubformulaViolation {
    NodePath path;
    FormulaPtr formula;
};

// Theorem-7.9-style verification: every formula of every sequent must be a
// Gentzen subformula of some endsequent formula. Guaranteed to hold for
// cut-free proofs.
std::optional<SubformulaViolation> subformula_property(const ProofPtr& root);

}  // namespace lkh

#endif
