#ifndef LKH_TRANSFORM_HPP
#define LKH_TRANSFORM_HPP

#include <utility>
#include <vector>

#include "lkh/check.hpp"
#include "lkh/proof.hpp"

namespace lkh {

// Weakening/contraction (Lemma 6.2 shape): given support inclusions
// ante(pi) <= pi_ante and succ(pi) <= pi_succ, produces a structurally
// similar proof of the target sequent. Throws InclusionViolated when the
// inclusion fails, or (with a path) when the rebuild meets a node whose
// principal formula the target can no longer host.
ProofPtr weaken(const ProofPtr& pi, const Sequent& target);
ProofPtr weaken(const ProofPtr& pi, std::vector<FormulaPtr> ante,
                std::vector<FormulaPtr> succ);

enum class InvKind {
    LImp,      // both components
    LImpLeft,  // component Gamma => Delta, A
    LImpRight, // component B, Gamma => Delta
    RImp,
    LAnd,
    ROr,
    RAndLeft,
    RAndRight,
    LOrLeft,
    LOrRight,
    LNot,
    RNot,
    LExists,
    RForall,
};

struct InversionTarget {
    InvKind kind;
    FormulaPtr formula;
};

// Height/length/cut-rank-preserving inversion (Lemma 6.4). Returns two
// proofs for InvKind::LImp, one otherwise. The LExists/RForall outputs are
// free for the Henkin constant of the target formula.
std::vector<ProofPtr> invert(const ProofPtr& pi, const InversionTarget& target);

// Cut inversion (Lemma 7.2): from pi |- G => D builds rho |- G => D, A and
// sigma |- A, G => D, both without cuts on A, with heights <= |pi| and
// cut-formula sets included in those of pi.
std::pair<ProofPtr, ProofPtr> invert_cut(const ProofPtr& pi, const FormulaPtr& a);

// No strong quantifier rule in pi has the constant's index as principal
// formula (Definition 6.3).
bool is_free_for_constant(const ProofPtr& pi, const TermPtr& c);

// Semantic invariance of a single inference under the deep replacement
// {r/s}: the replaced rule is schema-valid with the same tag and the image
// payload (Section 6.6).
bool is_invariant_rule(const ProofNode& node, const TermPtr& r, const TermPtr& s);

// The sufficient condition of the Section 6.6 remark, decided per node.
bool sufficient_invariance(const ProofNode& node, const TermPtr& r);

// Replacement lemma (6.7): rebuilds pi under {r/s}; requires every node to
// be invariant, preserves length exactly.
ProofPtr replace_in_proof(const ProofPtr& pi, const TermPtr& r, const TermPtr& s);

Sequent replace_in_sequent(const Sequent& s, const TermPtr& r, const TermPtr& t);

namespace detail {

// Rebuilds the tree against a new conclusion, premise targets forced by the
// rule schemata. The workhorse behind weakening, strengthening and the
// inversion pipeline.
ProofPtr rebuild_to(const ProofPtr& node, const Sequent& target);

// Adds fixed context formulas to every sequent of the tree.
ProofPtr extend(const ProofPtr& node, const std::vector<FormulaPtr>& extra_ante,
                const std::vector<FormulaPtr>& extra_succ);

}  // namespace detail

}  // namespace lkh

#endif
