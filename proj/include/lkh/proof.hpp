#ifndef LKH_PROOF_HPP
#define LKH_PROOF_HPP

#include <memory>
#include <vector>

#include "lkh/errors.hpp"
#include "lkh/sequent.hpp"

namespace lkh {

enum class RuleTag {
    Ax, AxBot, AxTop,
    LNot, RNot,
    LAnd, RAnd, LOr, ROr, LImp, RImp,
    LExists, RExists, LForall, RForall,
    Cut,
};

const char* to_string(RuleTag tag);
std::size_t premise_arity(RuleTag tag);
bool is_strong_quantifier(RuleTag tag);
bool is_weak_quantifier(RuleTag tag);

// Payload of an inference: the principal formula (absent for Cut), the
// instantiating witness term for the weak quantifier rules, and the cut
// formula for Cut.
struct RulePayload {
    FormulaPtr principal;
    TermPtr witness;
    FormulaPtr cut_formula;

    static RulePayload for_principal(FormulaPtr p) { return {std::move(p), nullptr, nullptr}; }
    static RulePayload for_witness(FormulaPtr p, TermPtr t) {
        return {std::move(p), std::move(t), nullptr};
    }
    static RulePayload for_cut(FormulaPtr a) { return {nullptr, nullptr, std::move(a)}; }
};

class ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;

class ProofNode {
public:
    static ProofPtr make(Sequent conclusion, RuleTag tag, RulePayload payload,
                         std::vector<ProofPtr> premises);

    const Sequent& conclusion() const { return conclusion_; }
    RuleTag tag() const { return tag_; }
    const RulePayload& payload() const { return payload_; }
    const std::vector<ProofPtr>& premises() const { return premises_; }

private:
    ProofNode() = default;

    Sequent conclusion_;
    RuleTag tag_ = RuleTag::Ax;
    RulePayload payload_;
    std::vector<ProofPtr> premises_;
};

struct ProofStats {
    std::size_t length = 0;    // number of sequents in the tree
    std::size_t height = 0;    // nodes along a maximal branch (axiom = 1)
    std::size_t cut_rank = 0;  // sup of cut-formula depths, 0 iff cut-free
};

// Tree-semantics metrics; shared subtrees are counted per occurrence.
ProofStats stats(const ProofPtr& root);
bool is_cut_free(const ProofPtr& root);

// Structural equality of proof trees (conclusions, tags, payloads, premises).
bool proof_equal(const ProofPtr& a, const ProofPtr& b);

// The node at `path` (premise indices from the root); throws on bad paths.
ProofPtr node_at(const ProofPtr& root, const NodePath& path);

// Multiset of cut formulas appearing in the tree.
void collect_cut_formulas(const ProofPtr& root, std::vector<FormulaPtr>& out);

}  // namespace lkh

#endif
