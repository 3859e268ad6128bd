#include "lkh/check.hpp"

#include <unordered_set>

#include "lkh/ops.hpp"

namespace lkh {

const char* to_string(RuleErrorKind kind) {
    switch (kind) {
        case RuleErrorKind::SchemaMismatch: return "schema mismatch";
        case RuleErrorKind::NonAtomicAxiom: return "non-atomic axiom";
        case RuleErrorKind::WrongHenkinConstant: return "wrong Henkin constant";
        case RuleErrorKind::ContextMismatch: return "context mismatch";
    }
    return "?";
}

TermPtr henkin_constant_of(const FormulaPtr& quantified) {
    if (quantified->kind() == Formula::Kind::Exists)
        return Term::henkin(Polarity::Witness, quantified);
    if (quantified->kind() == Formula::Kind::Forall)
        return Term::henkin(Polarity::Counterexample, quantified);
    throw LkhError("henkin_constant_of: not a quantifier formula");
}

namespace {

FormulaPtr require_principal(const RulePayload& p, RuleTag tag) {
    if (!p.principal)
        throw RuleError(RuleErrorKind::SchemaMismatch,
                        std::string(to_string(tag)) + " needs a principal formula");
    return p.principal;
}

void require_kind(const FormulaPtr& f, Formula::Kind k, RuleTag tag) {
    if (f->kind() != k)
        throw RuleError(RuleErrorKind::SchemaMismatch,
                        std::string("principal of ") + to_string(tag) +
                            " has the wrong top connective");
}

void require_in(const Cedent& c, const FormulaPtr& f, const char* where) {
    if (!c.contains(f))
        throw RuleError(RuleErrorKind::SchemaMismatch,
                        std::string("principal formula missing from the ") + where);
}

// Instance of the quantifier body at term t.
FormulaPtr instance(const FormulaPtr& quantified, const TermPtr& t) {
    return substitute(quantified->body(), quantified->var(), t);
}

}  // namespace

std::vector<Sequent> premise_targets(RuleTag tag, const RulePayload& payload,
                                     const Sequent& conclusion) {
    const Cedent& ante = conclusion.ante;
    const Cedent& succ = conclusion.succ;
    switch (tag) {
        case RuleTag::Ax: {
            auto p = require_principal(payload, tag);
            if (p->kind() != Formula::Kind::Atom)
                throw RuleError(RuleErrorKind::NonAtomicAxiom,
                                "Ax principal must be an atomic formula");
            require_in(ante, p, "antecedent");
            require_in(succ, p, "succedent");
            return {};
        }
        case RuleTag::AxBot: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Bot, tag);
            require_in(ante, p, "antecedent");
            return {};
        }
        case RuleTag::AxTop: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Top, tag);
            require_in(succ, p, "succedent");
            return {};
        }
        case RuleTag::LNot: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Not, tag);
            require_in(ante, p, "antecedent");
            return {Sequent(ante.remove_one(p), succ.add(p->body()))};
        }
        case RuleTag::RNot: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Not, tag);
            require_in(succ, p, "succedent");
            return {Sequent(ante.add(p->body()), succ.remove_one(p))};
        }
        case RuleTag::LAnd: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::And, tag);
            require_in(ante, p, "antecedent");
            return {Sequent(ante.remove_one(p).add(p->left()).add(p->right()), succ)};
        }
        case RuleTag::RAnd: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::And, tag);
            require_in(succ, p, "succedent");
            Cedent rest = succ.remove_one(p);
            return {Sequent(ante, rest.add(p->left())), Sequent(ante, rest.add(p->right()))};
        }
        case RuleTag::LOr: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Or, tag);
            require_in(ante, p, "antecedent");
            Cedent rest = ante.remove_one(p);
            return {Sequent(rest.add(p->left()), succ), Sequent(rest.add(p->right()), succ)};
        }
        case RuleTag::ROr: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Or, tag);
            require_in(succ, p, "succedent");
            return {Sequent(ante, succ.remove_one(p).add(p->left()).add(p->right()))};
        }
        case RuleTag::LImp: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Imp, tag);
            require_in(ante, p, "antecedent");
            Cedent rest = ante.remove_one(p);
            return {Sequent(rest, succ.add(p->left())), Sequent(rest.add(p->right()), succ)};
        }
        case RuleTag::RImp: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Imp, tag);
            require_in(succ, p, "succedent");
            return {Sequent(ante.add(p->left()), succ.remove_one(p).add(p->right()))};
        }
        case RuleTag::LExists: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Exists, tag);
            require_in(ante, p, "antecedent");
            auto c = henkin_constant_of(p);
            return {Sequent(ante.remove_one(p).add(instance(p, c)), succ)};
        }
        case RuleTag::RForall: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Forall, tag);
            require_in(succ, p, "succedent");
            auto c = henkin_constant_of(p);
            return {Sequent(ante, succ.remove_one(p).add(instance(p, c)))};
        }
        case RuleTag::RExists: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Exists, tag);
            require_in(succ, p, "succedent");
            if (!payload.witness)
                throw RuleError(RuleErrorKind::SchemaMismatch, "RExists needs a witness term");
            // Principal is retained in the premise.
            return {Sequent(ante, succ.add(instance(p, payload.witness)))};
        }
        case RuleTag::LForall: {
            auto p = require_principal(payload, tag);
            require_kind(p, Formula::Kind::Forall, tag);
            require_in(ante, p, "antecedent");
            if (!payload.witness)
                throw RuleError(RuleErrorKind::SchemaMismatch, "LForall needs a witness term");
            return {Sequent(ante.add(instance(p, payload.witness)), succ)};
        }
        case RuleTag::Cut: {
            if (!payload.cut_formula)
                throw RuleError(RuleErrorKind::SchemaMismatch, "Cut needs a cut formula");
            auto a = payload.cut_formula;
            return {Sequent(ante, succ.add(a)), Sequent(ante.add(a), succ)};
        }
    }
    throw RuleError(RuleErrorKind::SchemaMismatch, "unknown rule tag");
}

namespace {

// Distinguishes a wrong-Henkin-constant premise from a general mismatch for
// precise diagnostics on strong quantifier rules.
void diagnose_strong_mismatch(const ProofNode& node, const Sequent& target,
                              const Sequent& actual) {
    const auto& p = node.payload().principal;
    bool left = node.tag() == RuleTag::LExists;
    const Cedent& target_side = left ? target.ante : target.succ;
    const Cedent& actual_side = left ? actual.ante : actual.succ;
    const Cedent& target_other = left ? target.succ : target.ante;
    const Cedent& actual_other = left ? actual.succ : actual.ante;
    if (target_other == actual_other) {
        auto c = henkin_constant_of(p);
        auto expected_minor = substitute(p->body(), p->var(), c);
        Cedent context = target_side.remove_one(expected_minor);
        if (context.multiset_subset_of(actual_side)) {
            Cedent extra = actual_side.diff(context);
            if (extra.size() == 1) {
                auto got = extra.items()[0];
                auto u = match_instance(got, p->body(), p->var());
                if (u && *u && !equal(*u, c))
                    throw RuleError(RuleErrorKind::WrongHenkinConstant,
                                    "strong quantifier premise instantiates " + p->var() +
                                        " with a term whose index is not the principal formula");
            }
        }
    }
}

// The formula a two-premise rule adds to premise `i` on top of the shared
// context, and the side it lives on (true = antecedent).
std::pair<FormulaPtr, bool> active_part(const ProofNode& node, std::size_t i) {
    switch (node.tag()) {
        case RuleTag::Cut:
            return {node.payload().cut_formula, i == 1};
        case RuleTag::RAnd:
            return {i == 0 ? node.payload().principal->left()
                           : node.payload().principal->right(), false};
        case RuleTag::LOr:
            return {i == 0 ? node.payload().principal->left()
                           : node.payload().principal->right(), true};
        case RuleTag::LImp:
            return {i == 0 ? node.payload().principal->left()
                           : node.payload().principal->right(), i == 1};
        default:
            return {nullptr, false};
    }
}

void check_premise_match(const ProofNode& node, const std::vector<Sequent>& targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const Sequent& actual = node.premises()[i]->conclusion();
        const Sequent& target = targets[i];
        if (actual == target) continue;
        if (is_strong_quantifier(node.tag())) diagnose_strong_mismatch(node, target, actual);
        // Two-premise rules share the context verbatim; when the active
        // formula is present but the rest disagrees, report the context.
        if (premise_arity(node.tag()) == 2) {
            auto [active, on_left] = active_part(node, i);
            const Cedent& side = on_left ? actual.ante : actual.succ;
            if (active && side.contains(active))
                throw RuleError(RuleErrorKind::ContextMismatch,
                                std::string("premise ") + std::to_string(i) + " of " +
                                    to_string(node.tag()) +
                                    " does not share the conclusion's context");
        }
        throw RuleError(RuleErrorKind::SchemaMismatch,
                        std::string("premise ") + std::to_string(i) + " of " +
                            to_string(node.tag()) + " does not match the rule schema");
    }
}

}  // namespace

void check_rule(const ProofNode& node) {
    auto targets = premise_targets(node.tag(), node.payload(), node.conclusion());
    if (targets.size() != node.premises().size())
        throw RuleError(RuleErrorKind::SchemaMismatch, "premise arity mismatch");
    check_premise_match(node, targets);
}

namespace {

void check_rec(const ProofPtr& node, NodePath& path,
               std::unordered_set<const ProofNode*>& ok) {
    if (ok.count(node.get())) return;
    for (std::size_t i = 0; i < node->premises().size(); ++i) {
        path.push_back(i);
        check_rec(node->premises()[i], path, ok);
        path.pop_back();
    }
    try {
        check_rule(*node);
    } catch (const RuleError& e) {
        throw CheckError(e.kind, path, e.detail);
    }
    ok.insert(node.get());
}

}  // namespace

ProofStats check_proof(const ProofPtr& root) {
    if (!root) throw LkhError("check_proof: null proof");
    NodePath path;
    std::unordered_set<const ProofNode*> ok;
    check_rec(root, path, ok);
    return stats(root);
}

namespace {

bool is_endsequent_subformula(const FormulaPtr& f, const Sequent& endsequent) {
    for (const auto& g : endsequent.ante.items())
        if (is_gentzen_subformula(f, g)) return true;
    for (const auto& g : endsequent.succ.items())
        if (is_gentzen_subformula(f, g)) return true;
    return false;
}

std::optional<SubformulaViolation> subformula_rec(const ProofPtr& node,
                                                  const Sequent& endsequent,
                                                  NodePath& path) {
    for (const auto& f : node->conclusion().ante.items())
        if (!is_endsequent_subformula(f, endsequent))
            return SubformulaViolation{path, f};
    for (const auto& f : node->conclusion().succ.items())
        if (!is_endsequent_subformula(f, endsequent))
            return SubformulaViolation{path, f};
    for (std::size_t i = 0; i < node->premises().size(); ++i) {
        path.push_back(i);
        auto v = subformula_rec(node->premises()[i], endsequent, path);
        if (v) return v;
        path.pop_back();
    }
    return std::nullopt;
}

}  // namespace

std::optional<SubformulaViolation> subformula_property(const ProofPtr& root) {
    NodePath path;
    return subformula_rec(root, root->conclusion(), path);
}

}  // namespace lkh
