#include "lkh/proof.hpp"

#include <algorithm>
#include <unordered_map>

#include "lkh/errors.hpp"
#include "lkh/ops.hpp"

namespace lkh {

const char* to_string(RuleTag tag) {
    switch (tag) {
        case RuleTag::Ax: return "Ax";
        case RuleTag::AxBot: return "AxBot";
        case RuleTag::AxTop: return "AxTop";
        case RuleTag::LNot: return "LNot";
        case RuleTag::RNot: return "RNot";
        case RuleTag::LAnd: return "LAnd";
        case RuleTag::RAnd: return "RAnd";
        case RuleTag::LOr: return "LOr";
        case RuleTag::ROr: return "ROr";
        case RuleTag::LImp: return "LImp";
        case RuleTag::RImp: return "RImp";
        case RuleTag::LExists: return "LExists";
        case RuleTag::RExists: return "RExists";
        case RuleTag::LForall: return "LForall";
        case RuleTag::RForall: return "RForall";
        case RuleTag::Cut: return "Cut";
    }
    return "?";
}

std::size_t premise_arity(RuleTag tag) {
    switch (tag) {
        case RuleTag::Ax:
        case RuleTag::AxBot:
        case RuleTag::AxTop:
            return 0;
        case RuleTag::RAnd:
        case RuleTag::LOr:
        case RuleTag::LImp:
        case RuleTag::Cut:
            return 2;
        default:
            return 1;
    }
}

bool is_strong_quantifier(RuleTag tag) {
    return tag == RuleTag::LExists || tag == RuleTag::RForall;
}

bool is_weak_quantifier(RuleTag tag) {
    return tag == RuleTag::RExists || tag == RuleTag::LForall;
}

ProofPtr ProofNode::make(Sequent conclusion, RuleTag tag, RulePayload payload,
                         std::vector<ProofPtr> premises) {
    if (premises.size() != premise_arity(tag))
        throw LkhError(std::string("proof node ") + to_string(tag) + ": expected " +
                       std::to_string(premise_arity(tag)) + " premises, got " +
                       std::to_string(premises.size()));
    for (const auto& p : premises)
        if (!p) throw LkhError("proof node: null premise");
    if (tag == RuleTag::Cut) {
        if (!payload.cut_formula || payload.principal)
            throw LkhError("proof node Cut: payload must carry exactly the cut formula");
    } else {
        if (!payload.principal || payload.cut_formula)
            throw LkhError(std::string("proof node ") + to_string(tag) +
                           ": payload must carry the principal formula");
    }
    if (is_weak_quantifier(tag)) {
        if (!payload.witness)
            throw LkhError(std::string("proof node ") + to_string(tag) + ": witness required");
        if (!payload.witness->closed())
            throw LkhError("proof node: witness term must be closed");
    } else if (payload.witness) {
        throw LkhError(std::string("proof node ") + to_string(tag) + ": unexpected witness");
    }
    auto n = std::shared_ptr<ProofNode>(new ProofNode());
    n->conclusion_ = std::move(conclusion);
    n->tag_ = tag;
    n->payload_ = std::move(payload);
    n->premises_ = std::move(premises);
    return n;
}

namespace {

struct NodeStats {
    std::size_t length;
    std::size_t height;
    std::size_t cut_rank;
};

// DAG-aware accumulation with tree semantics: shared pointers are memoized,
// results count occurrences as the tree would.
NodeStats stats_rec(const ProofNode* node,
                    std::unordered_map<const ProofNode*, NodeStats>& memo) {
    auto it = memo.find(node);
    if (it != memo.end()) return it->second;
    NodeStats s{1, 1, 0};
    if (node->tag() == RuleTag::Cut)
        s.cut_rank = depth(node->payload().cut_formula);
    std::size_t max_h = 0;
    for (const auto& p : node->premises()) {
        NodeStats ps = stats_rec(p.get(), memo);
        s.length += ps.length;
        max_h = std::max(max_h, ps.height);
        s.cut_rank = std::max(s.cut_rank, ps.cut_rank);
    }
    s.height += max_h;
    memo.emplace(node, s);
    return s;
}

}  // namespace

ProofStats stats(const ProofPtr& root) {
    if (!root) throw LkhError("stats: null proof");
    std::unordered_map<const ProofNode*, NodeStats> memo;
    NodeStats s = stats_rec(root.get(), memo);
    return ProofStats{s.length, s.height, s.cut_rank};
}

bool is_cut_free(const ProofPtr& root) {
    if (root->tag() == RuleTag::Cut) return false;
    for (const auto& p : root->premises())
        if (!is_cut_free(p)) return false;
    return true;
}

bool proof_equal(const ProofPtr& a, const ProofPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->tag() != b->tag()) return false;
    if (!(a->conclusion() == b->conclusion())) return false;
    if (!equal(a->payload().principal, b->payload().principal)) return false;
    if (!equal(a->payload().witness, b->payload().witness)) return false;
    if (!equal(a->payload().cut_formula, b->payload().cut_formula)) return false;
    if (a->premises().size() != b->premises().size()) return false;
    for (std::size_t i = 0; i < a->premises().size(); ++i)
        if (!proof_equal(a->premises()[i], b->premises()[i])) return false;
    return true;
}

ProofPtr node_at(const ProofPtr& root, const NodePath& path) {
    ProofPtr cur = root;
    for (std::size_t idx : path) {
        if (idx >= cur->premises().size()) throw LkhError("node_at: bad path");
        cur = cur->premises()[idx];
    }
    return cur;
}

void collect_cut_formulas(const ProofPtr& root, std::vector<FormulaPtr>& out) {
    if (root->tag() == RuleTag::Cut) out.push_back(root->payload().cut_formula);
    for (const auto& p : root->premises()) collect_cut_formulas(p, out);
}

std::string path_to_string(const NodePath& path) {
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(path[i]);
    }
    return s;
}

}  // namespace lkh
