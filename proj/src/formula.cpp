#include "lkh/formula.hpp"

#include <algorithm>

#include "lkh/errors.hpp"

namespace lkh {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_string(const std::string& s) { return std::hash<std::string>{}(s); }

void term_free_vars(const TermPtr& t, std::vector<std::string>& out) {
    switch (t->kind()) {
        case Term::Kind::Var:
            out.push_back(t->name());
            break;
        case Term::Kind::App:
            for (const auto& a : t->args()) term_free_vars(a, out);
            break;
        default:
            break;  // constants are closed; Henkin indices are closed
    }
}

void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

FormulaPtr Formula::atom(std::string pred, std::vector<TermPtr> args) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::Atom;
    f->name_ = std::move(pred);
    f->args_ = std::move(args);
    std::size_t h = hash_combine(11, hash_string(f->name_));
    for (const auto& a : f->args_) {
        if (!a) throw LkhError("atom: null argument");
        h = hash_combine(h, a->hash());
        term_free_vars(a, f->free_vars_);
    }
    sort_unique(f->free_vars_);
    f->hash_ = h;
    return f;
}

FormulaPtr Formula::top() {
    static FormulaPtr instance = [] {
        auto f = std::shared_ptr<Formula>(new Formula());
        f->kind_ = Kind::Top;
        f->hash_ = 12;
        return f;
    }();
    return instance;
}

FormulaPtr Formula::bot() {
    static FormulaPtr instance = [] {
        auto f = std::shared_ptr<Formula>(new Formula());
        f->kind_ = Kind::Bot;
        f->hash_ = 13;
        return f;
    }();
    return instance;
}

FormulaPtr Formula::lnot(FormulaPtr body) {
    if (!body) throw LkhError("not: null operand");
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::Not;
    f->left_ = std::move(body);
    f->free_vars_ = f->left_->free_vars_;
    f->hash_ = hash_combine(14, f->left_->hash());
    return f;
}

namespace {
std::vector<std::string> merge_sorted(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
}  // namespace

FormulaPtr Formula::land(FormulaPtr l, FormulaPtr r) {
    if (!l || !r) throw LkhError("and: null operand");
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::And;
    f->left_ = std::move(l);
    f->right_ = std::move(r);
    f->free_vars_ = merge_sorted(f->left_->free_vars_, f->right_->free_vars_);
    f->hash_ = hash_combine(15, hash_combine(f->left_->hash(), f->right_->hash()));
    return f;
}

FormulaPtr Formula::lor(FormulaPtr l, FormulaPtr r) {
    if (!l || !r) throw LkhError("or: null operand");
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::Or;
    f->left_ = std::move(l);
    f->right_ = std::move(r);
    f->free_vars_ = merge_sorted(f->left_->free_vars_, f->right_->free_vars_);
    f->hash_ = hash_combine(16, hash_combine(f->left_->hash(), f->right_->hash()));
    return f;
}

FormulaPtr Formula::imp(FormulaPtr l, FormulaPtr r) {
    if (!l || !r) throw LkhError("imp: null operand");
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::Imp;
    f->left_ = std::move(l);
    f->right_ = std::move(r);
    f->free_vars_ = merge_sorted(f->left_->free_vars_, f->right_->free_vars_);
    f->hash_ = hash_combine(17, hash_combine(f->left_->hash(), f->right_->hash()));
    return f;
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
    return quantifier(Kind::Exists, std::move(var), std::move(body));
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
    return quantifier(Kind::Forall, std::move(var), std::move(body));
}

FormulaPtr Formula::quantifier(Kind k, std::string var, FormulaPtr body) {
    if (k != Kind::Exists && k != Kind::Forall) throw LkhError("quantifier: bad kind");
    if (!body) throw LkhError("quantifier: null body");
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = k;
    f->name_ = std::move(var);
    f->left_ = std::move(body);
    f->free_vars_ = f->left_->free_vars_;
    f->free_vars_.erase(
        std::remove(f->free_vars_.begin(), f->free_vars_.end(), f->name_),
        f->free_vars_.end());
    f->hash_ = hash_combine(k == Kind::Exists ? 18 : 19,
                            hash_combine(hash_string(f->name_), f->left_->hash()));
    return f;
}

bool Formula::has_free(const std::string& v) const {
    return std::binary_search(free_vars_.begin(), free_vars_.end(), v);
}

bool operator==(const Formula& a, const Formula& b) {
    if (&a == &b) return true;
    if (a.hash_ != b.hash_ || a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return true;
        case Formula::Kind::Atom: {
            if (a.name_ != b.name_ || a.args_.size() != b.args_.size()) return false;
            for (std::size_t i = 0; i < a.args_.size(); ++i)
                if (!(*a.args_[i] == *b.args_[i])) return false;
            return true;
        }
        case Formula::Kind::Not:
            return *a.left_ == *b.left_;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            return *a.left_ == *b.left_ && *a.right_ == *b.right_;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return a.name_ == b.name_ && *a.left_ == *b.left_;
    }
    return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

int compare(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    auto rank = [](Formula::Kind k) { return static_cast<int>(k); };
    if (rank(a->kind()) != rank(b->kind())) return rank(a->kind()) < rank(b->kind()) ? -1 : 1;
    switch (a->kind()) {
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return 0;
        case Formula::Kind::Atom: {
            if (int c = a->pred().compare(b->pred())) return c < 0 ? -1 : 1;
            if (a->args().size() != b->args().size())
                return a->args().size() < b->args().size() ? -1 : 1;
            for (std::size_t i = 0; i < a->args().size(); ++i)
                if (int c = compare(a->args()[i], b->args()[i])) return c;
            return 0;
        }
        case Formula::Kind::Not:
            return compare(a->body(), b->body());
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp: {
            if (int c = compare(a->left(), b->left())) return c;
            return compare(a->right(), b->right());
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            if (int c = a->var().compare(b->var())) return c < 0 ? -1 : 1;
            return compare(a->body(), b->body());
        }
    }
    return 0;
}

}  // namespace lkh
