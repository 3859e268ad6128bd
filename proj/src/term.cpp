#include "lkh/term.hpp"

#include <algorithm>

#include "lkh/errors.hpp"
#include "lkh/formula.hpp"

namespace lkh {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_string(const std::string& s) { return std::hash<std::string>{}(s); }

}  // namespace

TermPtr Term::var(std::string name) {
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = Kind::Var;
    t->name_ = std::move(name);
    t->closed_ = false;
    t->hash_ = hash_combine(1, hash_string(t->name_));
    return t;
}

TermPtr Term::pure_const(std::string name) {
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = Kind::PureConst;
    t->name_ = std::move(name);
    t->closed_ = true;
    t->hash_ = hash_combine(2, hash_string(t->name_));
    return t;
}

TermPtr Term::henkin(Polarity pol, FormulaPtr index) {
    if (!index) throw LkhError("henkin: null index");
    if (!index->closed()) throw LkhError("henkin: index formula must be closed");
    if (pol == Polarity::Witness && index->kind() != Formula::Kind::Exists)
        throw LkhError("henkin: witness constant requires an existential index");
    if (pol == Polarity::Counterexample && index->kind() != Formula::Kind::Forall)
        throw LkhError("henkin: counterexample constant requires a universal index");
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = Kind::HenkinConst;
    t->polarity_ = pol;
    t->index_ = std::move(index);
    t->closed_ = true;
    t->hash_ = hash_combine(pol == Polarity::Witness ? 3 : 4, t->index_->hash());
    return t;
}

TermPtr Term::app(std::string fn, std::vector<TermPtr> args) {
    auto t = std::shared_ptr<Term>(new Term());
    t->kind_ = Kind::App;
    t->name_ = std::move(fn);
    t->args_ = std::move(args);
    t->closed_ = true;
    std::size_t h = hash_combine(5, hash_string(t->name_));
    for (const auto& a : t->args_) {
        if (!a) throw LkhError("app: null argument");
        t->closed_ = t->closed_ && a->closed();
        h = hash_combine(h, a->hash());
    }
    t->hash_ = h;
    return t;
}

const std::string& Term::index_var() const {
    if (!is_henkin()) throw LkhError("index_var: not a Henkin constant");
    return index_->var();
}

const FormulaPtr& Term::index_matrix() const {
    if (!is_henkin()) throw LkhError("index_matrix: not a Henkin constant");
    return index_->body();
}

bool operator==(const Term& a, const Term& b) {
    if (&a == &b) return true;
    if (a.hash_ != b.hash_ || a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case Term::Kind::Var:
        case Term::Kind::PureConst:
            return a.name_ == b.name_;
        case Term::Kind::HenkinConst:
            return a.polarity_ == b.polarity_ && *a.index_ == *b.index_;
        case Term::Kind::App: {
            if (a.name_ != b.name_ || a.args_.size() != b.args_.size()) return false;
            for (std::size_t i = 0; i < a.args_.size(); ++i)
                if (!(*a.args_[i] == *b.args_[i])) return false;
            return true;
        }
    }
    return false;
}

bool equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

int compare(const TermPtr& a, const TermPtr& b) {
    if (a == b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    auto rank = [](Term::Kind k) {
        switch (k) {
            case Term::Kind::Var: return 0;
            case Term::Kind::PureConst: return 1;
            case Term::Kind::App: return 2;
            case Term::Kind::HenkinConst: return 3;
        }
        return 4;
    };
    if (rank(a->kind()) != rank(b->kind())) return rank(a->kind()) < rank(b->kind()) ? -1 : 1;
    switch (a->kind()) {
        case Term::Kind::Var:
        case Term::Kind::PureConst:
            return a->name().compare(b->name());
        case Term::Kind::HenkinConst: {
            if (a->polarity() != b->polarity())
                return a->polarity() == Polarity::Witness ? -1 : 1;
            return compare(a->index(), b->index());
        }
        case Term::Kind::App: {
            if (int c = a->name().compare(b->name())) return c < 0 ? -1 : 1;
            if (a->args().size() != b->args().size())
                return a->args().size() < b->args().size() ? -1 : 1;
            for (std::size_t i = 0; i < a->args().size(); ++i)
                if (int c = compare(a->args()[i], b->args()[i])) return c;
            return 0;
        }
    }
    return 0;
}

}  // namespace lkh
