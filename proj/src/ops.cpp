#include "lkh/ops.hpp"

#include <algorithm>
#include <map>

#include "lkh/errors.hpp"

namespace lkh {

std::size_t depth(const FormulaPtr& f) {
    switch (f->kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return 1;
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return depth(f->body()) + 1;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            return std::max(depth(f->left()), depth(f->right())) + 1;
    }
    return 1;
}

TermPtr substitute(const TermPtr& s, const std::string& x, const TermPtr& t) {
    if (!t->closed()) throw LkhError("substitute: substituted term must be closed");
    switch (s->kind()) {
        case Term::Kind::Var:
            return s->name() == x ? t : s;
        case Term::Kind::PureConst:
        case Term::Kind::HenkinConst:
            return s;  // Henkin indices are closed, x cannot occur there
        case Term::Kind::App: {
            bool changed = false;
            std::vector<TermPtr> args;
            args.reserve(s->args().size());
            for (const auto& a : s->args()) {
                auto a2 = substitute(a, x, t);
                changed = changed || a2 != a;
                args.push_back(std::move(a2));
            }
            return changed ? Term::app(s->name(), std::move(args)) : s;
        }
    }
    return s;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const TermPtr& t) {
    if (!t->closed()) throw LkhError("substitute: substituted term must be closed");
    if (!f->has_free(x)) return f;
    switch (f->kind()) {
        case Formula::Kind::Atom: {
            std::vector<TermPtr> args;
            args.reserve(f->args().size());
            for (const auto& a : f->args()) args.push_back(substitute(a, x, t));
            return Formula::atom(f->pred(), std::move(args));
        }
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return f;
        case Formula::Kind::Not:
            return Formula::lnot(substitute(f->body(), x, t));
        case Formula::Kind::And:
            return Formula::land(substitute(f->left(), x, t), substitute(f->right(), x, t));
        case Formula::Kind::Or:
            return Formula::lor(substitute(f->left(), x, t), substitute(f->right(), x, t));
        case Formula::Kind::Imp:
            return Formula::imp(substitute(f->left(), x, t), substitute(f->right(), x, t));
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            if (f->var() == x) return f;  // shadowed; unreachable given has_free
            return Formula::quantifier(f->kind(), f->var(), substitute(f->body(), x, t));
    }
    return f;
}

std::size_t henkin_rank(const TermPtr& c) {
    if (!c->is_henkin()) throw LkhError("henkin_rank: not a Henkin constant");
    std::vector<TermPtr> inner;
    collect_henkin_constants(c->index(), inner);
    std::size_t best = 0;
    for (const auto& b : inner) best = std::max(best, henkin_rank(b));
    return best + 1;
}

// --- deep occurrence / replacement -----------------------------------------

bool deep_occurs(const TermPtr& r, const TermPtr& e) {
    if (equal(r, e)) return true;
    switch (e->kind()) {
        case Term::Kind::App:
            for (const auto& a : e->args())
                if (deep_occurs(r, a)) return true;
            return false;
        case Term::Kind::HenkinConst:
            return deep_occurs(r, e->index());
        default:
            return false;
    }
}

bool deep_occurs(const TermPtr& r, const FormulaPtr& e) {
    switch (e->kind()) {
        case Formula::Kind::Atom:
            for (const auto& a : e->args())
                if (deep_occurs(r, a)) return true;
            return false;
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return false;
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return deep_occurs(r, e->body());
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            return deep_occurs(r, e->left()) || deep_occurs(r, e->right());
    }
    return false;
}

std::size_t deep_occurrence_count(const TermPtr& r, const TermPtr& e) {
    if (equal(r, e)) return 1;  // maximal occurrence; nothing inside is rescanned
    switch (e->kind()) {
        case Term::Kind::App: {
            std::size_t n = 0;
            for (const auto& a : e->args()) n += deep_occurrence_count(r, a);
            return n;
        }
        case Term::Kind::HenkinConst:
            return deep_occurrence_count(r, e->index());
        default:
            return 0;
    }
}

std::size_t deep_occurrence_count(const TermPtr& r, const FormulaPtr& e) {
    switch (e->kind()) {
        case Formula::Kind::Atom: {
            std::size_t n = 0;
            for (const auto& a : e->args()) n += deep_occurrence_count(r, a);
            return n;
        }
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return 0;
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return deep_occurrence_count(r, e->body());
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            return deep_occurrence_count(r, e->left()) + deep_occurrence_count(r, e->right());
    }
    return 0;
}

TermPtr deep_replace(const TermPtr& e, const TermPtr& r, const TermPtr& s) {
    if (!r->closed() || !s->closed())
        throw LkhError("deep_replace: replacement terms must be closed");
    if (equal(e, r)) return s;  // maximal occurrence, no rescan of s
    switch (e->kind()) {
        case Term::Kind::App: {
            bool changed = false;
            std::vector<TermPtr> args;
            args.reserve(e->args().size());
            for (const auto& a : e->args()) {
                auto a2 = deep_replace(a, r, s);
                changed = changed || a2 != a;
                args.push_back(std::move(a2));
            }
            return changed ? Term::app(e->name(), std::move(args)) : e;
        }
        case Term::Kind::HenkinConst: {
            auto idx = deep_replace(e->index(), r, s);
            return idx == e->index() ? e : Term::henkin(e->polarity(), idx);
        }
        default:
            return e;
    }
}

FormulaPtr deep_replace(const FormulaPtr& e, const TermPtr& r, const TermPtr& s) {
    switch (e->kind()) {
        case Formula::Kind::Atom: {
            bool changed = false;
            std::vector<TermPtr> args;
            args.reserve(e->args().size());
            for (const auto& a : e->args()) {
                auto a2 = deep_replace(a, r, s);
                changed = changed || a2 != a;
                args.push_back(std::move(a2));
            }
            return changed ? Formula::atom(e->pred(), std::move(args)) : e;
        }
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return e;
        case Formula::Kind::Not: {
            auto b = deep_replace(e->body(), r, s);
            return b == e->body() ? e : Formula::lnot(b);
        }
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp: {
            auto l = deep_replace(e->left(), r, s);
            auto rr = deep_replace(e->right(), r, s);
            if (l == e->left() && rr == e->right()) return e;
            if (e->kind() == Formula::Kind::And) return Formula::land(l, rr);
            if (e->kind() == Formula::Kind::Or) return Formula::lor(l, rr);
            return Formula::imp(l, rr);
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            auto b = deep_replace(e->body(), r, s);
            return b == e->body() ? e : Formula::quantifier(e->kind(), e->var(), b);
        }
    }
    return e;
}

// --- purity ------------------------------------------------------------------

bool is_pure(const TermPtr& e) {
    switch (e->kind()) {
        case Term::Kind::HenkinConst:
            return false;
        case Term::Kind::App:
            for (const auto& a : e->args())
                if (!is_pure(a)) return false;
            return true;
        default:
            return true;
    }
}

bool is_pure(const FormulaPtr& e) {
    switch (e->kind()) {
        case Formula::Kind::Atom:
            for (const auto& a : e->args())
                if (!is_pure(a)) return false;
            return true;
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return true;
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return is_pure(e->body());
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            return is_pure(e->left()) && is_pure(e->right());
    }
    return true;
}

void collect_henkin_constants(const TermPtr& e, std::vector<TermPtr>& out) {
    switch (e->kind()) {
        case Term::Kind::HenkinConst:
            out.push_back(e);
            break;
        case Term::Kind::App:
            for (const auto& a : e->args()) collect_henkin_constants(a, out);
            break;
        default:
            break;
    }
}

void collect_henkin_constants(const FormulaPtr& e, std::vector<TermPtr>& out) {
    switch (e->kind()) {
        case Formula::Kind::Atom:
            for (const auto& a : e->args()) collect_henkin_constants(a, out);
            break;
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            break;
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            collect_henkin_constants(e->body(), out);
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            collect_henkin_constants(e->left(), out);
            collect_henkin_constants(e->right(), out);
            break;
    }
}

// --- Gentzen subformula ------------------------------------------------------

namespace {

// One-sided matching of a ground expression against a pattern with named
// holes. Bindings must be consistent and closed.
using Bindings = std::map<std::string, TermPtr>;

bool match_term(const TermPtr& ground, const TermPtr& pat,
                const std::vector<std::string>& holes, Bindings& b);

bool is_hole(const std::string& name, const std::vector<std::string>& holes) {
    return std::find(holes.begin(), holes.end(), name) != holes.end();
}

bool match_term(const TermPtr& ground, const TermPtr& pat,
                const std::vector<std::string>& holes, Bindings& b) {
    if (pat->is_var() && is_hole(pat->name(), holes)) {
        if (!ground->closed()) return false;
        auto it = b.find(pat->name());
        if (it != b.end()) return equal(it->second, ground);
        b.emplace(pat->name(), ground);
        return true;
    }
    if (ground->kind() != pat->kind()) return false;
    switch (pat->kind()) {
        case Term::Kind::Var:
        case Term::Kind::PureConst:
            return ground->name() == pat->name();
        case Term::Kind::HenkinConst:
            // Indices are closed: holes cannot occur inside; exact identity.
            return equal(ground, pat);
        case Term::Kind::App: {
            if (ground->name() != pat->name() || ground->args().size() != pat->args().size())
                return false;
            for (std::size_t i = 0; i < pat->args().size(); ++i)
                if (!match_term(ground->args()[i], pat->args()[i], holes, b)) return false;
            return true;
        }
    }
    return false;
}

bool match_formula(const FormulaPtr& ground, const FormulaPtr& pat,
                   std::vector<std::string> holes, Bindings& b) {
    if (ground->kind() != pat->kind()) return false;
    switch (pat->kind()) {
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return true;
        case Formula::Kind::Atom: {
            if (ground->pred() != pat->pred() || ground->args().size() != pat->args().size())
                return false;
            for (std::size_t i = 0; i < pat->args().size(); ++i)
                if (!match_term(ground->args()[i], pat->args()[i], holes, b)) return false;
            return true;
        }
        case Formula::Kind::Not:
            return match_formula(ground->body(), pat->body(), holes, b);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            return match_formula(ground->left(), pat->left(), holes, b) &&
                   match_formula(ground->right(), pat->right(), holes, b);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            if (ground->var() != pat->var()) return false;  // no alpha-conversion
            // The binder shadows a hole of the same name.
            holes.erase(std::remove(holes.begin(), holes.end(), pat->var()), holes.end());
            return match_formula(ground->body(), pat->body(), holes, b);
        }
    }
    return false;
}

// DFS over the subformula skeleton of `a`, accumulating quantifier holes.
bool gentzen_search(const FormulaPtr& b, const FormulaPtr& pos,
                    std::vector<std::string>& holes) {
    Bindings bind;
    if (match_formula(b, pos, holes, bind)) return true;
    switch (pos->kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return false;
        case Formula::Kind::Not:
            return gentzen_search(b, pos->body(), holes);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            return gentzen_search(b, pos->left(), holes) ||
                   gentzen_search(b, pos->right(), holes);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            bool shadowed = is_hole(pos->var(), holes);
            if (!shadowed) holes.push_back(pos->var());
            bool found = gentzen_search(b, pos->body(), holes);
            if (!shadowed) holes.pop_back();
            return found;
        }
    }
    return false;
}

}  // namespace

bool is_gentzen_subformula(const FormulaPtr& b, const FormulaPtr& a) {
    std::vector<std::string> holes;
    return gentzen_search(b, a, holes);
}

std::optional<TermPtr> match_instance(const FormulaPtr& instance, const FormulaPtr& pattern,
                                      const std::string& hole) {
    Bindings b;
    if (!match_formula(instance, pattern, {hole}, b)) return std::nullopt;
    auto it = b.find(hole);
    if (it == b.end()) return TermPtr{};  // hole not free in pattern
    return it->second;
}

// --- arithmetic ---------------------------------------------------------------

std::uint64_t superexp(std::uint64_t n, std::uint64_t x) {
    std::uint64_t v = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (v >= 64) throw OverflowError("superexp(" + std::to_string(n) + ", " +
                                         std::to_string(x) + ") exceeds 64 bits");
        v = std::uint64_t{1} << v;
    }
    return v;
}

bool superexp_geq(std::uint64_t n, std::uint64_t x, std::uint64_t v) {
    std::uint64_t cur = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (cur >= 64) return true;  // tower exceeds any 64-bit value
        cur = std::uint64_t{1} << cur;
    }
    return cur >= v;
}

bool less_than_pow2(std::uint64_t v, std::uint64_t h) {
    if (h >= 64) return true;
    return v < (std::uint64_t{1} << h);
}

std::uint64_t monus(std::uint64_t x, std::uint64_t y) { return x >= y ? x - y : 0; }

// --- sizes ---------------------------------------------------------------------

std::size_t deep_size(const TermPtr& t) {
    switch (t->kind()) {
        case Term::Kind::Var:
        case Term::Kind::PureConst:
            return 1;
        case Term::Kind::HenkinConst:
            return 1 + deep_size(t->index());
        case Term::Kind::App: {
            std::size_t n = 1;
            for (const auto& a : t->args()) n += deep_size(a);
            return n;
        }
    }
    return 1;
}

std::size_t deep_size(const FormulaPtr& f) {
    switch (f->kind()) {
        case Formula::Kind::Atom: {
            std::size_t n = 1;
            for (const auto& a : f->args()) n += deep_size(a);
            return n;
        }
        case Formula::Kind::Top:
        case Formula::Kind::Bot:
            return 1;
        case Formula::Kind::Not:
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return 1 + deep_size(f->body());
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Imp:
            return 1 + deep_size(f->left()) + deep_size(f->right());
    }
    return 1;
}

}  // namespace lkh
