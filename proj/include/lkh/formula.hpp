#ifndef LKH_FORMULA_HPP
#define LKH_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "lkh/term.hpp"

namespace lkh {

// Immutable first-order semiformula over {true, false, not, and, or, imp,
// exists, forall}. Equality is syntactic identity: Exists("x", P(x)) and
// Exists("y", P(y)) are distinct formulas.
class Formula : public std::enable_shared_from_this<Formula> {
public:
    enum class Kind { Atom, Top, Bot, Not, And, Or, Imp, Exists, Forall };

    static FormulaPtr atom(std::string pred, std::vector<TermPtr> args);
    static FormulaPtr top();
    static FormulaPtr bot();
    static FormulaPtr lnot(FormulaPtr f);
    static FormulaPtr land(FormulaPtr l, FormulaPtr r);
    static FormulaPtr lor(FormulaPtr l, FormulaPtr r);
    static FormulaPtr imp(FormulaPtr l, FormulaPtr r);
    static FormulaPtr exists(std::string var, FormulaPtr body);
    static FormulaPtr forall(std::string var, FormulaPtr body);
    static FormulaPtr quantifier(Kind k, std::string var, FormulaPtr body);

    Kind kind() const { return kind_; }
    bool is_atom() const { return kind_ == Kind::Atom; }
    bool is_quantifier() const { return kind_ == Kind::Exists || kind_ == Kind::Forall; }
    bool is_binary() const {
        return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Imp;
    }

    const std::string& pred() const { return name_; }
    const std::vector<TermPtr>& args() const { return args_; }
    const FormulaPtr& left() const { return left_; }
    const FormulaPtr& right() const { return right_; }
    // Operand of Not, body of a quantifier.
    const FormulaPtr& body() const { return left_; }
    const std::string& var() const { return name_; }

    bool closed() const { return free_vars_.empty(); }
    // Sorted, deduplicated free variable names.
    const std::vector<std::string>& free_vars() const { return free_vars_; }
    bool has_free(const std::string& v) const;

    std::size_t hash() const { return hash_; }

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    Formula() = default;

    Kind kind_ = Kind::Top;
    std::string name_;          // predicate name or bound variable
    std::vector<TermPtr> args_;
    FormulaPtr left_, right_;
    std::vector<std::string> free_vars_;
    std::size_t hash_ = 0;
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);
int compare(const FormulaPtr& a, const FormulaPtr& b);

}  // namespace lkh

#endif
