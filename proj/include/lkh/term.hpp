#ifndef LKH_TERM_HPP
#define LKH_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lkh {

enum class SymbolKind { Function, Predicate, PureConstant };

struct Symbol {
    std::string name;
    unsigned arity = 0;
    SymbolKind kind = SymbolKind::Function;
};

// Polarity of a Henkin constant: a witness belongs to an existential index
// formula, a counterexample to a universal one.
enum class Polarity { Witness, Counterexample };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable first-order semiterm. Henkin constants carry their full index
// formula (the quantified formula they belong to); identity is structural
// with no alpha-conversion anywhere.
class Term : public std::enable_shared_from_this<Term> {
public:
    enum class Kind { Var, PureConst, HenkinConst, App };

    static TermPtr var(std::string name);
    static TermPtr pure_const(std::string name);
    // `index` must be a closed Exists formula (witness) or Forall formula
    // (counterexample); throws LkhError otherwise.
    static TermPtr henkin(Polarity pol, FormulaPtr index);
    static TermPtr app(std::string fn, std::vector<TermPtr> args);

    Kind kind() const { return kind_; }
    bool is_var() const { return kind_ == Kind::Var; }
    bool is_pure_const() const { return kind_ == Kind::PureConst; }
    bool is_henkin() const { return kind_ == Kind::HenkinConst; }
    bool is_app() const { return kind_ == Kind::App; }

    // Var / PureConst / App name.
    const std::string& name() const { return name_; }
    const std::vector<TermPtr>& args() const { return args_; }

    Polarity polarity() const { return polarity_; }
    // The full index formula QxA of a Henkin constant.
    const FormulaPtr& index() const { return index_; }
    // Bound variable and matrix of the index.
    const std::string& index_var() const;
    const FormulaPtr& index_matrix() const;

    bool closed() const { return closed_; }
    std::size_t hash() const { return hash_; }

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    Term() = default;

    Kind kind_ = Kind::Var;
    std::string name_;
    std::vector<TermPtr> args_;
    Polarity polarity_ = Polarity::Witness;
    FormulaPtr index_;
    bool closed_ = false;
    std::size_t hash_ = 0;
};

bool equal(const TermPtr& a, const TermPtr& b);
// Total structural order; deterministic across runs (no pointers involved).
int compare(const TermPtr& a, const TermPtr& b);

}  // namespace lkh

#endif
