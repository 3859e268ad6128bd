#ifndef LKH_SEQUENT_HPP
#define LKH_SEQUENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lkh/formula.hpp"

namespace lkh {

// A finite multiset of formulas kept sorted under the structural order, so
// equality is order-insensitive and serialization is canonical.
class Cedent {
public:
    Cedent() = default;
    explicit Cedent(std::vector<FormulaPtr> fs);

    const std::vector<FormulaPtr>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    std::size_t count(const FormulaPtr& f) const;
    bool contains(const FormulaPtr& f) const { return count(f) > 0; }

    Cedent add(const FormulaPtr& f) const;
    Cedent add_all(const std::vector<FormulaPtr>& fs) const;
    // Removes one occurrence; throws LkhError if absent.
    Cedent remove_one(const FormulaPtr& f) const;
    // Removes every occurrence.
    Cedent remove_all(const FormulaPtr& f) const;
    // Multiset sum.
    Cedent sum(const Cedent& other) const;
    // Multiset difference (counts saturate at zero).
    Cedent diff(const Cedent& other) const;

    // Every element of this multiset occurs in `other` (support inclusion,
    // multiplicities ignored) — the paper's Γ ⊆ Π.
    bool support_subset_of(const Cedent& other) const;
    // Multiset inclusion counting multiplicities.
    bool multiset_subset_of(const Cedent& other) const;

    friend bool operator==(const Cedent& a, const Cedent& b);
    friend bool operator!=(const Cedent& a, const Cedent& b) { return !(a == b); }

private:
    std::vector<FormulaPtr> items_;  // sorted by compare()
};

struct Sequent {
    Cedent ante;
    Cedent succ;

    Sequent() = default;
    Sequent(Cedent a, Cedent s) : ante(std::move(a)), succ(std::move(s)) {}
    Sequent(std::vector<FormulaPtr> a, std::vector<FormulaPtr> s)
        : ante(std::move(a)), succ(std::move(s)) {}

    bool closed() const;
    bool pure() const;

    friend bool operator==(const Sequent& a, const Sequent& b) {
        return a.ante == b.ante && a.succ == b.succ;
    }
    friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
};

bool deep_occurs(const TermPtr& r, const Sequent& s);

}  // namespace lkh

#endif
