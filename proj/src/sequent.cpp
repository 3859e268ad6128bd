#include "lkh/sequent.hpp"

#include <algorithm>

#include "lkh/errors.hpp"
#include "lkh/ops.hpp"

namespace lkh {

namespace {
bool formula_less(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) < 0; }
}  // namespace

Cedent::Cedent(std::vector<FormulaPtr> fs) : items_(std::move(fs)) {
    for (const auto& f : items_)
        if (!f) throw LkhError("cedent: null formula");
    std::sort(items_.begin(), items_.end(), formula_less);
}

std::size_t Cedent::count(const FormulaPtr& f) const {
    auto range = std::equal_range(items_.begin(), items_.end(), f, formula_less);
    return static_cast<std::size_t>(range.second - range.first);
}

Cedent Cedent::add(const FormulaPtr& f) const {
    Cedent out;
    out.items_.reserve(items_.size() + 1);
    auto pos = std::lower_bound(items_.begin(), items_.end(), f, formula_less);
    out.items_.insert(out.items_.end(), items_.begin(), pos);
    out.items_.push_back(f);
    out.items_.insert(out.items_.end(), pos, items_.end());
    return out;
}

Cedent Cedent::add_all(const std::vector<FormulaPtr>& fs) const {
    Cedent out = *this;
    for (const auto& f : fs) out = out.add(f);
    return out;
}

Cedent Cedent::remove_one(const FormulaPtr& f) const {
    auto pos = std::lower_bound(items_.begin(), items_.end(), f, formula_less);
    if (pos == items_.end() || !equal(*pos, f))
        throw LkhError("cedent: removing absent formula");
    Cedent out;
    out.items_.reserve(items_.size() - 1);
    out.items_.insert(out.items_.end(), items_.begin(), pos);
    out.items_.insert(out.items_.end(), pos + 1, items_.end());
    return out;
}

Cedent Cedent::remove_all(const FormulaPtr& f) const {
    auto range = std::equal_range(items_.begin(), items_.end(), f, formula_less);
    Cedent out;
    out.items_.reserve(items_.size());
    out.items_.insert(out.items_.end(), items_.begin(), range.first);
    out.items_.insert(out.items_.end(), range.second, items_.end());
    return out;
}

Cedent Cedent::sum(const Cedent& other) const {
    Cedent out;
    out.items_.reserve(items_.size() + other.items_.size());
    std::merge(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
               std::back_inserter(out.items_), formula_less);
    return out;
}

Cedent Cedent::diff(const Cedent& other) const {
    Cedent out = *this;
    for (const auto& f : other.items_) {
        if (out.contains(f)) out = out.remove_one(f);
    }
    return out;
}

bool Cedent::support_subset_of(const Cedent& other) const {
    for (const auto& f : items_)
        if (!other.contains(f)) return false;
    return true;
}

bool Cedent::multiset_subset_of(const Cedent& other) const {
    std::size_t i = 0;
    while (i < items_.size()) {
        std::size_t j = i;
        while (j < items_.size() && equal(items_[j], items_[i])) ++j;
        if (other.count(items_[i]) < j - i) return false;
        i = j;
    }
    return true;
}

bool operator==(const Cedent& a, const Cedent& b) {
    if (a.items_.size() != b.items_.size()) return false;
    for (std::size_t i = 0; i < a.items_.size(); ++i)
        if (!equal(a.items_[i], b.items_[i])) return false;
    return true;
}

bool Sequent::closed() const {
    for (const auto& f : ante.items())
        if (!f->closed()) return false;
    for (const auto& f : succ.items())
        if (!f->closed()) return false;
    return true;
}

bool Sequent::pure() const {
    for (const auto& f : ante.items())
        if (!is_pure(f)) return false;
    for (const auto& f : succ.items())
        if (!is_pure(f)) return false;
    return true;
}

bool deep_occurs(const TermPtr& r, const Sequent& s) {
    for (const auto& f : s.ante.items())
        if (deep_occurs(r, f)) return true;
    for (const auto& f : s.succ.items())
        if (deep_occurs(r, f)) return true;
    return false;
}

}  // namespace lkh
