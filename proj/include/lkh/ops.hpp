#ifndef LKH_OPS_HPP
#define LKH_OPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lkh/formula.hpp"
#include "lkh/term.hpp"

namespace lkh {

// Depth of the tree representation: 1 for atoms/true/false, +1 per unary
// connective or quantifier, max+1 for binary connectives.
std::size_t depth(const FormulaPtr& f);

// Substitution of every free occurrence of `x` by the closed term `t`.
// Rejects non-closed `t`; Henkin indices are closed and never descended into.
TermPtr substitute(const TermPtr& s, const std::string& x, const TermPtr& t);
FormulaPtr substitute(const FormulaPtr& f, const std::string& x, const TermPtr& t);

// Rank of a Henkin constant: 1 + max rank of Henkin constants occurring in
// its index (max over the empty set is 0). Rejects non-Henkin terms.
std::size_t henkin_rank(const TermPtr& c);

// Deep occurrence: ordinary occurrence, or occurrence inside the index of a
// Henkin constant occurring in the expression, recursively.
bool deep_occurs(const TermPtr& r, const TermPtr& e);
bool deep_occurs(const TermPtr& r, const FormulaPtr& e);
// Number of deep occurrence sites (maximal occurrences, counting sites inside
// Henkin indices).
std::size_t deep_occurrence_count(const TermPtr& r, const TermPtr& e);
std::size_t deep_occurrence_count(const TermPtr& r, const FormulaPtr& e);

// Deep replacement E{r/s}: every maximal deep occurrence of r replaced by s,
// outermost-first, without rescanning inserted copies of s.
TermPtr deep_replace(const TermPtr& e, const TermPtr& r, const TermPtr& s);
FormulaPtr deep_replace(const FormulaPtr& e, const TermPtr& r, const TermPtr& s);

// True iff no Henkin constant occurs in the expression.
bool is_pure(const TermPtr& e);
bool is_pure(const FormulaPtr& e);

// Collects every Henkin constant occurring (ordinarily) in the expression.
void collect_henkin_constants(const TermPtr& e, std::vector<TermPtr>& out);
void collect_henkin_constants(const FormulaPtr& e, std::vector<TermPtr>& out);

// Gentzen subformula: B is reachable from A by descending through
// connectives, passing at quantifiers to any closed instance of the body.
bool is_gentzen_subformula(const FormulaPtr& b, const FormulaPtr& a);

// Matches `instance` against `pattern` where every free occurrence of `hole`
// in `pattern` must correspond to one consistent closed term. Returns the
// matched term; nullopt when there is no match. When `hole` does not occur
// free, any equal pair matches and the result carries no term (nullptr).
std::optional<TermPtr> match_instance(const FormulaPtr& instance,
                                      const FormulaPtr& pattern,
                                      const std::string& hole);

// Superexponentiation 2_n^x: 2_0^x = x, 2_{n+1}^x = 2^(2_n^x).
// Throws OverflowError instead of wrapping.
std::uint64_t superexp(std::uint64_t n, std::uint64_t x);
// Saturating comparison: true iff 2_n^x >= v, usable even when the tower
// overflows 64 bits.
bool superexp_geq(std::uint64_t n, std::uint64_t x, std::uint64_t v);
// Saturating comparison v < 2^h for bound checks.
bool less_than_pow2(std::uint64_t v, std::uint64_t h);

// Modified subtraction: x - y if x >= y, else 0.
std::uint64_t monus(std::uint64_t x, std::uint64_t y);

// Size of a term counting also the interior of Henkin indices; a deep proper
// subterm always has strictly smaller deep size.
std::size_t deep_size(const TermPtr& t);
std::size_t deep_size(const FormulaPtr& f);

}  // namespace lkh

#endif
