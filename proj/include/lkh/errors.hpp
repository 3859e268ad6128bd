#ifndef LKH_ERRORS_HPP
#define LKH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lkh {

// Path from the root of a proof tree: premise indices, outermost first.
using NodePath = std::vector<std::size_t>;

std::string path_to_string(const NodePath& path);

struct LkhError : std::runtime_error {
    explicit LkhError(const std::string& msg) : std::runtime_error(msg) {}
};

// --- calculus -------------------------------------------------------------

enum class RuleErrorKind {
    SchemaMismatch,
    NonAtomicAxiom,
    WrongHenkinConstant,
    ContextMismatch,
};

const char* to_string(RuleErrorKind kind);

struct RuleError : LkhError {
    RuleErrorKind kind;
    std::string detail;
    RuleError(RuleErrorKind k, const std::string& d)
        : LkhError(std::string(to_string(k)) + ": " + d), kind(k), detail(d) {}
};

struct CheckError : LkhError {
    RuleErrorKind kind;
    NodePath path;
    std::string detail;
    CheckError(RuleErrorKind k, NodePath p, const std::string& d)
        : LkhError(std::string(to_string(k)) + " at [" + path_to_string(p) + "]: " + d),
          kind(k), path(std::move(p)), detail(d) {}
};

// --- transformations ------------------------------------------------------

struct InclusionViolated : LkhError {
    NodePath path;
    explicit InclusionViolated(const std::string& d, NodePath p = {})
        : LkhError("inclusion violated at [" + path_to_string(p) + "]: " + d), path(std::move(p)) {}
};

struct TargetAbsent : LkhError {
    explicit TargetAbsent(const std::string& d) : LkhError("inversion target absent: " + d) {}
};

struct WeakQuantifierTarget : LkhError {
    explicit WeakQuantifierTarget(const std::string& d)
        : LkhError("weak quantifier rules are not invertible: " + d) {}
};

struct NonInvariantNode : LkhError {
    NodePath path;
    explicit NonInvariantNode(NodePath p, const std::string& d = "")
        : LkhError("non-invariant rule at [" + path_to_string(p) + "]" + (d.empty() ? "" : ": " + d)),
          path(std::move(p)) {}
};

// --- cut elimination ------------------------------------------------------

struct NonPureEndsequent : LkhError {
    explicit NonPureEndsequent(const std::string& d)
        : LkhError("endsequent is not pure: " + d) {}
};

struct AlreadyCutFree : LkhError {
    AlreadyCutFree() : LkhError("proof is already cut-free") {}
};

struct NotQuasiregular : LkhError {
    explicit NotQuasiregular(const std::string& d) : LkhError("proof is not quasiregular: " + d) {}
};

struct PreconditionViolated : LkhError {
    explicit PreconditionViolated(const std::string& clause)
        : LkhError("reduction precondition violated: " + clause) {}
};

struct BoundViolated : LkhError {
    explicit BoundViolated(const std::string& d) : LkhError("stated bound exceeded: " + d) {}
};

// --- skolem ---------------------------------------------------------------

struct SymbolClash : LkhError {
    explicit SymbolClash(const std::string& d) : LkhError("symbol clash: " + d) {}
};

struct NotFreeError : LkhError {
    NodePath path;
    explicit NotFreeError(NodePath p, const std::string& d)
        : LkhError("proof not free for the Skolem function at [" + path_to_string(p) + "]: " + d),
          path(std::move(p)) {}
};

struct EndsequentShapeMismatch : LkhError {
    explicit EndsequentShapeMismatch(const std::string& d)
        : LkhError("endsequent shape mismatch: " + d) {}
};

struct CutRankRegression : LkhError {
    explicit CutRankRegression(const std::string& d) : LkhError("cut-rank regression: " + d) {}
};

// --- arithmetic / syntax ----------------------------------------------------

struct OverflowError : LkhError {
    explicit OverflowError(const std::string& d) : LkhError("arithmetic overflow: " + d) {}
};

struct ParseError : LkhError {
    int line;
    int col;
    ParseError(int l, int c, const std::string& d)
        : LkhError("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + d),
          line(l), col(c) {}
};

}  // namespace lkh

#endif
