// Shorthand constructors shared by the test suites.
#ifndef LKH_TESTS_BUILDERS_HPP
#define LKH_TESTS_BUILDERS_HPP

#include <string>
#include <vector>

#include "lkh/check.hpp"
#include "lkh/formula.hpp"
#include "lkh/ops.hpp"
#include "lkh/proof.hpp"
#include "lkh/term.hpp"

namespace lkh::testing {

inline TermPtr v(const std::string& name) { return Term::var(name); }
inline TermPtr k(const std::string& name) { return Term::pure_const(name); }
inline TermPtr fn(const std::string& name, std::vector<TermPtr> args) {
    return Term::app(name, std::move(args));
}
inline TermPtr wit(const FormulaPtr& index) { return Term::henkin(Polarity::Witness, index); }
inline TermPtr cex(const FormulaPtr& index) {
    return Term::henkin(Polarity::Counterexample, index);
}

inline FormulaPtr P(const std::string& pred, std::vector<TermPtr> args = {}) {
    return Formula::atom(pred, std::move(args));
}
inline FormulaPtr Top() { return Formula::top(); }
inline FormulaPtr Bot() { return Formula::bot(); }
inline FormulaPtr Not(FormulaPtr f) { return Formula::lnot(std::move(f)); }
inline FormulaPtr And(FormulaPtr l, FormulaPtr r) {
    return Formula::land(std::move(l), std::move(r));
}
inline FormulaPtr Or(FormulaPtr l, FormulaPtr r) {
    return Formula::lor(std::move(l), std::move(r));
}
inline FormulaPtr Imp(FormulaPtr l, FormulaPtr r) {
    return Formula::imp(std::move(l), std::move(r));
}
inline FormulaPtr Ex(const std::string& x, FormulaPtr body) {
    return Formula::exists(x, std::move(body));
}
inline FormulaPtr All(const std::string& x, FormulaPtr body) {
    return Formula::forall(x, std::move(body));
}

inline Sequent seq(std::vector<FormulaPtr> ante, std::vector<FormulaPtr> succ) {
    return Sequent(std::move(ante), std::move(succ));
}

inline ProofPtr ax(Sequent s, FormulaPtr principal) {
    return ProofNode::make(std::move(s), RuleTag::Ax,
                           RulePayload::for_principal(std::move(principal)), {});
}
inline ProofPtr ax_bot(Sequent s) {
    return ProofNode::make(std::move(s), RuleTag::AxBot, RulePayload::for_principal(Bot()), {});
}
inline ProofPtr ax_top(Sequent s) {
    return ProofNode::make(std::move(s), RuleTag::AxTop, RulePayload::for_principal(Top()), {});
}
inline ProofPtr rule1(RuleTag tag, Sequent s, FormulaPtr principal, ProofPtr premise) {
    return ProofNode::make(std::move(s), tag, RulePayload::for_principal(std::move(principal)),
                           {std::move(premise)});
}
inline ProofPtr rule2(RuleTag tag, Sequent s, FormulaPtr principal, ProofPtr p1, ProofPtr p2) {
    return ProofNode::make(std::move(s), tag, RulePayload::for_principal(std::move(principal)),
                           {std::move(p1), std::move(p2)});
}
inline ProofPtr weak(RuleTag tag, Sequent s, FormulaPtr principal, TermPtr witness,
                     ProofPtr premise) {
    return ProofNode::make(std::move(s), tag,
                           RulePayload::for_witness(std::move(principal), std::move(witness)),
                           {std::move(premise)});
}
inline ProofPtr cut(Sequent s, FormulaPtr a, ProofPtr left, ProofPtr right) {
    return ProofNode::make(std::move(s), RuleTag::Cut, RulePayload::for_cut(std::move(a)),
                           {std::move(left), std::move(right)});
}

// --- the paper's example proofs, used as fixtures throughout -----------------

struct Fixture51 {
    // Proof of => exists y forall x P(x,y) -> forall x exists y P(x,y); length 6.
    FormulaPtr exall, allex, goal;
    TermPtr a, b;
    ProofPtr proof;
};

inline Fixture51 fixture51() {
    Fixture51 fx;
    auto x = v("x"), y = v("y");
    fx.exall = Ex("y", All("x", P("P", {x, y})));
    fx.allex = All("x", Ex("y", P("P", {x, y})));
    fx.goal = Imp(fx.exall, fx.allex);
    fx.b = wit(fx.exall);                     // c_{exists y forall x P(x,y)}
    fx.a = cex(fx.allex);                     // c_{forall x exists y P(x,y)}
    auto Pab = P("P", {fx.a, fx.b});
    auto allPxb = All("x", P("P", {x, fx.b}));
    auto exPay = Ex("y", P("P", {fx.a, y}));
    auto n1 = ax(seq({Pab, allPxb}, {exPay, Pab}), Pab);
    auto n2 = weak(RuleTag::RExists, seq({Pab, allPxb}, {exPay}), exPay, fx.b, n1);
    auto n3 = weak(RuleTag::LForall, seq({allPxb}, {exPay}), allPxb, fx.a, n2);
    auto n4 = rule1(RuleTag::LExists, seq({fx.exall}, {exPay}), fx.exall, n3);
    auto n5 = rule1(RuleTag::RForall, seq({fx.exall}, {fx.allex}), fx.allex, n4);
    fx.proof = rule1(RuleTag::RImp, seq({}, {fx.goal}), fx.goal, n5);
    return fx;
}

struct Fixture52 {
    // Smullyan's drinker; length 5 (the weak existential is instantiated via
    // a duplicated instance so the tree has five sequents).
    FormulaPtr drinker;
    TermPtr a;
    ProofPtr proof;
};

inline Fixture52 fixture52() {
    Fixture52 fx;
    auto x = v("x"), y = v("y");
    auto allD = All("y", P("D", {y}));
    fx.drinker = Ex("x", Imp(P("D", {x}), allD));
    fx.a = cex(allD);  // c_{forall y D(y)}
    auto Da = P("D", {fx.a});
    auto inst = Imp(Da, allD);  // D(a) -> forall y D(y)
    auto n1 = ax(seq({Da}, {Da, fx.drinker, inst}), Da);
    auto n2 = rule1(RuleTag::RForall, seq({Da}, {allD, fx.drinker, inst}), allD, n1);
    auto n3 = rule1(RuleTag::RImp, seq({}, {inst, fx.drinker, inst}), inst, n2);
    auto n4 = weak(RuleTag::RExists, seq({}, {fx.drinker, inst}), fx.drinker, fx.a, n3);
    fx.proof = weak(RuleTag::RExists, seq({}, {fx.drinker}), fx.drinker, fx.a, n4);
    return fx;
}

struct Fixture53 {
    // Proof of => forall x exists y (exists z P(x,z) -> P(x,y)); length 5,
    // a single branch. The counterexample constant a occurs deeply in the
    // witnessing constant b.
    FormulaPtr goal;
    TermPtr a, b;
    ProofPtr proof;
};

inline Fixture53 fixture53() {
    Fixture53 fx;
    auto x = v("x"), y = v("y"), z = v("z");
    auto inner = [&](TermPtr t) {
        return Ex("y", Imp(Ex("z", P("P", {t, z})), P("P", {t, y})));
    };
    fx.goal = All("x", inner(x));
    fx.a = cex(fx.goal);                       // c_{forall x exists y (...)}
    auto exPaz = Ex("z", P("P", {fx.a, z}));
    fx.b = wit(exPaz);                         // c_{exists z P(a,z)}
    auto Pab = P("P", {fx.a, fx.b});
    auto exy = inner(fx.a);
    auto impb = Imp(exPaz, Pab);
    auto n1 = ax(seq({Pab}, {exy, Pab}), Pab);
    auto n2 = rule1(RuleTag::LExists, seq({exPaz}, {exy, Pab}), exPaz, n1);
    auto n3 = rule1(RuleTag::RImp, seq({}, {exy, impb}), impb, n2);
    auto n4 = weak(RuleTag::RExists, seq({}, {exy}), exy, fx.b, n3);
    fx.proof = rule1(RuleTag::RForall, seq({}, {fx.goal}), fx.goal, n4);
    return fx;
}

struct Fixture710 {
    // Proof of P(k) => P(a) with a cut on exists x P(x), a = c_{exists x P(x)}.
    // The endsequent is not pure; length 5, cut rank 2, the cut is critical.
    FormulaPtr exP;
    TermPtr a, kk;
    ProofPtr proof;
};

inline Fixture710 fixture710() {
    Fixture710 fx;
    auto x = v("x");
    fx.exP = Ex("x", P("P", {x}));
    fx.a = wit(fx.exP);
    fx.kk = k("k");
    auto Pk = P("P", {fx.kk});
    auto Pa = P("P", {fx.a});
    auto l1 = ax(seq({Pk}, {Pa, fx.exP, Pk}), Pk);
    auto l2 = weak(RuleTag::RExists, seq({Pk}, {Pa, fx.exP}), fx.exP, fx.kk, l1);
    auto r1 = ax(seq({Pa, Pk}, {Pa}), Pa);
    auto r2 = rule1(RuleTag::LExists, seq({fx.exP, Pk}, {Pa}), fx.exP, r1);
    fx.proof = cut(seq({Pk}, {Pa}), fx.exP, l2, r2);
    return fx;
}

}  // namespace lkh::testing

#endif
