#include "dunamis/propositions.hpp"

#include "dunamis/errors.hpp"

namespace dunamis {

namespace {

std::string str(const Natural& n) { return n.to_string(); }
std::string str(const Ratio& r) { return r.to_string(); }

void add_dichotomy(ProofTrace& trace, const Natural& n) {
    const IntegerClass cls = classify(n);
    if (const auto* sq = std::get_if<Square>(&cls)) {
        trace.add(Tag::Dichotomy, str(n) + " is a square number with side " + str(sq->side),
                  {{"n", n}, {"side", sq->side}});
    } else {
        const auto& ob = std::get<Oblong>(cls);
        trace.add(Tag::Dichotomy,
                  str(n) + " is an oblong number, " + str(ob.small) + "×" + str(ob.large) +
                      "; no equal-sided rectangle has this area",
                  {{"n", n}, {"small", ob.small}, {"large", ob.large}});
    }
}

// Shared by deciders: sqrt(num/den) = u/v in lowest terms forces num = u^2
// and den = v^2, which fails at the given non-square term.
void add_integrality_refutation(ProofTrace& trace, const Ratio& r) {
    const bool num_square = is_perfect_square(r.num());
    const Natural& bad = num_square ? r.den() : r.num();
    const Natural floor_root = isqrt(bad).root;
    std::string statement = "a root u/v in lowest terms would give " + str(r) +
                            " = u²/v² with (u²,v²) least (VII.24), so by minimality " + str(r.num()) +
                            " = u² and " + str(r.den()) + " = v²";
    if (r.is_whole()) {
        statement += ", i.e. v²=1 and the root would be whole";
    }
    statement += "; but " + str(bad) + " lies strictly between " + str(floor_root * floor_root) + " and " +
                 str((floor_root + Natural{}) * (floor_root + Natural{})) + ", so it is no square";
    trace.add(Tag::Integrality, std::move(statement), {{"ratio", r}, {"term", bad}, {"floor_root", floor_root}});
}

}  // namespace

const Ratio& Decision::root() const {
    if (const auto* r = std::get_if<RationalRoot>(&verdict)) {
        return r->root;
    }
    throw PreconditionError("verdict is irrational; there is no rational root");
}

Decision prop_a_decide(const Natural& n) {
    Decision d{Irrational{}, {}};
    add_dichotomy(d.trace, n);
    const auto [root, exact] = isqrt(n);
    if (exact) {
        const Ratio q = Ratio::of(root);
        d.verdict = RationalRoot{q};
        d.trace.add(Tag::PropA, "√" + str(n) + " = " + str(q) + " is rational since " + str(n) + " is a perfect square",
                    {{"n", n}, {"root", q}});
        return d;
    }
    add_integrality_refutation(d.trace, Ratio::of(n));
    d.trace.add(Tag::PropA, "√" + str(n) + " is irrational since " + str(n) + " is not a perfect square",
                {{"n", n}, {"power", sqrt_of_integer(n)}});
    return d;
}

LemmaResult integrality_lemma(const Natural& m, const Natural& n) {
    if (!gcd(m, n).is_unit()) {
        throw PreconditionError("integrality lemma needs coprime terms, got " + str(m) + ", " + str(n));
    }
    LemmaResult out;
    auto& t = out.trace;
    const Ratio least(m, n);
    t.add(Tag::VII_22, str(m) + " and " + str(n) + " are prime to one another, so " + str(least) +
                           " is the least pair in its ratio",
          {{"m", m}, {"n", n}});
    const Ratio squares = square_ratio(least);
    t.add(Tag::VII_24, "their squares " + str(squares.num()) + " and " + str(squares.den()) +
                           " are again prime to one another",
          {{"m²", squares.num()}, {"n²", squares.den()}});
    out.integral = squares.den().is_unit();
    if (out.integral) {
        t.add(Tag::VII_20, "the least pair " + str(squares) + " measures " + str(squares.num()) + ":1 once",
              {{"r", squares.num()}, {"n²", squares.den()}});
        t.add(Tag::Integrality, "m²/n² = " + str(squares.num()) + " is a whole number, n²=1",
              {{"r", squares.num()}});
    } else {
        t.add(Tag::VII_20, "a whole r with r:1 = " + str(squares) + " would be measured by the least pair, so " +
                               str(squares.den()) + " would divide 1",
              {{"n²", squares.den()}});
        t.add(Tag::Integrality, "m²/n² = " + str(squares) + " is not a whole number since n²=" +
                                    str(squares.den()) + " > 1",
              {{"m²", squares.num()}, {"n²", squares.den()}});
    }
    return out;
}

ProofTrace prop_a_certify(const Natural& r, const Natural& claim_num, const Natural& claim_den) {
    const Natural lhs = claim_num * claim_num;
    const Natural rhs = r * claim_den * claim_den;
    if (lhs != rhs) {
        throw FalseClaim("claim false: " + str(lhs) + " ≠ " + str(rhs));
    }
    ProofTrace t;
    const Natural g = gcd(claim_num, claim_den);
    const Ratio least = reduce(claim_num, claim_den);
    t.add(Tag::VII_22, str(claim_num) + "/" + str(claim_den) + " reduces to the least pair " + str(least) +
                           " on dividing by " + str(g),
          {{"num", claim_num}, {"den", claim_den}, {"gcd", g}, {"m", least.num()}, {"n", least.den()}});
    const Ratio squares = square_ratio(least);
    t.add(Tag::VII_24, "m²=" + str(squares.num()) + " and n²=" + str(squares.den()) + " are prime to one another",
          {{"m²", squares.num()}, {"n²", squares.den()}});
    // r:1 and m²:n² are the same ratio; the least pair measures (r, 1) k times.
    const Natural k = vii20_divides(r, Natural{});
    if (!same_ratio(r, Natural{}, squares.num(), squares.den()) || reduce(r, Natural{}) != squares || !k.is_unit()) {
        throw InvariantViolation("certification chain broke at VII.20 for r = " + str(r));
    }
    t.add(Tag::VII_20, str(r) + ":1 = " + str(squares) + " and the least pair measures both terms " + str(k) +
                           " time(s), so n²=1 and " + str(r) + " = m²",
          {{"r", r}, {"m²", squares.num()}, {"n²", squares.den()}, {"k", k}});
    t.add(Tag::PropA, str(r) + " is a perfect square with side " + str(least.num()),
          {{"r", r}, {"side", least.num()}});
    return t;
}

Decision prop_b_decide(const Ratio& r) {
    Decision d{Irrational{}, {}};
    d.trace.add(Tag::VII_22, str(r) + " is held as its least pair", {{"ratio", r}});
    if (is_square_to_square(r)) {
        const Natural p = isqrt(r.num()).root;
        const Natural q = isqrt(r.den()).root;
        const Ratio root(p, q);
        d.trace.add(Tag::VII_24, str(p) + "², " + str(q) + "² are the squares of a coprime pair",
                    {{"u", p}, {"v", q}});
        d.trace.add(Tag::X_9, str(r) + " is as a square number to a square number, so √(" + str(r) + ") = " +
                                  str(root) + " is commensurable in length with the unit",
                    {{"ratio", r}, {"root", root}});
        d.verdict = RationalRoot{root};
        return d;
    }
    add_integrality_refutation(d.trace, r);
    d.trace.add(Tag::X_9, str(r) + " is not as a square number to a square number, so √(" + str(r) +
                              ") is incommensurable in length with the unit",
                {{"ratio", r}, {"power", sqrt_of_ratio(r)}});
    return d;
}

bool prop_a_prime(const Natural& n) { return isqrt(n).exact; }

GapWitness gap_witness(const Natural& n) {
    GapWitness g;
    const Decision b = prop_b_decide(Ratio::of(n));
    g.prop_a_square = is_perfect_square(n);
    if (b.is_rational()) g.prop_b_root = b.root();
    if (g.prop_b_root.has_value() != g.prop_a_square) {
        throw InvariantViolation("X.9 and Prop A disagree on " + str(n));
    }
    std::string& rep = g.report;
    rep += "n: " + str(n) + "\n";
    if (g.prop_b_root) {
        rep += "X.9 on " + str(Ratio::of(n)) + ": square of rational " + str(*g.prop_b_root) + "\n";
    } else {
        rep += "X.9 on " + str(Ratio::of(n)) + ": not square of a rational\n";
    }
    rep += "PROP-A on " + str(n) + ": perfect square " + (g.prop_a_square ? "true" : "false") + "\n";
    rep += "bridge: ";
    rep += to_string(g.bridge);
    rep += " (X.9 speaks of squares of rationals; only the integrality lemma turns that into a statement about "
           "perfect squares)\n";
    return g;
}

LessonReport theodorus_lesson() {
    LessonReport out;
    for (unsigned k = kLessonFirst; k < kLessonEnd; k += kLessonStep) {
        const Natural n(k);
        const Surd s = sqrt_of_integer(n);
        if (auto q = is_rational(s)) {
            out.entries.push_back({n, WholeRoot{q->num()}});
        } else {
            out.entries.push_back({n, Power{s}});
        }
    }
    return out;
}

IntegerPartition partition_integers(const Natural& limit) {
    IntegerPartition out;
    for (Natural n; n <= limit; n += Natural{}) {
        (is_perfect_square(n) ? out.squares : out.oblongs).push_back(n);
    }
    return out;
}

}  // namespace dunamis
