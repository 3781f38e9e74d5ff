"""Two-sided division with remainder: f = remainder + sum of c * (u*g*v).

Divisors are drawn only from the supplied generating set.  All leading
coefficients must be units, which makes the divisibility test purely
combinatorial (leading-word factor containment) and keeps every
inversion legal over the ground ring.  The remainder is "G-normal": none
of its words contains a leading word of the set as a contiguous factor.
When the set is a verified Groebner basis this normal form is unique and
independent of the divisor-selection strategy.

Termination is guaranteed because the working leading monomial strictly
decreases in a well order; the step budget is a defensive guard against
engine bugs, not expected behavior.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BudgetExceeded, NotAGroebnerBasis, NotUnital
from .poly import Poly, ensure_same_algebra

DEFAULT_STEP_BUDGET = 10 ** 6


class FirstMatch:
    """Deterministic choice: lowest generator index, then leftmost factor."""

    def __repr__(self):
        return "first"


@dataclass(frozen=True)
class Seeded:
    """Uniform random choice among all (generator, position) matches,
    reproducible from the seed."""

    seed: int

    def __repr__(self):
        return f"seeded:{self.seed}"


FIRST_MATCH = FirstMatch()


def parse_strategy(text):
    """Strategy from CLI text: "first" or "seeded:<n>"."""
    text = text.strip()
    if text == "first":
        return FIRST_MATCH
    if text.startswith("seeded:"):
        tail = text[len("seeded:"):]
        try:
            return Seeded(int(tail))
        except ValueError:
            raise ValueError(f"bad seed in strategy {text!r}") from None
    raise ValueError(f"unknown strategy {text!r} (expected first or seeded:<n>)")


class GenSet:
    """An ordered set of nonzero generators in one algebra.

    Carries a per-generator record of which leading coefficients are
    units; operations that invert leading coefficients insist on all of
    them being units.  The Groebner verdict for the set is computed on
    demand and cached (the set itself is immutable).
    """

    __slots__ = ("algebra", "gens", "unit_leads", "lead_words", "_inv_leads", "_report")

    def __init__(self, gens, algebra=None):
        gens = tuple(gens)
        if algebra is None:
            if not gens:
                raise ValueError("an empty generating set needs an explicit algebra")
            algebra = gens[0].algebra
        for g in gens:
            ensure_same_algebra(algebra, g.algebra)
            if g.is_zero():
                raise ValueError("zero polynomial in generating set")
        self.algebra = algebra
        self.gens = gens
        ring = algebra.ring
        self.unit_leads = tuple(ring.is_unit(g.lc()) for g in gens)
        self.lead_words = tuple(g.lm() for g in gens)
        self._inv_leads = tuple(
            ring.inv_unit(g.lc()) if unit else None
            for g, unit in zip(gens, self.unit_leads)
        )
        self._report = None

    @property
    def is_unital(self):
        return all(self.unit_leads)

    def require_unital(self):
        if not self.is_unital:
            bad = [i for i, unit in enumerate(self.unit_leads) if not unit]
            raise NotUnital(
                f"leading coefficients of generators {bad} are not units "
                f"in {self.algebra.ring}"
            )

    def groebner_report(self):
        """Cached Buchberger verdict for this set."""
        if self._report is None:
            from .spolys import check_groebner

            check_groebner(self)
        return self._report

    def is_groebner(self):
        from .spolys import GBVerdict

        return self.groebner_report().verdict is GBVerdict.IS_GROEBNER

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def __repr__(self):
        return f"GenSet({list(self.gens)})"


@dataclass(frozen=True)
class DivisionStep:
    """One rewrite: subtract coeff * (left * gens[gen] * right)."""

    coeff: object
    left: tuple
    gen: int
    right: tuple


@dataclass(frozen=True)
class DivisionTrace:
    """Full record of one division run.

    Invariant: dividend == remainder + sum of the recorded steps, and the
    remainder words carry no leading word of the set as a factor.
    """

    dividend: Poly
    gens: GenSet
    steps: tuple
    peeled: tuple
    remainder: Poly

    def ideal_part(self):
        total = self.gens.algebra.zero()
        for s in self.steps:
            total = total + self.gens[s.gen].scale(s.coeff, s.left, s.right)
        return total

    def reconstruct(self):
        return self.ideal_part() + self.remainder


def _first_match(lm_f, lead_words):
    for i, w in enumerate(lead_words):
        n = len(w)
        m = len(lm_f)
        for p in range(m - n + 1):
            if lm_f[p:p + n] == w:
                return i, lm_f[:p], lm_f[p + n:]
    return None


def _all_matches(lm_f, lead_words):
    out = []
    for i, w in enumerate(lead_words):
        n = len(w)
        m = len(lm_f)
        for p in range(m - n + 1):
            if lm_f[p:p + n] == w:
                out.append((i, lm_f[:p], lm_f[p + n:]))
    return out


def try_divide_step(f, G):
    """First applicable rewrite for the leading term of f, if any.

    Returns (gen_index, left, right, coeff) with
    coeff * LT(left * g * right) == LT(f), or None when no leading word
    of G divides LM(f).
    """
    G.require_unital()
    ensure_same_algebra(f.algebra, G.algebra)
    lc_f, lm_f = f.leading()
    match = _first_match(lm_f, G.lead_words)
    if match is None:
        return None
    i, u, v = match
    lam = G.algebra.ring.mul(lc_f, G._inv_leads[i])
    return i, u, v, lam


def divide(f, G, strategy=FIRST_MATCH, step_budget=DEFAULT_STEP_BUDGET):
    """Run the rewriting loop until the working polynomial is exhausted.

    Each iteration either peels the leading term into the remainder (no
    divisor matches) or subtracts a scaled generator context product that
    cancels it exactly.
    """
    G.require_unital()
    ensure_same_algebra(f.algebra, G.algebra)
    if step_budget <= 0:
        raise ValueError("step_budget must be positive")
    rng = random.Random(strategy.seed) if isinstance(strategy, Seeded) else None

    algebra = G.algebra
    ring = algebra.ring
    mul_words = algebra.oracle.mul_words
    key = algebra.order.key
    lead_words = G.lead_words
    inv_leads = G._inv_leads
    gen_terms = tuple(g.terms for g in G.gens)

    working = {w: c for c, w in f.terms}
    steps = []
    peeled = []
    prev_key = None
    iterations = 0
    while working:
        iterations += 1
        if iterations > step_budget:
            raise BudgetExceeded(f"division exceeded {step_budget} steps")
        lm_f = max(working, key=key)
        k = key(lm_f)
        assert prev_key is None or k < prev_key, "leading monomial failed to decrease"
        prev_key = k
        lc_f = working[lm_f]
        if rng is None:
            match = _first_match(lm_f, lead_words)
        else:
            matches = _all_matches(lm_f, lead_words)
            match = rng.choice(matches) if matches else None
        if match is None:
            peeled.append((lc_f, lm_f))
            del working[lm_f]
            continue
        i, u, v = match
        lam = ring.mul(lc_f, inv_leads[i])
        steps.append(DivisionStep(lam, u, i, v))
        for tc, tw in gen_terms[i]:
            w = mul_words(u, mul_words(tw, v))
            delta = ring.mul(lam, tc)
            cur = working.get(w)
            nc = ring.neg(delta) if cur is None else ring.sub(cur, delta)
            if ring.is_zero(nc):
                working.pop(w, None)
            else:
                working[w] = nc
        assert lm_f not in working, "leading term failed to cancel"
    remainder = Poly(algebra, tuple(peeled))
    return DivisionTrace(f, G, tuple(steps), tuple(peeled), remainder)


def normal_form(f, G, strict=True):
    """The unique remainder of f modulo a verified Groebner basis.

    With ``strict=False`` the division still runs, but the result is only
    G-normal: reduced with respect to the given set, with no uniqueness
    claim unless the set actually is a Groebner basis.
    """
    if strict:
        from .spolys import GBVerdict

        report = G.groebner_report()
        if report.verdict is not GBVerdict.IS_GROEBNER:
            raise NotAGroebnerBasis(
                f"generating set verdict is {report.verdict.value}; "
                "pass strict=False for a G-normal remainder"
            )
    return divide(f, G, FIRST_MATCH).remainder
