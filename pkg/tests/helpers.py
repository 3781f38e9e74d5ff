"""Shared corpus builders and random generators for the test suite."""

from fractions import Fraction

from ugb import COMMUTATIVE, FREE, QQ, ZZ, Algebra, GenSet, LieAlgebra
from ugb.rings import IntegerRing, ModularRing, RationalField


def random_word(rng, n_letters, max_len, oracle=FREE, min_len=0):
    length = rng.randint(min_len, max_len)
    letters = [rng.randrange(n_letters) for _ in range(length)]
    if oracle is COMMUTATIVE or isinstance(oracle, type(COMMUTATIVE)):
        letters.sort()
    return tuple(letters)


def random_nonzero(rng, ring):
    if isinstance(ring, IntegerRing):
        c = 0
        while c == 0:
            c = rng.randint(-9, 9)
        return c
    if isinstance(ring, RationalField):
        num = 0
        while num == 0:
            num = rng.randint(-9, 9)
        return Fraction(num, rng.randint(1, 9))
    if isinstance(ring, ModularRing):
        return rng.randint(1, ring.modulus - 1)
    raise TypeError(f"no sampler for {ring}")


def random_unit(rng, ring):
    while True:
        c = random_nonzero(rng, ring)
        if ring.is_unit(c):
            return c


def random_poly(rng, algebra, max_deg=4, max_terms=5, nonzero=False):
    terms = []
    for _ in range(rng.randint(0 if not nonzero else 1, max_terms)):
        word = random_word(rng, algebra.alphabet.size, max_deg, algebra.oracle)
        terms.append((random_nonzero(rng, algebra.ring), word))
    p = algebra.poly(terms)
    if nonzero and p.is_zero():
        word = random_word(rng, algebra.alphabet.size, max_deg, algebra.oracle)
        p = algebra.poly([(random_nonzero(rng, algebra.ring), word)])
    return p


def random_unital_poly(rng, algebra, max_deg=3, max_terms=3):
    """Nonzero polynomial with a unit leading coefficient and a nonempty
    leading word (constant-led generators make the ideal everything)."""
    while True:
        p = random_poly(rng, algebra, max_deg, max_terms, nonzero=True)
        lc, lm = p.leading()
        if not lm:
            continue
        if algebra.ring.is_unit(lc):
            return p
        unit = random_unit(rng, algebra.ring)
        q = p + algebra.monomial(lm, algebra.ring.sub(unit, lc))
        if not q.is_zero() and q.lm() == lm:
            return q


def random_telescope_instance(rng, algebra, size):
    """Polynomials sharing one leading monomial with unit leads, plus
    nonzero coefficients whose weighted sum against the leads vanishes."""
    ring = algebra.ring
    alpha = random_word(rng, algebra.alphabet.size, 3, algebra.oracle, min_len=1)
    key = algebra.order.key
    fs, leads = [], []
    for _ in range(size):
        lead = random_unit(rng, ring)
        tail = random_poly(rng, algebra, max_deg=2, max_terms=2)
        tail = algebra.poly([(c, w) for c, w in tail.terms if key(w) < key(alpha)])
        fs.append(algebra.monomial(alpha, lead) + tail)
        leads.append(lead)
    while True:
        cs = [random_nonzero(rng, ring) for _ in range(size - 1)]
        weighted = ring.zero()
        for c, a in zip(cs, leads):
            weighted = ring.add(weighted, ring.mul(c, a))
        last = ring.neg(ring.mul(weighted, ring.inv_unit(leads[-1])))
        if not ring.is_zero(last):
            return fs, cs + [last]


def random_ideal_combo(rng, G, max_context=2, parts=3):
    """Random sum of context products of the generators (a known member)."""
    algebra = G.algebra
    total = algebra.zero()
    for _ in range(parts):
        i = rng.randrange(len(G))
        u = random_word(rng, algebra.alphabet.size, max_context, algebra.oracle)
        v = random_word(rng, algebra.alphabet.size, max_context, algebra.oracle)
        c = random_nonzero(rng, algebra.ring)
        total = total + G[i].scale(c, u, v)
    return total


# ---------------------------------------------------------------------------
# named corpora


def sl2(ring=ZZ):
    """Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return LieAlgebra(
        ring,
        3,
        {
            (1, 0): (0, 0, -1),
            (2, 0): (2, 0, 0),
            (2, 1): (0, -2, 0),
        },
        names=("e", "f", "h"),
    )


def perturbed_sl2(ring=ZZ):
    """sl2 with [e,f] = h + e, which breaks Jacobi on (e, f, h).

    The perturbation must survive a bracket: tweaking only [h,e] or [h,f]
    by multiples of e and f leaves Jacobi intact because [e,e] = [f,f] = 0.
    """
    return LieAlgebra(
        ring,
        3,
        {
            (1, 0): (-1, 0, -1),
            (2, 0): (2, 0, 0),
            (2, 1): (0, -2, 0),
        },
        names=("e", "f", "h"),
    )


def heisenberg(ring):
    """Basis (x, y, z): [x,y] = z, z central."""
    return LieAlgebra(ring, 3, {(1, 0): (0, 0, -1)}, names=("x", "y", "z"))


def abelian(ring, rank):
    return LieAlgebra(ring, rank)


def example1_genset(ring=QQ, n=3):
    """All degree-2 monomials of the commutative oracle on n letters."""
    algebra = Algebra(ring, [f"x{i + 1}" for i in range(n)], COMMUTATIVE)
    gens = [algebra.monomial((i, j)) for i in range(n) for j in range(i, n)]
    return GenSet(gens, algebra)


def inverse_pair_genset(ring=QQ):
    """{xy - 1, yx - 1} in the free algebra on (x, y)."""
    algebra = Algebra(ring, ["x", "y"], FREE)
    return GenSet(
        [
            algebra.poly([(1, (0, 1)), (-1, ())]),
            algebra.poly([(1, (1, 0)), (-1, ())]),
        ],
        algebra,
    )


def brute_normal_words(G, degree):
    """Oracle for quotient counts: filter every basis word through the
    factor test directly."""
    from ugb import is_normal

    algebra = G.algebra
    out = []
    for w in algebra.oracle.basis_words(algebra.alphabet.size, degree):
        if is_normal(w, G):
            out.append(w)
    return out
