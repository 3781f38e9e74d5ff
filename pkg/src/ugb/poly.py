"""Sparse polynomials in a free or commutative-monomial algebra.

An :class:`Algebra` fixes the coefficient ring, the alphabet, the
basis-multiplication oracle and the monomial order.  A :class:`Poly` is
an immutable list of (coefficient, word) terms, strictly descending in
the order, so the leading term is ``terms[0]``.

Both shipped oracles multiply two basis words to a single monic basis
word, never zero and never a sum.  That makes context scaling
order-preserving and collision-free, and it makes the leading
coefficient of ``u * g * v`` equal to the leading coefficient of ``g``,
which is what turns divisibility testing into plain word matching.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product

from .errors import (
    BasisViolation,
    OracleMismatch,
    RingMismatch,
    ZeroPolynomial,
)
from .words import DEGLEX, EMPTY, Alphabet


class FreeConcat:
    """Basis: all words; the product of two words is their concatenation."""

    name = "free"

    def mul_words(self, u, v):
        return u + v

    def is_basis_word(self, w):
        return True

    def basis_words(self, n_letters, degree):
        """All basis words of the given degree, ascending in the order."""
        return product(range(n_letters), repeat=degree)

    def __repr__(self):
        return self.name


class CommutativeMerge:
    """Basis: non-decreasing words; the product is the sorted merge."""

    name = "commutative"

    def mul_words(self, u, v):
        return tuple(sorted(u + v))

    def is_basis_word(self, w):
        return all(w[i] <= w[i + 1] for i in range(len(w) - 1))

    def basis_words(self, n_letters, degree):
        return combinations_with_replacement(range(n_letters), degree)

    def __repr__(self):
        return self.name


FREE = FreeConcat()
COMMUTATIVE = CommutativeMerge()


def oracle_from_name(text):
    text = text.strip()
    if text == "free":
        return FREE
    if text == "commutative":
        return COMMUTATIVE
    raise ValueError(f"unknown oracle {text!r} (expected free or commutative)")


def ensure_same_algebra(a, b):
    """Raise RingMismatch or OracleMismatch unless the algebras agree."""
    if a is b or a == b:
        return
    if a.ring != b.ring:
        raise RingMismatch(f"coefficient rings differ: {a.ring} vs {b.ring}")
    raise OracleMismatch(
        f"algebras differ (oracle or alphabet): {a!r} vs {b!r}"
    )


class Algebra:
    """Context for polynomial arithmetic: ring, alphabet, oracle, order."""

    __slots__ = ("ring", "alphabet", "oracle", "order")

    def __init__(self, ring, alphabet, oracle=FREE, order=DEGLEX):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        self.ring = ring
        self.alphabet = alphabet
        self.oracle = oracle
        self.order = order

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and other.ring == self.ring
            and other.alphabet == self.alphabet
            and type(other.oracle) is type(self.oracle)
            and type(other.order) is type(self.order)
        )

    def __hash__(self):
        return hash((self.ring, self.alphabet, type(self.oracle), type(self.order)))

    def __repr__(self):
        return f"Algebra({self.ring}, {list(self.alphabet.names)}, {self.oracle.name})"

    def check_word(self, word):
        for letter in word:
            if not isinstance(letter, int) or not 0 <= letter < self.alphabet.size:
                raise BasisViolation(f"letter index {letter!r} out of range")
        if not self.oracle.is_basis_word(word):
            raise BasisViolation(
                f"{self.alphabet.word_text(word)!r} is not a basis word of the "
                f"{self.oracle.name} oracle"
            )

    def poly(self, terms):
        """Normalized polynomial from raw (coefficient, word) pairs.

        Like terms merge, zero coefficients drop, non-basis words raise.
        """
        ring = self.ring
        acc = {}
        for coeff, word in terms:
            word = tuple(word)
            self.check_word(word)
            c = ring.coerce(coeff)
            if word in acc:
                c = ring.add(acc[word], c)
            if ring.is_zero(c):
                acc.pop(word, None)
            else:
                acc[word] = c
        key = self.order.key
        ordered = tuple(
            (acc[w], w) for w in sorted(acc, key=key, reverse=True)
        )
        return Poly(self, ordered)

    def zero(self):
        return Poly(self, ())

    def one(self):
        return Poly(self, ((self.ring.one(), EMPTY),))

    def gen(self, i):
        """The generator x_i as a polynomial."""
        return self.monomial((i,))

    def monomial(self, word, coeff=None):
        if coeff is None:
            coeff = self.ring.one()
        return self.poly([(coeff, tuple(word))])


class Poly:
    """Immutable sparse polynomial; ``terms`` is descending in the order.

    Construct through :meth:`Algebra.poly`; the raw constructor trusts
    its input to be normalized already.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def leading(self):
        """(leading coefficient, leading word)."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        return self.terms[0]

    def lc(self):
        return self.leading()[0]

    def lm(self):
        return self.leading()[1]

    def degree(self):
        return len(self.lm())

    def _check_same(self, other):
        ensure_same_algebra(self.algebra, other.algebra)

    def __add__(self, other):
        self._check_same(other)
        ring = self.algebra.ring
        key = self.algebra.order.key
        ts, to = self.terms, other.terms
        out = []
        i = j = 0
        while i < len(ts) and j < len(to):
            cs, ws = ts[i]
            co, wo = to[j]
            ks = key(ws)
            ko = key(wo)
            if ks > ko:
                out.append(ts[i])
                i += 1
            elif ks < ko:
                out.append(to[j])
                j += 1
            else:
                c = ring.add(cs, co)
                i += 1
                j += 1
                if not ring.is_zero(c):
                    out.append((c, ws))
        out.extend(ts[i:])
        out.extend(to[j:])
        return Poly(self.algebra, tuple(out))

    def __neg__(self):
        neg = self.algebra.ring.neg
        return Poly(self.algebra, tuple((neg(c), w) for c, w in self.terms))

    def __sub__(self, other):
        return self.__add__(-other)

    def scale(self, coeff, left=EMPTY, right=EMPTY):
        """coeff * (left * self * right), through the oracle.

        Monic-word oracles keep the term layout of ``self``: the word map
        is injective and order-preserving, so no re-sort is needed.  Over
        rings with zero divisors individual coefficients may still die.
        """
        ring = self.algebra.ring
        mul_words = self.algebra.oracle.mul_words
        left = tuple(left)
        right = tuple(right)
        self.algebra.check_word(left)
        self.algebra.check_word(right)
        c = ring.coerce(coeff)
        out = []
        for tc, tw in self.terms:
            nc = ring.mul(c, tc)
            if ring.is_zero(nc):
                continue
            out.append((nc, mul_words(left, mul_words(tw, right))))
        return Poly(self.algebra, tuple(out))

    def monic(self):
        """Scale by the inverse of the leading coefficient (a unit)."""
        return self.scale(self.algebra.ring.inv_unit(self.lc()))

    def __mul__(self, other):
        self._check_same(other)
        ring = self.algebra.ring
        mul_words = self.algebra.oracle.mul_words
        acc = {}
        for ca, wa in self.terms:
            for cb, wb in other.terms:
                w = mul_words(wa, wb)
                c = ring.mul(ca, cb)
                if w in acc:
                    c = ring.add(acc[w], c)
                if ring.is_zero(c):
                    acc.pop(w, None)
                else:
                    acc[w] = c
        key = self.algebra.order.key
        ordered = tuple((acc[w], w) for w in sorted(acc, key=key, reverse=True))
        return Poly(self.algebra, ordered)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.algebra == self.algebra
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.algebra, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.algebra.ring
        alphabet = self.algebra.alphabet
        one = ring.one()
        parts = []
        for k, (c, w) in enumerate(self.terms):
            negative, magnitude = ring.split_sign(c)
            if k == 0:
                head = "- " if negative else ""
            else:
                head = " - " if negative else " + "
            if not w:
                body = ring.format(magnitude)
            elif ring.equals(magnitude, one):
                body = alphabet.word_text(w)
            else:
                body = f"{ring.format(magnitude)}*{alphabet.word_text(w)}"
            parts.append(head + body)
        return "".join(parts)

    def __repr__(self):
        return str(self)
