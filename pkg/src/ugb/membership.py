"""Brute-force ideal membership at a degree bound.

The truncated module spans every context product u * g * v whose words
stay inside the bound, and each query is one exact linear solve against
those rows: Fraction Gaussian elimination over Q, xgcd row echelon over
Z (no division by non-units anywhere), and Z/n by lifting to Z with the
congruence rows n * e_k adjoined.  Witnesses come back in the same
(coeff, left, gen, right) shape as division steps and reconstruct the
query exactly.

This module is deliberately independent of the reduction engine so the
two can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .division import DivisionStep
from .errors import BoundTooSmall, UnsupportedRing
from .poly import ensure_same_algebra
from .rings import IntegerRing, ModularRing, RationalField


def _xgcd(a, b):
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _sub_scaled(dst, src, q):
    for t in range(len(dst)):
        dst[t] -= q * src[t]


class _EchelonZ:
    """Incremental row echelon over Z with row-combination tracking.

    Pivot rows are combined with incoming rows through xgcd row
    operations, so membership in the row lattice and an explicit integer
    combination fall out of back-substitution.
    """

    def __init__(self, rows, ncols):
        self.nrows = len(rows)
        self.ncols = ncols
        self.pivots = {}
        for r, row in enumerate(rows):
            combo = [0] * self.nrows
            combo[r] = 1
            self._insert(list(row), combo)

    def _insert(self, vec, combo):
        for col in range(self.ncols):
            a = vec[col]
            if a == 0:
                continue
            piv = self.pivots.get(col)
            if piv is None:
                if a < 0:
                    vec = [-x for x in vec]
                    combo = [-x for x in combo]
                self.pivots[col] = (vec, combo)
                return
            pvec, pcombo = piv
            b = pvec[col]
            if a % b == 0:
                q = a // b
                _sub_scaled(vec, pvec, q)
                _sub_scaled(combo, pcombo, q)
            else:
                g, x, y = _xgcd(b, a)
                new_vec = [x * p + y * w for p, w in zip(pvec, vec)]
                new_combo = [x * p + y * w for p, w in zip(pcombo, combo)]
                qa = a // g
                qb = b // g
                red_vec = [qa * p - qb * w for p, w in zip(pvec, vec)]
                red_combo = [qa * p - qb * w for p, w in zip(pcombo, combo)]
                self.pivots[col] = (new_vec, new_combo)
                vec, combo = red_vec, red_combo
        # fully cancelled: dependent row

    def solve(self, target):
        """Integer combination of the original rows equal to target, or None."""
        vec = list(target)
        sol = [0] * self.nrows
        for col in range(self.ncols):
            a = vec[col]
            if a == 0:
                continue
            piv = self.pivots.get(col)
            if piv is None:
                return None
            pvec, pcombo = piv
            b = pvec[col]
            if a % b:
                return None
            q = a // b
            _sub_scaled(vec, pvec, q)
            for t in range(self.nrows):
                sol[t] += q * pcombo[t]
        return sol


class _EchelonQ:
    """Fraction Gaussian elimination with row-combination tracking."""

    def __init__(self, rows, ncols):
        self.nrows = len(rows)
        self.ncols = ncols
        self.pivots = {}
        for r, row in enumerate(rows):
            combo = [0] * self.nrows
            combo[r] = 1
            self._insert(list(row), combo)

    def _insert(self, vec, combo):
        for col in range(self.ncols):
            a = vec[col]
            if a == 0:
                continue
            piv = self.pivots.get(col)
            if piv is None:
                self.pivots[col] = (vec, combo)
                return
            pvec, pcombo = piv
            q = a / pvec[col]
            _sub_scaled(vec, pvec, q)
            _sub_scaled(combo, pcombo, q)

    def solve(self, target):
        vec = list(target)
        sol = [0] * self.nrows
        for col in range(self.ncols):
            a = vec[col]
            if a == 0:
                continue
            piv = self.pivots.get(col)
            if piv is None:
                return None
            pvec, pcombo = piv
            q = a / pvec[col]
            _sub_scaled(vec, pvec, q)
            for t in range(self.nrows):
                sol[t] += q * pcombo[t]
        return sol


class _SolverModN:
    """Solve over Z/n by lifting to Z with congruence rows adjoined."""

    def __init__(self, rows, ncols, modulus):
        self.nreal = len(rows)
        self.modulus = modulus
        aug = list(rows)
        for k in range(ncols):
            row = [0] * ncols
            row[k] = modulus
            aug.append(row)
        self.inner = _EchelonZ(aug, ncols)

    def solve(self, target):
        sol = self.inner.solve(target)
        if sol is None:
            return None
        return [s % self.modulus for s in sol[: self.nreal]]


@dataclass(frozen=True)
class MembershipResult:
    """Member with an explicit witness, or not provable at this bound.

    A negative answer certifies non-membership only relative to the
    truncation degree; for a verified Groebner basis it is decisive,
    because membership of a degree-d element is witnessed at degree d.
    """

    member: bool
    witness: tuple
    bound: int


class TruncatedModule:
    """All context products of the generators within a degree bound,
    flattened to coefficient rows over the basis words."""

    def __init__(self, genset, bound, columns, rows, provenance):
        self.genset = genset
        self.bound = bound
        self.columns = columns
        self.col_index = {w: t for t, w in enumerate(columns)}
        self.rows = rows
        self.provenance = provenance
        self._solver = None

    def __len__(self):
        return len(self.rows)

    def _vector(self, poly):
        vec = [0] * len(self.columns)
        for c, w in poly.terms:
            vec[self.col_index[w]] = c
        return vec

    def _get_solver(self):
        if self._solver is None:
            ring = self.genset.algebra.ring
            vectors = [self._vector(p) for p in self.rows]
            if isinstance(ring, RationalField):
                vectors = [[ring.coerce(x) for x in v] for v in vectors]
                self._solver = _EchelonQ(vectors, len(self.columns))
            elif isinstance(ring, IntegerRing):
                self._solver = _EchelonZ(vectors, len(self.columns))
            elif isinstance(ring, ModularRing):
                self._solver = _SolverModN(vectors, len(self.columns), ring.modulus)
            else:
                raise UnsupportedRing(f"no exact solver for {ring}")
        return self._solver


def build_truncation(G, bound):
    """Enumerate context products u * g * v with every word inside the bound.

    With a graded order and monic-word oracles the leading word has
    maximal length among the terms, so the row filter is exactly
    len(u) + len(LM(g)) + len(v) <= bound.  Identical rows (the same
    polynomial from different contexts) are kept once, first provenance
    wins.  Rows are ordered by generator, then context degree, then
    context words.
    """
    algebra = G.algebra
    max_lead = max((len(w) for w in G.lead_words), default=0)
    if bound < max_lead:
        raise BoundTooSmall(
            f"bound {bound} is below the maximal generator degree {max_lead}"
        )
    n = algebra.alphabet.size
    oracle = algebra.oracle
    key = algebra.order.key
    columns = []
    for d in range(bound + 1):
        columns.extend(oracle.basis_words(n, d))
    columns.sort(key=key, reverse=True)
    one = algebra.ring.one()
    rows = []
    provenance = []
    seen = set()
    for i, g in enumerate(G.gens):
        room = bound - len(G.lead_words[i])
        for s in range(room + 1):
            for a in range(s + 1):
                b = s - a
                for u in oracle.basis_words(n, a):
                    for v in oracle.basis_words(n, b):
                        p = g.scale(one, u, v)
                        if p.terms in seen:
                            continue
                        seen.add(p.terms)
                        rows.append(p)
                        provenance.append((i, u, v))
    return TruncatedModule(G, bound, columns, rows, provenance)


def is_member(f, T):
    """Exact solvability of f against the truncated module rows.

    Member results carry a witness of (coeff, left, gen, right) entries
    whose expansion reconstructs f.
    """
    G = T.genset
    ensure_same_algebra(f.algebra, G.algebra)
    if any(len(w) > T.bound for _, w in f.terms):
        raise BoundTooSmall(f"query exceeds the truncation bound {T.bound}")
    if f.is_zero():
        return MembershipResult(True, (), T.bound)
    ring = G.algebra.ring
    solver = T._get_solver()
    target = T._vector(f)
    if isinstance(ring, RationalField):
        target = [ring.coerce(x) for x in target]
    sol = solver.solve(target)
    if sol is None:
        return MembershipResult(False, None, T.bound)
    witness = []
    for coeff, (i, u, v) in zip(sol, T.provenance):
        coeff = ring.coerce(coeff)
        if ring.is_zero(coeff):
            continue
        witness.append(DivisionStep(coeff, u, i, v))
    return MembershipResult(True, tuple(witness), T.bound)


def expand_witness(G, witness):
    """Sum of the witness context products; equals the queried element."""
    total = G.algebra.zero()
    for s in witness:
        total = total + G[s.gen].scale(s.coeff, s.left, s.right)
    return total
