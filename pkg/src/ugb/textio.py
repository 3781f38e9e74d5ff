"""Text formats: polynomials, problem files, traces and reports.

Problem files hold one declaration per line; ``#`` starts a comment.

    ring Q
    oracle commutative
    alphabet x1 x2 x3
    gen x1 x1
    gen 2*x1 x2 - 1/2

Lie-algebra blocks describe brackets as coefficient vectors over the
basis, with 1-based generator indices and i > j:

    ring Z
    rank 3
    basis e f h
    bracket 2 1 : 0 0 -1
    bracket 3 1 : 2 0 0
    bracket 3 2 : 0 -2 0

Polynomial text is ``c*w`` terms joined by signs, where a word is a
whitespace-separated run of symbols, ``1`` is the empty word, and a bare
coefficient is a constant term.  Printing is canonical (descending in
the monomial order), so outputs are diffable and parse back exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .division import GenSet
from .errors import BasisViolation, ParseError
from .pbw import LieAlgebra
from .poly import FREE, Algebra, oracle_from_name
from .rings import ring_from_name
from .words import Alphabet

_TOKEN_RE = re.compile(r"[+-]|[^\s+-]+")


def parse_poly(algebra, text, filename=None, line=None):
    """Polynomial from its text form; inverse of ``str(poly)``."""

    def fail(message):
        raise ParseError(message, filename, line)

    ring = algebra.ring
    alphabet = algebra.alphabet
    tokens = _TOKEN_RE.findall(text)
    if not tokens:
        fail("empty polynomial text")
    terms = []
    pos = 0
    first = True
    while pos < len(tokens):
        negative = False
        if tokens[pos] in "+-":
            negative = tokens[pos] == "-"
            pos += 1
            if pos >= len(tokens):
                fail("dangling sign at end of polynomial")
            if tokens[pos] in "+-":
                fail("two signs in a row")
        elif not first:
            fail(f"expected '+' or '-' before {tokens[pos]!r}")
        first = False

        token = tokens[pos]
        pos += 1
        coeff = ring.one()
        letters = []
        constant = False
        if "*" in token:
            coeff_text, _, head = token.partition("*")
            try:
                coeff = ring.parse(coeff_text)
            except ValueError as exc:
                fail(str(exc))
            if head == "1":
                constant = True
            elif head in alphabet:
                letters.append(alphabet.index(head))
            elif head == "":
                fail(f"missing word after {token!r}")
            else:
                fail(f"unknown symbol {head!r}")
        elif token in alphabet:
            letters.append(alphabet.index(token))
        else:
            try:
                coeff = ring.parse(token)
            except ValueError:
                fail(f"unknown symbol {token!r}")
            constant = True
        # remaining letters of the word
        while pos < len(tokens) and tokens[pos] not in "+-":
            token = tokens[pos]
            if token in alphabet:
                if constant:
                    fail("a bare coefficient cannot be followed by symbols; use c*w")
                letters.append(alphabet.index(token))
                pos += 1
            else:
                fail(f"unknown symbol {token!r}")
        if negative:
            coeff = ring.neg(coeff)
        terms.append((coeff, tuple(letters)))
    try:
        return algebra.poly(terms)
    except BasisViolation as exc:
        fail(str(exc))


@dataclass
class Problem:
    """Parsed problem file: an algebra plus generators and/or a Lie block."""

    ring: object
    oracle: object
    algebra: object
    gens: object          # GenSet or None
    lie: object           # LieAlgebra or None
    filename: str


def parse_problem(text, filename="<input>"):
    ring = None
    oracle = None
    alphabet = None
    algebra = None
    gen_polys = []
    rank = None
    basis_names = None
    brackets = {}

    def fail(message, line):
        raise ParseError(message, filename, line)

    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        directive, _, rest = stripped.partition(" ")
        rest = rest.strip()
        if directive == "ring":
            if ring is not None:
                fail("duplicate ring line", lineno)
            try:
                ring = ring_from_name(rest)
            except ValueError as exc:
                fail(str(exc), lineno)
        elif directive == "oracle":
            if oracle is not None:
                fail("duplicate oracle line", lineno)
            try:
                oracle = oracle_from_name(rest)
            except ValueError as exc:
                fail(str(exc), lineno)
        elif directive == "alphabet":
            if alphabet is not None:
                fail("duplicate alphabet line", lineno)
            try:
                alphabet = Alphabet(rest.split())
            except ValueError as exc:
                fail(str(exc), lineno)
        elif directive == "gen":
            if ring is None:
                fail("ring must be declared before generators", lineno)
            if alphabet is None:
                fail("alphabet must be declared before generators", lineno)
            if algebra is None:
                algebra = Algebra(ring, alphabet, oracle or FREE)
            p = parse_poly(algebra, rest, filename, lineno)
            if p.is_zero():
                fail("generator is zero", lineno)
            gen_polys.append(p)
        elif directive == "rank":
            if rank is not None:
                fail("duplicate rank line", lineno)
            if not rest.isdigit() or int(rest) < 1:
                fail(f"bad rank {rest!r}", lineno)
            rank = int(rest)
        elif directive == "basis":
            if basis_names is not None:
                fail("duplicate basis line", lineno)
            basis_names = tuple(rest.split())
        elif directive == "bracket":
            if ring is None:
                fail("ring must be declared before brackets", lineno)
            if rank is None:
                fail("rank must be declared before brackets", lineno)
            head, sep, tail = rest.partition(":")
            if not sep:
                fail("bracket line needs ':' between indices and coefficients", lineno)
            parts = head.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                fail("bracket line needs two 1-based generator indices", lineno)
            i, j = int(parts[0]) - 1, int(parts[1]) - 1
            if not (0 <= j < i < rank):
                fail(f"bracket indices must satisfy rank >= i > j >= 1, got ({i + 1}, {j + 1})", lineno)
            coeff_texts = tail.split()
            if len(coeff_texts) != rank:
                fail(f"bracket needs {rank} coefficients, got {len(coeff_texts)}", lineno)
            try:
                vec = tuple(ring.parse(t) for t in coeff_texts)
            except ValueError as exc:
                fail(str(exc), lineno)
            if (i, j) in brackets:
                fail(f"duplicate bracket ({i + 1}, {j + 1})", lineno)
            brackets[(i, j)] = vec
        else:
            fail(f"unknown directive {directive!r}", lineno)

    if ring is None:
        fail("missing ring line", 1)
    lie = None
    if rank is not None:
        if basis_names is not None and len(basis_names) != rank:
            fail(f"basis has {len(basis_names)} names for rank {rank}", 1)
        try:
            lie = LieAlgebra(ring, rank, brackets, basis_names)
        except ValueError as exc:
            fail(str(exc), 1)
    elif brackets or basis_names is not None:
        fail("lie block needs a rank line", 1)

    gens = None
    if alphabet is not None:
        if algebra is None:
            algebra = Algebra(ring, alphabet, oracle or FREE)
        gens = GenSet(gen_polys, algebra)
    elif lie is not None:
        algebra = Algebra(ring, Alphabet(lie.names), FREE)
    return Problem(ring, oracle or FREE, algebra, gens, lie, filename)


def load_problem(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_problem(handle.read(), str(path))


# ---------------------------------------------------------------------------
# canonical text serializations


def format_steps(steps, algebra, indent="  "):
    ring = algebra.ring
    alphabet = algebra.alphabet
    lines = []
    for k, s in enumerate(steps, 1):
        lines.append(
            f"{indent}step {k}: coeff={ring.format(s.coeff)} "
            f"left={alphabet.word_text(s.left)} gen={s.gen} "
            f"right={alphabet.word_text(s.right)}"
        )
    return lines


def format_trace(trace):
    algebra = trace.gens.algebra
    lines = [f"dividend: {trace.dividend}", f"steps: {len(trace.steps)}"]
    lines.extend(format_steps(trace.steps, algebra))
    lines.append(f"remainder: {trace.remainder}")
    return "\n".join(lines)


def format_spolys(spolys, algebra):
    alphabet = algebra.alphabet
    lines = [f"s-polynomials: {len(spolys)}"]
    for sp in spolys:
        lines.append(
            f"pair ({sp.i}, {sp.j}) ambiguity {alphabet.word_text(sp.ambiguity)}: "
            f"value = {sp.value}"
        )
    return "\n".join(lines)


def format_gb_report(report, algebra):
    alphabet = algebra.alphabet
    lines = [f"verdict: {report.verdict.value}", f"pairs checked: {report.pairs_checked}"]
    for k, (sp, trace) in enumerate(report.witnesses, 1):
        lines.append(
            f"witness {k}: pair ({sp.i}, {sp.j}) "
            f"ambiguity {alphabet.word_text(sp.ambiguity)}"
        )
        lines.append(f"  s-polynomial: {sp.value}")
        lines.append(f"  steps: {len(trace.steps)}")
        lines.extend(format_steps(trace.steps, algebra, indent="    "))
        lines.append(f"  remainder: {trace.remainder}")
    return "\n".join(lines)


def format_unital_report(G):
    ring = G.algebra.ring
    lines = [f"unital: {'yes' if G.is_unital else 'no'}"]
    for i, (g, unit) in enumerate(zip(G.gens, G.unit_leads)):
        status = "unit" if unit else "NOT a unit"
        lines.append(f"gen {i}: leading coeff {ring.format(g.lc())}: {status}")
    return "\n".join(lines)


def format_quotient(basis):
    alphabet = basis.algebra.alphabet
    if basis.verified:
        label = "normal words (verified Groebner basis)"
    else:
        label = "G-normal words (set not verified as a Groebner basis)"
    lines = [f"basis: {label}"]
    for d in range(basis.max_degree + 1):
        row = basis.by_degree[d]
        if row:
            listing = ", ".join(alphabet.word_text(w) for w in row)
            lines.append(f"deg {d}: {len(row)} - {listing}")
        else:
            lines.append(f"deg {d}: 0")
    lines.append(f"total: {basis.total()}")
    return "\n".join(lines)


def format_pbw_report(report):
    lines = []
    if report.lie.ok:
        lines.append("lie: ok")
    else:
        first = report.lie.violations[0]
        lines.append(
            f"lie: {len(report.lie.violations)} Jacobi violations, "
            f"first on triple {first.triple}"
        )
    lines.append(
        f"groebner: {report.groebner.verdict.value} "
        f"(pairs checked: {report.groebner.pairs_checked})"
    )
    lines.append("counts:   " + ", ".join(str(c) for c in report.counts))
    lines.append("expected: " + ", ".join(str(c) for c in report.expected_counts))
    lines.append(f"non-decreasing normal words: {'yes' if report.non_decreasing else 'no'}")
    lines.append(f"pbw: {'verified' if report.ok else 'FAILED'}")
    return "\n".join(lines)


def format_membership(result, algebra):
    if not result.member:
        return f"verdict: NotMemberAtBound\nbound: {result.bound}"
    lines = [
        "verdict: Member",
        f"bound: {result.bound}",
        f"witness steps: {len(result.witness)}",
    ]
    lines.extend(format_steps(result.witness, algebra))
    return "\n".join(lines)


def format_genset(G):
    lines = [f"generators: {len(G)}"]
    for g in G.gens:
        lines.append(f"gen {g}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# machine-readable records


def record_steps(steps, algebra):
    ring = algebra.ring
    alphabet = algebra.alphabet
    return [
        {
            "coeff": ring.format(s.coeff),
            "left": alphabet.word_text(s.left),
            "gen": s.gen,
            "right": alphabet.word_text(s.right),
        }
        for s in steps
    ]


def record_trace(trace):
    return {
        "dividend": str(trace.dividend),
        "steps": record_steps(trace.steps, trace.gens.algebra),
        "remainder": str(trace.remainder),
    }


def record_gb_report(report, algebra):
    alphabet = algebra.alphabet
    return {
        "verdict": report.verdict.value,
        "pairs_checked": report.pairs_checked,
        "witnesses": [
            {
                "pair": [sp.i, sp.j],
                "ambiguity": alphabet.word_text(sp.ambiguity),
                "s_polynomial": str(sp.value),
                "trace": record_trace(trace),
            }
            for sp, trace in report.witnesses
        ],
    }


def record_quotient(basis):
    alphabet = basis.algebra.alphabet
    return {
        "verified": basis.verified,
        "max_degree": basis.max_degree,
        "counts": list(basis.counts()),
        "total": basis.total(),
        "by_degree": {
            str(d): [alphabet.word_text(w) for w in basis.by_degree[d]]
            for d in range(basis.max_degree + 1)
        },
    }


def record_pbw_report(report):
    return {
        "lie_ok": report.lie.ok,
        "jacobi_violations": [list(v.triple) for v in report.lie.violations],
        "groebner": report.groebner.verdict.value,
        "pairs_checked": report.groebner.pairs_checked,
        "counts": list(report.counts),
        "expected_counts": list(report.expected_counts),
        "non_decreasing": report.non_decreasing,
        "ok": report.ok,
    }


def record_membership(result, algebra):
    out = {"member": result.member, "bound": result.bound}
    if result.member:
        out["witness"] = record_steps(result.witness, algebra)
    return out
