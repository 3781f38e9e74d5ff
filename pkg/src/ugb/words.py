"""Words over an indexed alphabet, the graded-lex order, factor search and
overlap enumeration.

A word is a plain tuple of letter indices; the empty tuple is the
monomial 1.  Keeping words as bare tuples makes them hashable, cheap to
slice and directly comparable through the order key.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EmptyWord

EMPTY = ()

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


class Alphabet:
    """Ordered generator names; index order is the generator order."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("alphabet needs at least one symbol")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(
                    f"bad symbol name {name!r}: use letters, digits, _ or ', "
                    "starting with a letter or _"
                )
        if len(set(names)) != len(names):
            raise ValueError("duplicate symbol names")
        self.names = names
        self._index = {s: i for i, s in enumerate(names)}

    @property
    def size(self):
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown symbol {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def word_text(self, word):
        """Space-separated symbol names; the empty word prints as "1"."""
        if not word:
            return "1"
        return " ".join(self.names[i] for i in word)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)})"


class DegLex:
    """Graded lexicographic: length first, then letters left to right."""

    name = "deglex"

    def key(self, word):
        return (len(word), word)

    def compare(self, a, b):
        ka = (len(a), a)
        kb = (len(b), b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def __repr__(self):
        return self.name


DEGLEX = DegLex()


def factorizations(needle, haystack):
    """All (u, v) with u + needle + v == haystack, left to right.

    The empty needle occurs at every cut, giving len(haystack) + 1 pairs.
    """
    n = len(needle)
    m = len(haystack)
    out = []
    for i in range(m - n + 1):
        if haystack[i:i + n] == needle:
            out.append((haystack[:i], haystack[i + n:]))
    return out


def contains_factor(needle, haystack):
    n = len(needle)
    m = len(haystack)
    if n > m:
        return False
    return any(haystack[i:i + n] == needle for i in range(m - n + 1))


@dataclass(frozen=True)
class Overlap:
    """Two placements of a pair of words onto one ambiguity word.

    For source words (w, w2): u + w + v == u2 + w2 + v2 == ambiguity.
    Each instance is either a proper overlap (a nonempty proper suffix of
    one word equals a prefix of the other) or an inclusion (one word is a
    factor of the other).
    """

    u: tuple
    v: tuple
    u2: tuple
    v2: tuple
    ambiguity: tuple


def overlaps(w, w2):
    """Proper overlaps and inclusions of two nonempty words, both directions.

    Disjoint placements are not enumerated.  The trivial placement of a
    word on itself is excluded, and for w == w2 only one of each mirrored
    placement pair is kept.
    """
    if not w or not w2:
        raise EmptyWord("overlap enumeration needs nonempty words")
    same = w == w2
    out = []
    # suffix of w meets prefix of w2: ambiguity is w followed by the rest of w2
    for t in range(1, min(len(w), len(w2))):
        if w[len(w) - t:] == w2[:t]:
            out.append(Overlap(EMPTY, w2[t:], w[:len(w) - t], EMPTY, w + w2[t:]))
    if same:
        return out
    # suffix of w2 meets prefix of w
    for t in range(1, min(len(w), len(w2))):
        if w2[len(w2) - t:] == w[:t]:
            out.append(Overlap(w2[:len(w2) - t], EMPTY, EMPTY, w[t:], w2 + w[t:]))
    # w2 inside w
    for u2, v2 in factorizations(w2, w):
        out.append(Overlap(EMPTY, EMPTY, u2, v2, w))
    # w inside w2
    for u, v in factorizations(w, w2):
        out.append(Overlap(u, v, EMPTY, EMPTY, w2))
    return out
