"""One-sided topological Markov shifts and their eventually periodic points.

Symbols are the integers ``1..n``.  Words are plain tuples of symbols.  An
eventually periodic point ``u v v v ...`` is stored in a canonical form so
that equality of points is equality of dataclasses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    Inadmissible,
    NotEventuallyPeriodicAt,
    NotIrreducible,
    PermutationMatrix,
    ValidationError,
    ZeroRowOrColumn,
)

Word = tuple


def parse_word(text) -> Word:
    """``"121"`` or ``[1, 2, 1]`` -> ``(1, 2, 1)``; digit strings need alphabets <= 9."""
    if isinstance(text, str):
        return tuple(int(ch) for ch in text)
    return tuple(int(a) for a in text)


def word_str(w: Sequence[int]) -> str:
    if all(a < 10 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


@dataclass(frozen=True, order=True)
class ShiftSpace:
    """A validated 0-1 matrix; use :func:`validate_matrix` to build one."""

    n: int
    rows: tuple

    def allowed(self, a: int, b: int) -> bool:
        return self.rows[a - 1][b - 1] == 1

    @property
    def symbols(self) -> range:
        return range(1, self.n + 1)

    def successors(self, a: int) -> list:
        return [b for b in self.symbols if self.rows[a - 1][b - 1]]

    def is_admissible(self, w: Sequence[int]) -> bool:
        if any(not 1 <= a <= self.n for a in w):
            return False
        return all(self.allowed(w[i], w[i + 1]) for i in range(len(w) - 1))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    def __repr__(self):
        return f"ShiftSpace({[list(r) for r in self.rows]})"


def _strongly_connected(n, rows) -> bool:
    def reach(adj):
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if adj(i, j) and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    return reach(lambda i, j: rows[i][j]) and reach(lambda i, j: rows[j][i])


def validate_matrix(raw) -> ShiftSpace:
    """Check a square 0-1 table and return the corresponding :class:`ShiftSpace`.

    Raises :class:`ZeroRowOrColumn`, :class:`NotIrreducible` or
    :class:`PermutationMatrix`.  For an irreducible matrix, failing to be a
    permutation matrix is equivalent to the shift space being infinite, which
    is the aperiodicity hypothesis the rest of the library relies on.
    """
    if isinstance(raw, ShiftSpace):
        return raw
    rows = tuple(tuple(int(e) for e in r) for r in raw)
    n = len(rows)
    if n < 1 or any(len(r) != n for r in rows):
        raise ValidationError("matrix must be square and nonempty")
    if any(e not in (0, 1) for r in rows for e in r):
        raise ValidationError("matrix entries must be 0 or 1")
    for i in range(n):
        if not any(rows[i]):
            raise ZeroRowOrColumn(f"row {i + 1} is zero")
        if not any(rows[j][i] for j in range(n)):
            raise ZeroRowOrColumn(f"column {i + 1} is zero")
    if not _strongly_connected(n, rows):
        raise NotIrreducible("matrix graph is not strongly connected")
    if all(sum(r) == 1 for r in rows) and all(sum(rows[j][i] for j in range(n)) == 1 for i in range(n)):
        raise PermutationMatrix("permutation matrix: the shift space is finite")
    return ShiftSpace(n, rows)


FULL_2SHIFT = ((1, 1), (1, 1))
GOLDEN_MEAN = ((1, 1), (1, 0))


@lru_cache(maxsize=512)
def admissible_words(S: ShiftSpace, k: int) -> tuple:
    """All admissible words of length ``k``, in lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return ((),)
    words = [(a,) for a in S.symbols]
    for _ in range(k - 1):
        words = [w + (b,) for w in words for b in S.successors(w[-1])]
    return tuple(words)


def higher_block(S: ShiftSpace, k: int):
    """The ``k``-block recoding of ``S`` and the map ``word -> new symbol``.

    New symbols are assigned in lexicographic order of the blocks.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return S, {(a,): a for a in S.symbols}
    blocks = admissible_words(S, k)
    index = {w: i + 1 for i, w in enumerate(blocks)}
    rows = [[0] * len(blocks) for _ in blocks]
    for w in blocks:
        for b in S.successors(w[-1]):
            rows[index[w] - 1][index[w[1:] + (b,)] - 1] = 1
    return validate_matrix(rows), index


def is_primitive(w: Sequence[int]) -> bool:
    return len(w) > 0 and primitive_root(w) == tuple(w)


def primitive_root(w: Sequence[int]) -> Word:
    w = tuple(w)
    m = len(w)
    for d in range(1, m + 1):
        if m % d == 0 and w[:d] * (m // d) == w:
            return w[:d]
    return w


def least_rotation(w: Sequence[int]) -> Word:
    w = tuple(w)
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


def rotate(w: Sequence[int], k: int) -> Word:
    w = tuple(w)
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


@dataclass(frozen=True, order=True)
class Orbit:
    """A periodic orbit, held as its lexicographically least primitive cycle."""

    period: int
    cycle: tuple
    space: ShiftSpace

    @classmethod
    def of(cls, S: ShiftSpace, w: Sequence[int]) -> "Orbit":
        w = tuple(w)
        if not is_primitive(w):
            raise ValueError(f"cycle {word_str(w)} is not primitive")
        if not S.is_admissible(w + w[:1]):
            raise Inadmissible(f"{word_str(w)} is not a closed walk")
        c = least_rotation(w)
        return cls(len(c), c, S)

    def point(self, phase: int = 0) -> "EvPeriodicPoint":
        return EvPeriodicPoint(self.space, (), rotate(self.cycle, phase))

    def points(self) -> list:
        return [self.point(i) for i in range(self.period)]

    def __str__(self):
        return f"({word_str(self.cycle)})"

    def to_json(self) -> list:
        return list(self.cycle)


def periodic_orbits_up_to(S: ShiftSpace, P: int) -> list:
    """Every periodic orbit of period at most ``P``, sorted by (period, cycle).

    Depth-first search over admissible prenecklaces: a prefix extends only if
    it remains a prefix of a Lyndon word, so each orbit is produced exactly
    once at its least rotation and non-primitive cycles never appear.
    """
    if P < 1:
        raise ValueError("P must be >= 1")
    found = []
    # stack entries: (word, lyndon period of the prefix)
    stack = [((a,), 1) for a in reversed(S.symbols)]
    while stack:
        w, p = stack.pop()
        t = len(w)
        if p == t and S.allowed(w[-1], w[0]):
            found.append(Orbit(t, w, S))
        if t == P:
            continue
        ref = w[t - p]
        for b in reversed(S.successors(w[-1])):
            if b == ref:
                stack.append((w + (b,), p))
            elif b > ref:
                stack.append((w + (b,), t + 1))
    found.sort(key=lambda o: (o.period, o.cycle))
    return found


def per_count(S: ShiftSpace, p: int) -> int:
    """Number of points of period ``p`` (trace of the ``p``-th matrix power)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    n = S.n
    M = [list(r) for r in S.rows]
    R = [[int(i == j) for j in range(n)] for i in range(n)]
    e = p
    while e:
        if e & 1:
            R = _matmul(R, M)
        M = _matmul(M, M)
        e >>= 1
    return sum(R[i][i] for i in range(n))


def _matmul(X, Y):
    n = len(X)
    return [[sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class EvPeriodicPoint:
    """The point ``transient . cycle . cycle . ...`` in canonical form.

    Build through :func:`normalize_evp` unless the form is known canonical.
    """

    space: ShiftSpace
    transient: tuple
    cycle: tuple

    @property
    def size(self) -> int:
        return len(self.transient) + len(self.cycle)

    @property
    def is_periodic(self) -> bool:
        return not self.transient

    @property
    def least_period(self) -> int:
        return len(self.cycle)

    def symbol_at(self, i: int) -> int:
        return symbol_at(self, i)

    def prefix(self, k: int) -> Word:
        u, v = self.transient, self.cycle
        if k <= len(u):
            return u[:k]
        rest = k - len(u)
        reps = -(-rest // len(v))
        return u + (v * reps)[:rest]

    def shift(self, m: int = 1) -> "EvPeriodicPoint":
        return shift_evp(self, m)

    def sort_key(self):
        return (self.size, len(self.transient), self.transient, self.cycle)

    def to_json(self) -> dict:
        return {"transient": list(self.transient), "cycle": list(self.cycle)}

    def __str__(self):
        u = word_str(self.transient)
        return f"{u}({word_str(self.cycle)})^inf"


def normalize_evp(S: ShiftSpace, u: Sequence[int], v: Sequence[int]) -> EvPeriodicPoint:
    """Canonical form of ``u v^inf``: primitive cycle, shortest transient."""
    u, v = tuple(u), tuple(v)
    if not v:
        raise ValueError("cycle must be nonempty")
    if not S.is_admissible(u + v + v[:1]):
        raise Inadmissible(f"{word_str(u)}({word_str(v)})^inf is not admissible")
    v = primitive_root(v)
    while u and u[-1] == v[-1]:
        u = u[:-1]
        v = v[-1:] + v[:-1]
    return EvPeriodicPoint(S, u, v)


def symbol_at(x: EvPeriodicPoint, i: int) -> int:
    """The ``i``-th coordinate (1-based) of ``x``."""
    if i < 1:
        raise ValueError("coordinates start at 1")
    u, v = x.transient, x.cycle
    if i <= len(u):
        return u[i - 1]
    return v[(i - len(u) - 1) % len(v)]


def shift_evp(x: EvPeriodicPoint, m: int) -> EvPeriodicPoint:
    if m < 0:
        raise ValueError("shift amount must be nonnegative")
    u, v = x.transient, x.cycle
    if m <= len(u):
        return EvPeriodicPoint(x.space, u[m:], v)
    return EvPeriodicPoint(x.space, (), rotate(v, m - len(u)))


def is_eventually_periodic_at(x: EvPeriodicPoint, r: int, s: int) -> bool:
    return r != s and shift_evp(x, r) == shift_evp(x, s)


def evps_up_to(S: ShiftSpace, bound: int) -> list:
    """All eventually periodic points with ``|transient| + |cycle| <= bound``."""
    points = []
    for m in range(1, bound + 1):
        for v in admissible_words(S, m):
            if not S.allowed(v[-1], v[0]) or not is_primitive(v):
                continue
            points.append(EvPeriodicPoint(S, (), v))
            for j in range(1, bound - m + 1):
                for u in admissible_words(S, j):
                    if u[-1] != v[-1] and S.allowed(u[-1], v[0]):
                        points.append(EvPeriodicPoint(S, u, v))
    points.sort(key=EvPeriodicPoint.sort_key)
    return points


def attracting_witness(x: EvPeriodicPoint, r: int, s: int, w_depth: int):
    """Words ``(nu_bar, mu_bar)`` for the local contraction around ``x``.

    With ``nu = x[1..s]`` and ``xi = x[s+1..r]``, returns
    ``nu_bar = nu xi^L`` and ``mu_bar = nu xi^(L+1)`` for the least ``L >= 1``
    with ``|nu_bar| >= w_depth``.  Replacing the prefix ``nu_bar`` by
    ``mu_bar`` fixes ``x`` and satisfies ``sigma^r(phi(w)) = sigma^s(w)``.
    """
    if not (r > s >= 0) or shift_evp(x, r) != shift_evp(x, s):
        raise NotEventuallyPeriodicAt(r, s)
    nu = x.prefix(s)
    xi = x.prefix(r)[s:]
    L = 1
    while s + L * (r - s) < w_depth:
        L += 1
    return nu + xi * L, nu + xi * (L + 1)


def substitute_prefix(w: EvPeriodicPoint, old: Word, new: Word) -> EvPeriodicPoint:
    """Replace the leading ``old`` of ``w`` by ``new``."""
    if w.prefix(len(old)) != tuple(old):
        raise ValueError("point is not in the cylinder of the given word")
    rest = shift_evp(w, len(old))
    return normalize_evp(w.space, tuple(new) + rest.transient, rest.cycle)


def check_attracting_witness(x: EvPeriodicPoint, r: int, s: int, w_depth: int, bound: int = 6) -> bool:
    """Verify the contraction identities on every point of size <= ``bound`` in the cylinder."""
    nu_bar, mu_bar = attracting_witness(x, r, s, w_depth)
    if substitute_prefix(x, nu_bar, mu_bar) != x:
        return False
    if len(nu_bar) < w_depth or mu_bar[: len(nu_bar)] != nu_bar:
        return False
    extensions = _cylinder_points(x.space, nu_bar, bound)
    return all(
        shift_evp(substitute_prefix(w, nu_bar, mu_bar), r) == shift_evp(w, s) for w in extensions
    )


def _cylinder_points(S: ShiftSpace, prefix: Word, bound: int) -> Iterator[EvPeriodicPoint]:
    """Eventually periodic points starting with ``prefix`` whose tail has size <= ``bound``."""
    for y in evps_up_to(S, bound):
        if S.allowed(prefix[-1], y.prefix(1)[0]):
            yield normalize_evp(S, prefix + y.transient, y.cycle)


def iter_words_up_to(S: ShiftSpace, D: int, start: int = 1) -> Iterable[Word]:
    for k in range(start, D + 1):
        yield from admissible_words(S, k)
