"""Integer-valued cylinder functions and decisions about their cohomology classes.

A :class:`CylFn` of depth ``k`` is a table on the admissible words of length
``k``; its value at a point reads the first ``k`` symbols.  Cohomology classes
are never stored.  Instead every question about a class (positivity, order
unit, coboundary) is decided on the ``k``-block graph, whose cycles are the
periodic orbits and whose cycle weights are the orbit sums.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .errors import NotEventuallyPeriodicAt, SpaceMismatch, WordTooShort
from .shift import (
    EvPeriodicPoint,
    Orbit,
    ShiftSpace,
    admissible_words,
    parse_word,
    shift_evp,
    word_str,
)


class CylFn:
    """Locally constant ``f: X_A -> Z`` given by its values on ``B_depth``."""

    __slots__ = ("space", "depth", "table", "_reduced")

    def __init__(self, space: ShiftSpace, depth: int, table: Mapping):
        self.space = space
        self.depth = depth
        words = admissible_words(space, depth)
        if len(table) != len(words) or any(w not in table for w in words):
            raise ValueError(f"table must be defined on exactly the admissible words of length {depth}")
        self.table = {w: int(table[w]) for w in words}
        self._reduced = None

    # construction helpers

    @classmethod
    def constant(cls, space: ShiftSpace, c: int) -> "CylFn":
        return cls(space, 0, {(): c})

    @classmethod
    def indicator(cls, space: ShiftSpace, word) -> "CylFn":
        """The characteristic function of the cylinder ``[word]``."""
        word = parse_word(word)
        return cls(space, len(word), {w: int(w == word) for w in admissible_words(space, len(word))})

    @classmethod
    def from_symbols(cls, space: ShiftSpace, values: Mapping) -> "CylFn":
        """Depth-one function from ``{symbol: value}``."""
        return cls(space, 1, {(a,): values[a] for a in space.symbols})

    @classmethod
    def from_function(cls, space: ShiftSpace, depth: int, fn) -> "CylFn":
        return cls(space, depth, {w: fn(w) for w in admissible_words(space, depth)})

    # evaluation

    def eval_word(self, w) -> int:
        if len(w) < self.depth:
            raise WordTooShort(f"need {self.depth} symbols, got {len(w)}")
        return self.table[tuple(w[: self.depth])]

    def __call__(self, x: EvPeriodicPoint) -> int:
        if x.space != self.space:
            raise SpaceMismatch("point and function live on different shift spaces")
        return self.table[x.prefix(self.depth)]

    # structure

    def extend(self, depth: int) -> "CylFn":
        if depth < self.depth:
            raise ValueError("cannot extend to a smaller depth")
        if depth == self.depth:
            return self
        k = self.depth
        return CylFn(self.space, depth, {w: self.table[w[:k]] for w in admissible_words(self.space, depth)})

    def reduced(self) -> "CylFn":
        """Equivalent function of least depth."""
        if self._reduced is None:
            f = self
            while f.depth > 0:
                k = f.depth - 1
                shorter = {}
                ok = True
                for w, val in f.table.items():
                    if shorter.setdefault(w[:k], val) != val:
                        ok = False
                        break
                if not ok:
                    break
                f = CylFn(self.space, k, shorter)
            self._reduced = f
        return self._reduced

    def values(self):
        return self.table.values()

    def min(self) -> int:
        return min(self.table.values())

    def max(self) -> int:
        return max(self.table.values())

    def is_nonnegative(self) -> bool:
        return self.min() >= 0

    def _unify(self, other: "CylFn"):
        if not isinstance(other, CylFn):
            return NotImplemented
        if other.space != self.space:
            raise SpaceMismatch("functions live on different shift spaces")
        d = max(self.depth, other.depth)
        return self.extend(d), other.extend(d)

    def _combine(self, other, op) -> "CylFn":
        if isinstance(other, int):
            other = CylFn.constant(self.space, other)
        a, b = self._unify(other)
        return CylFn(self.space, a.depth, {w: op(a.table[w], b.table[w]) for w in a.table})

    def __add__(self, other):
        return self._combine(other, lambda p, q: p + q)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda p, q: p - q)

    def __rsub__(self, other):
        return self._combine(other, lambda p, q: q - p)

    def __neg__(self):
        return CylFn(self.space, self.depth, {w: -v for w, v in self.table.items()})

    def __mul__(self, c: int):
        if not isinstance(c, int):
            return NotImplemented
        return CylFn(self.space, self.depth, {w: c * v for w, v in self.table.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CylFn):
            return NotImplemented
        if other.space != self.space:
            return False
        a, b = self._unify(other)
        return a.table == b.table

    def __hash__(self):
        r = self.reduced()
        return hash((r.space, r.depth, tuple(sorted(r.table.items()))))

    def __repr__(self):
        items = ", ".join(f"{word_str(w) or '()'}: {v}" for w, v in sorted(self.table.items()))
        return f"CylFn(depth={self.depth}, {{{items}}})"

    def to_json(self) -> dict:
        if self.space.n <= 9:
            return {"depth": self.depth, "table": {word_str(w): v for w, v in sorted(self.table.items())}}
        return {"depth": self.depth, "table": [[list(w), v] for w, v in sorted(self.table.items())]}


def indicator_of_all(space: ShiftSpace) -> CylFn:
    return CylFn.constant(space, 1)


def cylfn_from_json(space: ShiftSpace, data: dict) -> CylFn:
    depth = int(data["depth"])
    raw = data["table"]
    if isinstance(raw, dict):
        table = {parse_word(k): v for k, v in raw.items()}
    else:
        table = {tuple(w): v for w, v in raw}
    return CylFn(space, depth, table)


def compose_shift(f: CylFn) -> CylFn:
    """``f o sigma``: reads symbols 2..depth+1."""
    return CylFn(f.space, f.depth + 1, {w: f.table[w[1:]] for w in admissible_words(f.space, f.depth + 1)})


def birkhoff(f: CylFn, m: int) -> CylFn:
    """``f^m = sum_{i<m} f o sigma^i`` as a table of depth ``f.depth + m - 1``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return CylFn.constant(f.space, 0)
    k = f.depth
    d = k + m - 1
    return CylFn(
        f.space, d, {w: sum(f.table[w[i : i + k]] for i in range(m)) for w in admissible_words(f.space, d)}
    )


def birkhoff_at(f: CylFn, x: EvPeriodicPoint, m: int) -> int:
    """``f^m(x)`` evaluated pointwise, without building a table."""
    if m <= 0:
        return 0
    w = x.prefix(f.depth + m - 1)
    k = f.depth
    return sum(f.table[w[i : i + k]] for i in range(m))


def omega(f: CylFn, x: EvPeriodicPoint, r: int, s: int) -> int:
    """``sum_{i<r} f(sigma^i x) - sum_{j<s} f(sigma^j x)`` for ``sigma^r x = sigma^s x``, ``r > s``."""
    if not (r > s >= 0) or shift_evp(x, r) != shift_evp(x, s):
        raise NotEventuallyPeriodicAt(r, s)
    return birkhoff_at(f, shift_evp(x, s), r - s)


def orbit_sum(f: CylFn, gamma: Orbit) -> int:
    if gamma.space != f.space:
        raise SpaceMismatch("orbit and function live on different shift spaces")
    c = gamma.cycle
    k = f.depth
    reps = -(-(len(c) + k) // len(c))
    w = c * reps
    return sum(f.table[w[i : i + k]] for i in range(len(c)))


# ---------------------------------------------------------------------------
# decision procedures


class Verdict(enum.Enum):
    POSITIVE = "Positive"
    NOT_POSITIVE = "NotPositive"
    ORDER_UNIT = "OrderUnit"
    NOT_ORDER_UNIT = "NotOrderUnit"
    COBOUNDARY = "Coboundary"
    NOT_COBOUNDARY = "NotCoboundary"


@dataclass
class ClassDecision:
    verdict: Verdict
    orbit: Optional[Orbit] = None
    weight: Optional[int] = None
    potential: Optional[CylFn] = None
    mean: Optional[Fraction] = None
    extra: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict in (Verdict.POSITIVE, Verdict.ORDER_UNIT, Verdict.COBOUNDARY)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value}
        if self.orbit is not None:
            out["orbit"] = list(self.orbit.cycle)
            out["weight"] = str(self.weight)
        if self.mean is not None:
            out["mean"] = str(self.mean)
        if self.potential is not None:
            out["potential"] = self.potential.to_json()
        return out


class BlockGraph:
    """The ``k``-block graph of a function: vertices ``B_k``, edges ``B_{k+1}``.

    Each edge ``w -> w'`` carries the weight ``f(w)``, so the weight of a
    cycle equals the orbit sum of the periodic orbit it spells.
    """

    def __init__(self, f: CylFn):
        if f.depth == 0:
            f = f.extend(1)
        self.f = f
        self.space = f.space
        self.k = f.depth
        self.vertices = list(admissible_words(f.space, self.k))
        self.index = {w: i for i, w in enumerate(self.vertices)}
        self.weight = [f.table[w] for w in self.vertices]
        self.succ = [
            [self.index[w[1:] + (b,)] for b in f.space.successors(w[-1])] for w in self.vertices
        ]
        self.edges = [(i, j) for i in range(len(self.vertices)) for j in self.succ[i]]

    def cycle_to_orbit(self, cyc) -> Orbit:
        return Orbit.of(self.space, tuple(self.vertices[i][0] for i in cyc))

    def bellman_ford_negative_cycle(self, weights=None):
        """A negative-weight cycle (list of vertex indices) or ``None``."""
        wt = self.weight if weights is None else weights
        n = len(self.vertices)
        dist = [0] * n
        pred = [-1] * n
        last = -1
        for _ in range(n):
            last = -1
            for i, j in self.edges:
                nd = dist[i] + wt[i]
                if nd < dist[j]:
                    dist[j] = nd
                    pred[j] = i
                    last = j
            if last == -1:
                return None
        v = last
        for _ in range(n):
            v = pred[v]
        cyc = [v]
        u = pred[v]
        while u != v:
            cyc.append(u)
            u = pred[u]
        cyc.reverse()
        return cyc

    def shortest_negative_cycle(self, weights=None):
        """A negative closed walk of least length, as an :class:`Orbit`.

        A shortest negative closed walk cannot split into shorter closed
        walks, so it is a simple cycle and spells a primitive orbit.
        """
        wt = self.weight if weights is None else weights
        n = len(self.vertices)
        # best[s][v]: least weight of a walk of exactly L edges from s to v
        best = [[None] * n for _ in range(n)]
        for s in range(n):
            best[s][s] = 0
        preds = []
        for L in range(1, n + 1):
            nxt = [[None] * n for _ in range(n)]
            pr = [[-1] * n for _ in range(n)]
            for s in range(n):
                row, out, po = best[s], nxt[s], pr[s]
                for i in range(n):
                    if row[i] is None:
                        continue
                    val = row[i] + wt[i]
                    for j in self.succ[i]:
                        if out[j] is None or val < out[j]:
                            out[j] = val
                            po[j] = i
            best = nxt
            preds.append(pr)
            for s in range(n):
                if best[s][s] is not None and best[s][s] < 0:
                    walk = [s]
                    for layer in range(L - 1, 0, -1):
                        walk.append(preds[layer][s][walk[-1]])
                    walk.reverse()
                    return self.cycle_to_orbit(walk)
        return None

    def karp_min_mean(self) -> Fraction:
        n = len(self.vertices)
        D = [[None] * n for _ in range(n + 1)]
        D[0][0] = 0
        for m in range(1, n + 1):
            prev, cur = D[m - 1], D[m]
            for i in range(n):
                if prev[i] is None:
                    continue
                val = prev[i] + self.weight[i]
                for j in self.succ[i]:
                    if cur[j] is None or val < cur[j]:
                        cur[j] = val
        best = None
        for v in range(n):
            if D[n][v] is None:
                continue
            worst = None
            for m in range(n):
                if D[m][v] is None:
                    continue
                q = Fraction(D[n][v] - D[m][v], n - m)
                if worst is None or q > worst:
                    worst = q
            if worst is not None and (best is None or worst < best):
                best = worst
        return best

    def cycle_with_mean(self, mean: Fraction):
        """A shortest cycle whose mean weight equals ``mean`` (the minimum)."""
        p, q = mean.numerator, mean.denominator
        wt = [q * w - p for w in self.weight]
        n = len(self.vertices)
        dist = [0] * n
        for _ in range(n):
            changed = False
            for i, j in self.edges:
                if dist[i] + wt[i] < dist[j]:
                    dist[j] = dist[i] + wt[i]
                    changed = True
            if not changed:
                break
        tight = [[j for j in self.succ[i] if dist[i] + wt[i] == dist[j]] for i in range(n)]
        best = None
        for s in range(n):
            prev = {s: None}
            queue = deque([s])
            hit = None
            while queue and hit is None:
                v = queue.popleft()
                for j in tight[v]:
                    if j == s:
                        hit = v
                        break
                    if j not in prev:
                        prev[j] = v
                        queue.append(j)
            if hit is None:
                continue
            cyc = [hit]
            while cyc[-1] != s:
                cyc.append(prev[cyc[-1]])
            cyc.reverse()
            orb = self.cycle_to_orbit(cyc)
            if best is None or (orb.period, orb.cycle) < (best.period, best.cycle):
                best = orb
        return best


def is_positive_class(f: CylFn) -> ClassDecision:
    """Decide ``[f] in H_+``: every periodic orbit sum is nonnegative."""
    g = BlockGraph(f)
    if g.bellman_ford_negative_cycle() is None:
        return ClassDecision(Verdict.POSITIVE)
    orb = g.shortest_negative_cycle()
    return ClassDecision(Verdict.NOT_POSITIVE, orbit=orb, weight=orbit_sum(f, orb))


def min_cycle_mean(f: CylFn):
    """Exact minimum mean orbit weight and a shortest orbit attaining it."""
    g = BlockGraph(f)
    mean = g.karp_min_mean()
    return mean, g.cycle_with_mean(mean)


def is_order_unit(f: CylFn) -> ClassDecision:
    """Order unit iff every periodic orbit has strictly positive sum."""
    mean, orb = min_cycle_mean(f)
    verdict = Verdict.ORDER_UNIT if mean > 0 else Verdict.NOT_ORDER_UNIT
    return ClassDecision(verdict, orbit=orb, weight=orbit_sum(f, orb), mean=mean)


def coboundary_witness(f: CylFn) -> ClassDecision:
    """Either a potential ``xi`` with ``f = xi - xi o sigma`` or an orbit with nonzero sum."""
    g = BlockGraph(f)
    for sign in (1, -1):
        wt = [sign * w for w in g.weight]
        if g.bellman_ford_negative_cycle(wt) is not None:
            orb = g.shortest_negative_cycle(wt)
            return ClassDecision(Verdict.NOT_COBOUNDARY, orbit=orb, weight=orbit_sum(f, orb))
    # all cycle sums vanish: integrate along a spanning tree
    n = len(g.vertices)
    pot = [None] * n
    pot[0] = 0
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in g.succ[i]:
            if pot[j] is None:
                pot[j] = pot[i] - g.weight[i]
                queue.append(j)
    xi = CylFn(f.space, g.k, {w: pot[g.index[w]] for w in g.vertices})
    residual = f - (xi - compose_shift(xi))
    if any(residual.values()):
        raise AssertionError("potential does not reproduce f; graph is not strongly connected")
    return ClassDecision(Verdict.COBOUNDARY, potential=xi.reduced())


def classes_equal(f: CylFn, g: CylFn) -> ClassDecision:
    if f.space != g.space:
        raise SpaceMismatch("functions live on different shift spaces")
    return coboundary_witness(f - g)


def brute_force_positive(f: CylFn, max_period: int) -> bool:
    """Oracle: orbit sums of all orbits up to ``max_period`` are nonnegative."""
    from .shift import periodic_orbits_up_to

    return all(orbit_sum(f, o) >= 0 for o in periodic_orbits_up_to(f.space, max_period))
