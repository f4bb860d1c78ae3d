"""Exact zeta functions of Markov shifts and of cocycle-weighted orbit counts.

Three independent routes to the same series:

* ``1 / det(I - tA)`` from the integer characteristic polynomial,
* ``exp(sum_n |Per_n| t^n / n)`` from traces of matrix powers,
* the Euler product ``prod_gamma (1 - t^{beta_gamma})^{-1}`` over primitive
  orbits, where ``beta_gamma`` is the orbit sum of a weight function.

With weight ``c1`` the Euler product over ``X_A`` must reproduce the zeta
function of ``X_B``, and symmetrically.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Sequence

from .cylfn import CylFn, is_order_unit, orbit_sum
from .errors import NotOrderUnit
from .report import CertReport, merge, verdict
from .shift import periodic_orbits_up_to, per_count, ShiftSpace


class IntPolynomial:
    """Integer polynomial, constant term first, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def to_json(self) -> dict:
        return {"coeffs": [str(a) for a in self.coeffs]}


def _matmul(X, Y):
    n = len(X)
    return [[sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def char_reciprocal(S: ShiftSpace) -> IntPolynomial:
    """``det(I - tA)`` by Faddeev-LeVerrier; every division is exact."""
    A = [list(r) for r in S.rows]
    n = S.n
    # det(lambda I - A) = lambda^n + c[n-1] lambda^{n-1} + ... + c[0]
    c = [0] * (n + 1)
    c[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        M = _matmul(A, M)
        for i in range(n):
            M[i][i] += c[n - k + 1]
        AM = _matmul(A, M)
        tr = sum(AM[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        c[n - k] = -tr // k
    # t^n p(1/t) reverses the coefficient list
    return IntPolynomial(c[::-1])


class FormalSeries:
    """Truncated power series with exact rational coefficients modulo ``t^{L+1}``."""

    __slots__ = ("L", "coeffs")

    def __init__(self, L: int, coeffs: Sequence = ()):
        if L < 0:
            raise ValueError("truncation must be nonnegative")
        c = [Fraction(a) for a in list(coeffs)[: L + 1]]
        c += [Fraction(0)] * (L + 1 - len(c))
        self.L = L
        self.coeffs = tuple(c)

    @classmethod
    def one(cls, L: int) -> "FormalSeries":
        return cls(L, [1])

    @classmethod
    def from_poly(cls, p: IntPolynomial, L: int) -> "FormalSeries":
        return cls(L, p.coeffs)

    def _match(self, other) -> int:
        if isinstance(other, FormalSeries):
            return min(self.L, other.L)
        raise TypeError("expected a FormalSeries")

    def __add__(self, other):
        L = self._match(other)
        return FormalSeries(L, [a + b for a, b in zip(self.coeffs[: L + 1], other.coeffs)])

    def __sub__(self, other):
        L = self._match(other)
        return FormalSeries(L, [a - b for a, b in zip(self.coeffs[: L + 1], other.coeffs)])

    def __neg__(self):
        return FormalSeries(self.L, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FormalSeries(self.L, [a * other for a in self.coeffs])
        L = self._match(other)
        a, b = self.coeffs, other.coeffs
        return FormalSeries(L, [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(L + 1)])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FormalSeries) and self.L == other.L and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.L, self.coeffs))

    def __getitem__(self, n):
        return self.coeffs[n]

    def inverse(self) -> "FormalSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("constant term must be nonzero")
        b = [Fraction(1) / a[0]]
        for n in range(1, self.L + 1):
            b.append(-sum(a[i] * b[n - i] for i in range(1, n + 1)) / a[0])
        return FormalSeries(self.L, b)

    def derivative(self) -> "FormalSeries":
        """``d/dt``; the result keeps truncation ``L - 1``."""
        return FormalSeries(max(self.L - 1, 0), [n * self.coeffs[n] for n in range(1, self.L + 1)])

    def exp(self) -> "FormalSeries":
        f = self.coeffs
        if f[0] != 0:
            raise ValueError("exp needs a zero constant term")
        g = [Fraction(1)]
        for n in range(1, self.L + 1):
            g.append(sum(k * f[k] * g[n - k] for k in range(1, n + 1)) / n)
        return FormalSeries(self.L, g)

    def log(self) -> "FormalSeries":
        g = self.coeffs
        if g[0] != 1:
            raise ValueError("log needs constant term 1")
        # n f_n = n g_n - sum_{k<n} k f_k g_{n-k}
        f = [Fraction(0)]
        for n in range(1, self.L + 1):
            f.append((n * g[n] - sum(k * f[k] * g[n - k] for k in range(1, n))) / n)
        return FormalSeries(self.L, f)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def ints(self) -> list:
        if not self.is_integral():
            raise ArithmeticError("series has non-integral coefficients")
        return [int(a) for a in self.coeffs]

    def to_json(self) -> dict:
        return {"truncation": self.L, "coeffs": [str(a) for a in self.coeffs]}

    def __repr__(self):
        return f"FormalSeries({self.L}, {[str(a) for a in self.coeffs]})"


def zeta_series(S: ShiftSpace, L: int) -> FormalSeries:
    """``1 / det(I - tA)`` modulo ``t^{L+1}``."""
    return FormalSeries.from_poly(char_reciprocal(S), L).inverse()


def zeta_exp_trace(S: ShiftSpace, L: int) -> FormalSeries:
    """``exp(sum_{n<=L} tr(A^n) t^n / n)``; integrality of the result is asserted."""
    z = FormalSeries(L, [0] + [Fraction(per_count(S, n), n) for n in range(1, L + 1)]).exp()
    z.ints()
    return z


def truncation_period(c: CylFn, L: int):
    """``(P_max, decision)``: every orbit longer than ``P_max`` has weight above ``L``."""
    d = is_order_unit(c)
    if not d.holds:
        raise NotOrderUnit(d.mean, d.orbit)
    return floor(Fraction(L) / d.mean), d


def weighted_zeta(S: ShiftSpace, c: CylFn, L: int, p_max=None) -> FormalSeries:
    """Euler product ``prod_gamma (1 - t^{beta_gamma(c)})^{-1}`` modulo ``t^{L+1}``.

    Only orbits of period ``<= floor(L / min cycle mean)`` can have weight
    ``<= L``, so the product is complete.  ``p_max`` overrides the period
    cutoff (used to test that a larger cutoff changes nothing).
    """
    if c.space != S:
        raise ValueError("weight function lives on another shift space")
    bound, _ = truncation_period(c, L)
    if p_max is not None:
        bound = p_max
    coeffs = [1] + [0] * L
    for g in periodic_orbits_up_to(S, bound):
        beta = orbit_sum(c, g)
        if beta > L:
            continue
        for n in range(beta, L + 1):
            coeffs[n] += coeffs[n - beta]
    return FormalSeries(L, coeffs)


def first_discrepancy(f: FormalSeries, g: FormalSeries):
    for n, (a, b) in enumerate(zip(f.coeffs, g.coeffs)):
        if a != b:
            return n
    return None


def check_zeta_theorem(spec, L: int = 12) -> CertReport:
    """``zeta_B = zeta_[c1]`` on ``X_A`` and ``zeta_A = zeta_[c2]`` on ``X_B``, coefficientwise."""
    subs = []
    for label, S, c, T in (("c1", spec.A, spec.c1, spec.B), ("c2", spec.B, spec.c2, spec.A)):
        w = weighted_zeta(S, c, L)
        z = zeta_series(T, L)
        n = first_discrepancy(w, z)
        side = "B" if label == "c1" else "A"
        subs.append(CertReport(f"zeta[{label}]", verdict(n is None), f"zeta_[{label}] = zeta_{side}", L,
                               None if n is None else {"degree": n},
                               {"weighted": [str(a) for a in w.coeffs], "zeta": [str(a) for a in z.coeffs]}))
    rep = merge("zeta-identity", subs, "zeta_A = zeta_[c2] and zeta_B = zeta_[c1]", L)
    rep.details["series"] = {r.name: r.details for r in subs}
    return rep


def det_invariant(spec_or_A, B: ShiftSpace = None) -> CertReport:
    """``det(I - A) = det(I - B)``.  Accepts a spec, or two spaces for an unverified pairing."""
    if B is None:
        A, B = spec_or_A.A, spec_or_A.B
    else:
        A = spec_or_A
    da, db = char_reciprocal(A)(1), char_reciprocal(B)(1)
    return CertReport("determinant-invariant", verdict(da == db), "det(id - A) = det(id - B)",
                      counterexample=None if da == db else {"det_A": da, "det_B": db},
                      details={"det_A": da, "det_B": db})


def check_zeta_routes(S: ShiftSpace, L: int = 16) -> CertReport:
    """Determinant route against the exp-trace route."""
    a, b = zeta_series(S, L), zeta_exp_trace(S, L)
    n = first_discrepancy(a, b)
    return CertReport("zeta-routes", verdict(n is None), "1/det(I - tA) = exp(sum tr(A^n) t^n / n)", L,
                      None if n is None else {"degree": n})
