"""Shift-invariant Markov measures as exact functionals on cylinder functions.

A measure is known only through its cylinder masses, which is all that is
needed to integrate a :class:`CylFn`.  Pushing a measure ``mu`` on ``X_A``
through the transfer map gives ``nu(f) = mu(Psi_h f)`` on ``X_B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, sqrt
from typing import Optional, Sequence

import numpy as np

from .cylfn import CylFn, classes_equal, compose_shift
from .errors import IncompatibleSupport, NoConvergence, NotStochastic, SpaceMismatch
from .report import CertReport, merge, verdict
from .shift import ShiftSpace, admissible_words, word_str


@dataclass(frozen=True)
class MarkovMeasure:
    space: ShiftSpace
    P: tuple
    pi: tuple

    def __post_init__(self):
        S, n = self.space, self.space.n
        if len(self.P) != n or any(len(r) != n for r in self.P):
            raise NotStochastic(f"transition table must be {n}x{n}")
        if len(self.pi) != n:
            raise NotStochastic(f"stationary vector must have {n} entries")
        for i, row in enumerate(self.P):
            for j, p in enumerate(row):
                if p < 0:
                    raise NotStochastic(f"negative entry P[{i + 1}][{j + 1}]")
                if p > 0 and not S.allowed(i + 1, j + 1):
                    raise IncompatibleSupport(f"P[{i + 1}][{j + 1}] > 0 on a forbidden transition")
            if sum(row) != 1:
                raise NotStochastic(f"row {i + 1} sums to {sum(row)}")
        if any(p < 0 for p in self.pi) or sum(self.pi) != 1:
            raise NotStochastic("stationary vector must be a probability vector")
        for j in range(n):
            if sum(self.pi[i] * self.P[i][j] for i in range(n)) != self.pi[j]:
                raise NotStochastic("pi is not stationary for P")

    def cylinder_mass(self, w) -> Fraction:
        w = tuple(w)
        if not w:
            return Fraction(1)
        m = self.pi[w[0] - 1]
        for a, b in zip(w, w[1:]):
            m *= self.P[a - 1][b - 1]
        return m

    def evaluate(self, f: CylFn) -> Fraction:
        if f.space != self.space:
            raise SpaceMismatch("measure and function live on different shift spaces")
        return sum((self.cylinder_mass(w) * v for w, v in f.table.items()), Fraction(0))

    def to_json(self) -> dict:
        return {"P": [[str(p) for p in row] for row in self.P], "pi": [str(p) for p in self.pi]}


def stationary_vector(P) -> tuple:
    """Exact solution of ``pi P = pi``, ``sum pi = 1`` by Gaussian elimination."""
    n = len(P)
    # rows: (P^T - I) pi = 0 plus the normalization row
    M = [[Fraction(P[j][i]) - (1 if i == j else 0) for j in range(n)] + [Fraction(0)] for i in range(n)]
    M.append([Fraction(1)] * n + [Fraction(1)])
    rank_row = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(rank_row, len(M)) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank_row], M[piv] = M[piv], M[rank_row]
        pv = M[rank_row][col]
        M[rank_row] = [v / pv for v in M[rank_row]]
        for r in range(len(M)):
            if r != rank_row and M[r][col] != 0:
                fac = M[r][col]
                M[r] = [a - fac * b for a, b in zip(M[r], M[rank_row])]
        pivots.append(col)
        rank_row += 1
    if len(pivots) < n:
        raise NotStochastic("stationary vector is not unique")
    if any(M[r][n] != 0 for r in range(rank_row, len(M))):
        raise NotStochastic("no stationary probability vector")
    return tuple(M[r][n] for r in range(n))


def markov_measure(S: ShiftSpace, P: Sequence[Sequence], pi: Optional[Sequence] = None) -> MarkovMeasure:
    Pf = tuple(tuple(Fraction(p) for p in row) for row in P)
    for i, row in enumerate(Pf):
        for j, p in enumerate(row):
            if p > 0 and j < S.n and i < S.n and not S.allowed(i + 1, j + 1):
                raise IncompatibleSupport(f"P[{i + 1}][{j + 1}] > 0 on a forbidden transition")
    if pi is None:
        if len(Pf) != S.n or any(len(r) != S.n for r in Pf):
            raise NotStochastic(f"transition table must be {S.n}x{S.n}")
        if any(sum(r) != 1 for r in Pf):
            raise NotStochastic("rows of P must sum to 1")
        pi = stationary_vector(Pf)
    return MarkovMeasure(S, Pf, tuple(Fraction(p) for p in pi))


def bernoulli(S: ShiftSpace, weights: Sequence) -> MarkovMeasure:
    """Product measure; needs the full shift."""
    w = tuple(Fraction(p) for p in weights)
    return markov_measure(S, [w] * S.n, w)


def _perron(M: np.ndarray, tol: float, max_iters: int):
    n = M.shape[0]
    shifted = M + np.eye(n)
    v = np.ones(n) / n
    for _ in range(max_iters):
        v = shifted @ v
        v /= v.sum()
        lam = float((M @ v).sum())
        if np.max(np.abs(M @ v - lam * v)) < tol:
            return lam, v
    raise NoConvergence(tol, max_iters)


def parry_measure(S: ShiftSpace, tol: float = 1e-12, max_iters: int = 100000) -> MarkovMeasure:
    """Maximal-entropy measure, rationalized.

    Floating-point Perron data give ``P[i][j] = a_ij r_j / (lambda r_i)``;
    each entry is rationalized to about ``tol`` and each row is closed up
    exactly, then ``pi`` is solved exactly for the rational ``P``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = np.array(S.rows, dtype=float)
    lam, r = _perron(A, tol, max_iters)
    denom = max(10, ceil(1 / sqrt(tol)))
    P = []
    for i in range(S.n):
        cols = [j for j in range(S.n) if S.rows[i][j]]
        row = [Fraction(0)] * S.n
        for j in cols[:-1]:
            row[j] = Fraction(float(r[j] / (lam * r[i]))).limit_denominator(denom)
        row[cols[-1]] = 1 - sum(row)
        if row[cols[-1]] <= 0:
            raise NoConvergence(tol, max_iters)
        P.append(row)
    return markov_measure(S, P)


class PushedMeasure:
    """``nu = base o Psi_h`` on ``X_B``; ``base`` may itself be pushed, so round trips compose."""

    def __init__(self, spec, base):
        if base.space != spec.A:
            raise SpaceMismatch("base measure must live on X_A")
        self.spec = spec
        self.base = base
        self.space = spec.B

    def evaluate(self, f: CylFn) -> Fraction:
        from .transfer import psi_transfer

        if f.space != self.space:
            raise SpaceMismatch("function does not live on X_B")
        return self.base.evaluate(psi_transfer(self.spec, f))

    def cylinder_mass(self, w) -> Fraction:
        return self.evaluate(CylFn.indicator(self.space, w))


def pushforward(spec, mu) -> PushedMeasure:
    return PushedMeasure(spec, mu)


def eval_measure(mu, f: CylFn) -> Fraction:
    return mu.evaluate(f)


def cylinder_mass(mu, w) -> Fraction:
    return mu.cylinder_mass(w)


def cylinder_table(mu, D: int) -> dict:
    """``{word string: mass}`` for every admissible word of length ``1..D``."""
    return {word_str(w): mu.cylinder_mass(w) for d in range(1, D + 1) for w in admissible_words(mu.space, d)}


def _words(S, D):
    return [w for d in range(1, D + 1) for w in admissible_words(S, d)]


def check_invariance(nu, D: int = 4) -> CertReport:
    """``nu(chi_w o sigma) = nu(chi_w)`` for every admissible ``w`` with ``|w| <= D``."""
    bad = None
    words = _words(nu.space, D)
    for w in words:
        chi = CylFn.indicator(nu.space, w)
        if nu.evaluate(compose_shift(chi)) != nu.evaluate(chi):
            bad = list(w)
            break
    return CertReport("measure-invariance", verdict(bad is None), "nu(f o sigma) = nu(f)", D, bad,
                      {"cylinders": len(words)})


def check_positivity(nu, D: int = 4) -> CertReport:
    words = _words(nu.space, D)
    bad = next((list(w) for w in words if nu.cylinder_mass(w) < 0), None)
    return CertReport("measure-positivity", verdict(bad is None), "nu(chi_w) >= 0", D, bad,
                      {"cylinders": len(words)})


def check_normalization(spec, mu) -> CertReport:
    """Total mass of the pushforward: 1 when ``[c1] = [1]``, otherwise ``mu(c1)``."""
    nu = pushforward(spec, mu)
    mass = nu.evaluate(CylFn.constant(spec.B, 1))
    same = classes_equal(spec.c1, CylFn.constant(spec.A, 1))
    if same.holds:
        ok = mass == 1
        note = "probability preserved, mass = 1"
    else:
        ok = mass == mu.evaluate(spec.c1)
        note = f"probability not preserved, mass = {mass}"
    details = {"mass": mass, "c1_class_is_one": same.holds, "note": note}
    if same.orbit is not None:
        details["separating_orbit"] = same.orbit
    return CertReport("measure-normalization", verdict(ok), "nu(1_B) = mu(c1); equals 1 when [c1] = [1]",
                      details=details)


def check_measure_suite(spec, mu, D: int = 4) -> CertReport:
    nu = pushforward(spec, mu)
    subs = [check_invariance(nu, D), check_positivity(nu, D), check_normalization(spec, mu)]
    rep = merge("measure-transport", subs, "pushforward through Psi_h is an invariant positive functional", D)
    rep.details["subchecks"] = {r.name: r.verdict for r in subs}
    return rep
