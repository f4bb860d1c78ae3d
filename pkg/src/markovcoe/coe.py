"""Continuous orbit equivalences presented by finite-state transducers.

``h: X_A -> X_B`` is a deterministic letter-to-word transducer started in its
initial state.  Together with ``hinv`` and the four exponent functions
``k1, l1`` (on ``X_A``) and ``k2, l2`` (on ``X_B``) it forms a
:class:`CoeSpec`.  All identities are checked exactly on eventually periodic
points, which are dense; a passing report means "certified to the bound",
not a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cylfn import CylFn, birkhoff_at, orbit_sum
from .errors import (
    AlternativeCocycleInvalid,
    InadmissibleOutput,
    NotEventuallyPeriodicAt,
    NotPeriodic,
    NullCycle,
    PreconditionFailed,
    SpaceMismatch,
    UndefinedTransition,
    ValidationError,
)
from .report import FAIL, PASS, CertReport, merge, verdict
from .shift import (
    EvPeriodicPoint,
    Orbit,
    ShiftSpace,
    admissible_words,
    evps_up_to,
    is_eventually_periodic_at,
    normalize_evp,
    periodic_orbits_up_to,
    rotate,
    shift_evp,
    word_str,
)


class Transducer:
    """Deterministic transducer ``(state, input symbol) -> (next state, output word)``."""

    def __init__(self, source: ShiftSpace, target: ShiftSpace, states: Sequence, initial, rules: dict):
        self.source = source
        self.target = target
        self.states = tuple(states)
        self.initial = initial
        self.rules = {(q, int(a)): (nq, tuple(out)) for (q, a), (nq, out) in rules.items()}
        self._prefix_cache = {}
        self._validate()

    @classmethod
    def single_state(cls, source, target, images: dict) -> "Transducer":
        """Positionwise substitution ``a -> images[a]``."""
        return cls(source, target, ["s0"], "s0", {("s0", a): ("s0", images[a]) for a in source.symbols})

    @classmethod
    def identity(cls, S: ShiftSpace) -> "Transducer":
        return cls.single_state(S, S, {a: (a,) for a in S.symbols})

    def _validate(self):
        if self.initial not in self.states:
            raise ValidationError(f"initial state {self.initial!r} is not a state")
        for (q, a), (nq, out) in self.rules.items():
            if q not in self.states or nq not in self.states:
                raise ValidationError(f"rule ({q!r}, {a}) refers to an unknown state")
            if any(not 1 <= b <= self.target.n for b in out):
                raise InadmissibleOutput(f"rule ({q!r}, {a}) emits a symbol outside the target alphabet")
        # reachable (state, last input, last output) triples over admissible inputs
        start = (self.initial, None, None)
        seen = {start}
        stack = [start]
        pairs = set()
        zero_edges = {}
        while stack:
            q, a, o = stack.pop()
            for b in self.source.symbols:
                if a is not None and not self.source.allowed(a, b):
                    continue
                if (q, b) not in self.rules:
                    raise UndefinedTransition(f"no rule for state {q!r} reading {b}")
                nq, out = self.rules[(q, b)]
                emitted = ((o,) if o is not None else ()) + out
                if not self.target.is_admissible(emitted):
                    raise InadmissibleOutput(f"output {word_str(emitted)} is not admissible in the target")
                node = (nq, b, out[-1] if out else o)
                if a is not None:
                    pairs.add((q, a))
                pairs.add((nq, b))
                if not out:
                    zero_edges.setdefault((q, a), set()).add((nq, b))
                if node not in seen:
                    seen.add(node)
                    stack.append(node)
        self._pairs = pairs
        # a cycle of empty outputs among reachable (state, last input) pairs
        color = {}

        def visit(v):
            color[v] = 1
            for w in zero_edges.get(v, ()):
                if color.get(w) == 1:
                    raise NullCycle(f"cycle with empty output through state {w[0]!r}")
                if w not in color:
                    visit(w)
            color[v] = 2

        for v in list(zero_edges):
            if v not in color:
                visit(v)

    def step(self, q, a):
        try:
            return self.rules[(q, a)]
        except KeyError:
            raise UndefinedTransition(f"no rule for state {q!r} reading {a}") from None

    def apply_prefix(self, w) -> tuple:
        """Output emitted while reading ``w`` from the initial state."""
        w = tuple(w)
        hit = self._prefix_cache.get(w)
        if hit is not None:
            return hit[1]
        if not self.source.is_admissible(w):
            raise UndefinedTransition(f"input {word_str(w)} is not admissible")
        if w:
            q, out = self._run(w[:-1])
            nq, o = self.step(q, w[-1])
            res = (nq, out + o)
        else:
            res = (self.initial, ())
        self._prefix_cache[w] = res
        return res[1]

    def _run(self, w):
        self.apply_prefix(w)
        return self._prefix_cache[tuple(w)]

    def required_input_depth(self, m: int) -> int:
        """Least ``d`` such that every admissible input of length ``d`` emits ``>= m`` symbols."""
        if m <= 0:
            return 0
        layer = {(self.initial, None): 0}
        d = 0
        while min(layer.values()) < m:
            nxt = {}
            for (q, a), length in layer.items():
                for b in self.source.symbols:
                    if a is not None and not self.source.allowed(a, b):
                        continue
                    nq, out = self.step(q, b)
                    key = (nq, b)
                    val = length + len(out)
                    if key not in nxt or val < nxt[key]:
                        nxt[key] = val
            layer = nxt
            d += 1
        return d

    def __call__(self, x: EvPeriodicPoint) -> EvPeriodicPoint:
        return apply_transducer(self, x)

    def to_json(self) -> dict:
        return {
            "states": list(self.states),
            "initial": self.initial,
            "rules": [
                {"state": q, "input": a, "output": list(out), "next": nq}
                for (q, a), (nq, out) in sorted(self.rules.items(), key=lambda kv: (str(kv[0][0]), kv[0][1]))
            ],
        }


def apply_transducer(T: Transducer, x: EvPeriodicPoint) -> EvPeriodicPoint:
    """Exact image of an eventually periodic point.

    The transient is read once; the cycle is then read repeatedly until the
    state at the start of a repetition recurs.  Output emitted between the
    two occurrences is the image's period word.
    """
    if x.space != T.source:
        raise SpaceMismatch("point does not live on the transducer's source space")
    q = T.initial
    out = []
    for a in x.transient:
        q, o = T.step(q, a)
        out.extend(o)
    marks = {}
    while q not in marks:
        marks[q] = len(out)
        for a in x.cycle:
            q, o = T.step(q, a)
            out.extend(o)
    start = marks[q]
    period = out[start:]
    if not period:
        raise NullCycle("periodic input emitted no output")
    return normalize_evp(T.target, out[:start], period)


def apply_prefix(T: Transducer, w) -> tuple:
    return T.apply_prefix(w)


def required_input_depth(T: Transducer, m: int) -> int:
    return T.required_input_depth(m)


def transducer_from_json(source: ShiftSpace, target: ShiftSpace, data: dict) -> Transducer:
    rules = {(r["state"], int(r["input"])): (r["next"], tuple(r["output"])) for r in data["rules"]}
    return Transducer(source, target, data["states"], data["initial"], rules)


@dataclass(frozen=True, eq=False)
class CoeSpec:
    A: ShiftSpace
    B: ShiftSpace
    h: Transducer
    hinv: Transducer
    k1: CylFn
    l1: CylFn
    k2: CylFn
    l2: CylFn

    def __post_init__(self):
        if self.h.source != self.A or self.h.target != self.B:
            raise ValidationError("h must map X_A to X_B")
        if self.hinv.source != self.B or self.hinv.target != self.A:
            raise ValidationError("hinv must map X_B to X_A")
        for name in ("k1", "l1"):
            if getattr(self, name).space != self.A:
                raise ValidationError(f"{name} must be a function on X_A")
        for name in ("k2", "l2"):
            if getattr(self, name).space != self.B:
                raise ValidationError(f"{name} must be a function on X_B")
        for name in ("k1", "l1", "k2", "l2"):
            if getattr(self, name).min() < 0:
                raise ValidationError(f"{name} takes negative values")

    def inverse(self) -> "CoeSpec":
        """The same equivalence read from the other side (``hinv`` as the forward map)."""
        return CoeSpec(self.B, self.A, self.hinv, self.h, self.k2, self.l2, self.k1, self.l1)

    @property
    def c1(self) -> CylFn:
        return self.l1 - self.k1

    @property
    def c2(self) -> CylFn:
        return self.l2 - self.k2

    @classmethod
    def identity(cls, S: ShiftSpace) -> "CoeSpec":
        T = Transducer.identity(S)
        zero, one = CylFn.constant(S, 0), CylFn.constant(S, 1)
        return cls(S, S, T, T, zero, one, zero, one)

    def to_json(self) -> dict:
        return {
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "h": self.h.to_json(),
            "hinv": self.hinv.to_json(),
            "k1": self.k1.to_json(),
            "l1": self.l1.to_json(),
            "k2": self.k2.to_json(),
            "l2": self.l2.to_json(),
        }


def derive_single_state_cocycles(T: Transducer):
    """``(k, l)`` with ``k = 0`` and ``l(x) = |image of x_1|`` for a positionwise substitution."""
    if len(T.states) != 1:
        raise ValueError("derivation shortcut only applies to single-state transducers")
    q = T.states[0]
    S = T.source
    return CylFn.constant(S, 0), CylFn.from_symbols(S, {a: len(T.rules[(q, a)][1]) for a in S.symbols})


def cocycle_c(spec: CoeSpec, side: str = "A") -> CylFn:
    if side == "A":
        return spec.c1
    if side == "B":
        return spec.c2
    raise ValueError("side must be 'A' or 'B'")


def _spec_for(spec: CoeSpec, x: EvPeriodicPoint, side: Optional[str]) -> CoeSpec:
    if side is None:
        side = "A" if x.space == spec.A else "B"
    s = spec if side == "A" else spec.inverse()
    if x.space != s.A:
        raise SpaceMismatch("point does not live on the requested side")
    return s


# ---------------------------------------------------------------------------
# certification of the orbit equations


def orbit_equation_holds(spec: CoeSpec, x: EvPeriodicPoint, k1: CylFn = None, l1: CylFn = None) -> bool:
    """``sigma_B^{k1(x)} h(sigma_A x) == sigma_B^{l1(x)} h(x)``."""
    k1 = spec.k1 if k1 is None else k1
    l1 = spec.l1 if l1 is None else l1
    hx = spec.h(x)
    hsx = spec.h(shift_evp(x, 1))
    return shift_evp(hsx, k1(x)) == shift_evp(hx, l1(x))


def _prefix_consistent(spec: CoeSpec, w) -> bool:
    out = spec.h.apply_prefix(w)
    out2 = spec.h.apply_prefix(w[1:])
    a = out[spec.l1.eval_word(w):]
    b = out2[spec.k1.eval_word(w):]
    m = min(len(a), len(b))
    return a[:m] == b[:m]


def verify_coe(spec: CoeSpec, bound: int = 8, depth: int = 6) -> CertReport:
    """Exhaustive check of both orbit equations and both round trips.

    Covers every eventually periodic point with ``|transient| + |cycle| <= bound``
    on each side, plus output-prefix consistency of the first equation on all
    cylinders of length ``max(depth of k, l) .. depth``.
    """
    subs = []
    sides = (("h", spec), ("hinv", spec.inverse()))
    for label, s in sides:
        pts = evps_up_to(s.A, bound)
        bad = next((x for x in pts if not orbit_equation_holds(s, x)), None)
        subs.append(CertReport(f"orbit-equation[{label}]", verdict(bad is None),
                               f"sigma^k(x) {label}(sigma x) = sigma^l(x) {label}(x)", bound, bad,
                               {"points": len(pts)}))
        bad = next((x for x in pts if s.hinv(s.h(x)) != x), None)
        subs.append(CertReport(f"round-trip[{label}]", verdict(bad is None),
                               f"{label}^-1({label}(x)) = x", bound, bad, {"points": len(pts)}))
        dmin = max(1, s.k1.depth, s.l1.depth)
        words = [w for d in range(dmin, max(dmin, depth) + 1) for w in admissible_words(s.A, d)]
        badw = next((w for w in words if not _prefix_consistent(s, w)), None)
        subs.append(CertReport(f"prefix-consistency[{label}]", verdict(badw is None),
                               "output prefixes of both sides of the orbit equation agree", depth,
                               None if badw is None else list(badw), {"words": len(words)}))
    rep = merge("coe-certification", subs, "continuous orbit equivalence certified to bound", bound)
    rep.details["subchecks"] = {r.name: r.verdict for r in subs}
    rep.details["statement"] = f"certified to bound {bound}"
    return rep


def check_cocycle_uniqueness(spec: CoeSpec, k1_alt: CylFn, l1_alt: CylFn, bound: int = 6) -> CertReport:
    for x in evps_up_to(spec.A, bound):
        if not orbit_equation_holds(spec, x, k1_alt, l1_alt):
            raise AlternativeCocycleInvalid(f"alternative exponents fail the orbit equation at {x}", x)
    ok = (l1_alt - k1_alt) == spec.c1
    return CertReport("cocycle-uniqueness", verdict(ok), "l1' - k1' = l1 - k1", bound)


def check_taileq(spec: CoeSpec, x: EvPeriodicPoint, z: EvPeriodicPoint, p: int, q: int) -> CertReport:
    if shift_evp(x, p) != shift_evp(z, q):
        raise PreconditionFailed("sigma^p x != sigma^q z")
    k1, l1 = spec.k1, spec.l1
    lhs = shift_evp(spec.h(x), birkhoff_at(l1, x, p) + birkhoff_at(k1, z, q))
    rhs = shift_evp(spec.h(z), birkhoff_at(k1, x, p) + birkhoff_at(l1, z, q))
    return CertReport("tail-equivalence", verdict(lhs == rhs),
                      "sigma^(l1^p(x)+k1^q(z)) h(x) = sigma^(k1^p(x)+l1^q(z)) h(z)",
                      counterexample=None if lhs == rhs else {"x": x, "z": z, "p": p, "q": q},
                      details={"lhs": lhs, "rhs": rhs})


def klp_sides(spec: CoeSpec, x: EvPeriodicPoint, p: int):
    """Both sides of ``k2^{l1^p}(hx) + l2^{k1^p}(h sigma^p x) + p = k2^{k1^p}(h sigma^p x) + l2^{l1^p}(hx)``."""
    n = birkhoff_at(spec.l1, x, p)
    m = birkhoff_at(spec.k1, x, p)
    hx = spec.h(x)
    hpx = spec.h(shift_evp(x, p))
    lhs = birkhoff_at(spec.k2, hx, n) + birkhoff_at(spec.l2, hpx, m) + p
    rhs = birkhoff_at(spec.k2, hpx, m) + birkhoff_at(spec.l2, hx, n)
    return lhs, rhs


def check_klp(spec: CoeSpec, x: EvPeriodicPoint, p: int, side: Optional[str] = None) -> CertReport:
    s = _spec_for(spec, x, side)
    lhs, rhs = klp_sides(s, x, p)
    return CertReport("exponent-identity", verdict(lhs == rhs),
                      "k2^{l1^p}(hx) + l2^{k1^p}(h s^p x) + p = k2^{k1^p}(h s^p x) + l2^{l1^p}(hx)",
                      counterexample=None if lhs == rhs else {"x": x, "p": p},
                      details={"lhs": lhs, "rhs": rhs})


# ---------------------------------------------------------------------------
# periodic orbits


@dataclass(frozen=True)
class TwoSidedPeriodicPt:
    """A periodic bi-infinite sequence: ``orbit`` rotated by ``phase`` sits at coordinates ``1, 2, ...``."""

    orbit: Orbit
    phase: int

    @property
    def period(self) -> int:
        return self.orbit.period

    def to_one_sided(self) -> EvPeriodicPoint:
        return self.orbit.point(self.phase)

    def shift(self, m: int) -> "TwoSidedPeriodicPt":
        return TwoSidedPeriodicPt(self.orbit, (self.phase + m) % self.orbit.period)

    def to_json(self) -> dict:
        return {"orbit": list(self.orbit.cycle), "phase": self.phase}

    def __str__(self):
        return f"{self.orbit}@{self.phase}"


def lift_periodic(x: EvPeriodicPoint) -> TwoSidedPeriodicPt:
    if not x.is_periodic:
        raise NotPeriodic(f"{x} is not periodic")
    orb = Orbit.of(x.space, x.cycle)
    return TwoSidedPeriodicPt(orb, _rotation_index(orb.cycle, x.cycle))


def _rotation_index(base, w) -> int:
    for t in range(len(base)):
        if rotate(base, t) == tuple(w):
            return t
    raise ValueError("not a rotation")


def _periodic_data(spec: CoeSpec, x: EvPeriodicPoint, p: int):
    if not x.is_periodic or p < 1 or p % len(x.cycle):
        raise NotPeriodic(f"{x} is not {p}-periodic")
    n = birkhoff_at(spec.k1, x, p)
    q = birkhoff_at(spec.l1, x, p) - n
    return n, q


def psi_h(spec: CoeSpec, x: EvPeriodicPoint, p: int) -> TwoSidedPeriodicPt:
    """The two-sided periodic point extending the ``c1^p(x)``-periodic tail ``sigma^{k1^p(x)} h(x)``."""
    n, q = _periodic_data(spec, x, p)
    tail = shift_evp(spec.h(x), n)
    if q <= 0 or not tail.is_periodic or q % len(tail.cycle):
        raise PreconditionFailed(f"sigma^{n} h({x}) = {tail} is not {q}-periodic")
    orb = Orbit.of(spec.B, tail.cycle)
    t = _rotation_index(orb.cycle, tail.cycle)
    return TwoSidedPeriodicPt(orb, (t - n) % orb.period)


def check_psi_equations(spec: CoeSpec, x: EvPeriodicPoint, p: int) -> CertReport:
    """The three defining relations of the periodic-point map at one point."""
    n, q = _periodic_data(spec, x, p)
    y = psi_h(spec, x, p)
    y1 = psi_h(spec, shift_evp(x, 1), p)
    anchored = shift_evp(y.to_one_sided(), n) == shift_evp(spec.h(x), n)
    intertwined = y1.shift(spec.k1(x)) == y.shift(spec.l1(x))
    periodic = y.shift(q) == y
    ok = anchored and intertwined and periodic
    return CertReport("periodic-point-map", verdict(ok), "anchoring, intertwining and periodicity of psi_h",
                      counterexample=None if ok else {"x": x, "p": p},
                      details={"anchored": anchored, "intertwined": intertwined, "periodic": periodic})


def xi_h(spec: CoeSpec, gamma: Orbit) -> Orbit:
    if gamma.space != spec.A:
        raise SpaceMismatch("orbit does not live on X_A")
    return psi_h(spec, gamma.point(0), gamma.period).orbit


def check_xi_representative(spec: CoeSpec, gamma: Orbit) -> CertReport:
    images = {psi_h(spec, pt, gamma.period).orbit for pt in gamma.points()}
    return CertReport("orbit-map-well-defined", verdict(len(images) == 1),
                      "psi_h of every rotation lies in one orbit",
                      counterexample=None if len(images) == 1 else gamma)


def check_orbit_length(spec: CoeSpec, gamma: Orbit) -> CertReport:
    img = xi_h(spec, gamma)
    beta = orbit_sum(spec.c1, gamma)
    return CertReport("orbit-length", verdict(img.period == beta), "|xi_h(gamma)| = beta_gamma([c1])",
                      counterexample=None if img.period == beta else gamma,
                      details={"orbit": gamma, "image": img, "length": img.period, "beta": beta})


def check_orbit_bijection(spec: CoeSpec, P: int) -> CertReport:
    """``xi_hinv o xi_h = id`` on orbits of period <= P on both sides, and injectivity."""
    inv = spec.inverse()
    subs = []
    for label, s, t in (("A", spec, inv), ("B", inv, spec)):
        orbits = periodic_orbits_up_to(s.A, P)
        images = {}
        bad = None
        for g in orbits:
            img = xi_h(s, g)
            if xi_h(t, img) != g or img in images:
                bad = g
                break
            images[img] = g
        subs.append(CertReport(f"orbit-bijection[{label}]", verdict(bad is None),
                               "xi_hinv(xi_h(gamma)) = gamma", P, bad, {"orbits": len(orbits)}))
    rep = merge("orbit-bijection", subs, "xi_hinv o xi_h = id and xi_h o xi_hinv = id", P)
    rep.details["orbits"] = {r.name: r.details.get("orbits") for r in subs}
    return rep


def orbit_table(spec: CoeSpec, P: int) -> list:
    rows = []
    for g in periodic_orbits_up_to(spec.A, P):
        img = xi_h(spec, g)
        beta = orbit_sum(spec.c1, g)
        rows.append({"orbit": g, "image": img, "period": g.period, "image_period": img.period,
                     "beta_c1": beta, "equal": img.period == beta})
    return rows


def lemma_transport_data(spec: CoeSpec, x: EvPeriodicPoint, r: int, s: int):
    """``(z, r', s')`` with ``z = sigma^{l1^s(x)+k1^s(x)} h(x)``, ``r' = l1^q(sigma^s x)``, ``s' = k1^q(sigma^s x)``."""
    if not (r > s >= 0) or not is_eventually_periodic_at(x, r, s):
        raise PreconditionFailed(f"sigma^{r} x != sigma^{s} x")
    q = r - s
    xs = shift_evp(x, s)
    z = shift_evp(spec.h(x), birkhoff_at(spec.l1, x, s) + birkhoff_at(spec.k1, x, s))
    return z, birkhoff_at(spec.l1, xs, q), birkhoff_at(spec.k1, xs, q)


def _omega_any(f: CylFn, z: EvPeriodicPoint, r: int, s: int) -> int:
    return birkhoff_at(f, z, r) - birkhoff_at(f, z, s)


def check_lemma_omega_transport(spec: CoeSpec, f: CylFn, x: EvPeriodicPoint, r: int, s: int) -> CertReport:
    from .transfer import psi_transfer

    z, rp, sp = lemma_transport_data(spec, x, r, s)
    shift_ok = shift_evp(z, rp) == shift_evp(z, sp) and rp != sp
    lhs = _omega_any(psi_transfer(spec, f), x, r, s)
    rhs = _omega_any(f, z, rp, sp)
    ok = shift_ok and lhs == rhs
    return CertReport("omega-transport", verdict(ok), "omega_{Psi_h f}^{r,s}(x) = omega_f^{r',s'}(z)",
                      counterexample=None if ok else {"x": x, "r": r, "s": s},
                      details={"z": z, "r'": rp, "s'": sp, "lhs": lhs, "rhs": rhs})


def check_cor_positive(spec: CoeSpec, x: EvPeriodicPoint, r: int, s: int) -> CertReport:
    if not (r > s >= 0) or not is_eventually_periodic_at(x, r, s):
        raise PreconditionFailed(f"sigma^{r} x != sigma^{s} x")
    k1, l1 = spec.k1, spec.l1
    lhs = birkhoff_at(l1, x, r) + birkhoff_at(k1, x, s)
    rhs = birkhoff_at(k1, x, r) + birkhoff_at(l1, x, s)
    cq = birkhoff_at(spec.c1, shift_evp(x, s), r - s)
    ok = lhs > rhs and cq > 0
    return CertReport("cocycle-positive-on-cycles", verdict(ok),
                      "l1^r(x) + k1^s(x) > k1^r(x) + l1^s(x) and c1^q(sigma^s x) > 0",
                      counterexample=None if ok else {"x": x, "r": r, "s": s},
                      details={"lhs": lhs, "rhs": rhs, "c1^q": cq})


def check_rminuss(spec: CoeSpec, x: EvPeriodicPoint, r: int, s: int) -> CertReport:
    z, rp, sp = lemma_transport_data(spec, x, r, s)
    val = birkhoff_at(spec.c2, shift_evp(z, sp), rp - sp)
    return CertReport("return-time-identity", verdict(val == r - s), "c2^{q'}(sigma^{s'} z) = r - s",
                      counterexample=None if val == r - s else {"x": x, "r": r, "s": s},
                      details={"value": val, "r-s": r - s})


def check_factor(spec: CoeSpec, x: EvPeriodicPoint, n: int) -> CertReport:
    if not x.is_periodic:
        raise NotPeriodic(f"{x} is not periodic")
    p = x.least_period
    lhs = birkhoff_at(spec.c1, x, n * p)
    rhs = n * birkhoff_at(spec.c1, x, p)
    return CertReport("cocycle-multiplicativity", verdict(lhs == rhs), "c1^{np}(x) = n c1^p(x)",
                      details={"lhs": lhs, "rhs": rhs})


def eventual_period_pairs(x: EvPeriodicPoint, multiples: int = 1):
    """``(r, s)`` pairs with ``sigma^r x = sigma^s x``: least ``s``, ``r - s`` a multiple of the period."""
    s = len(x.transient)
    p = len(x.cycle)
    return [(s + n * p, s) for n in range(1, multiples + 1)]
