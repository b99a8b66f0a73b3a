"""Algebraic Costas constructions.

Welch methods work in GF(p), Golomb methods in GF(q).  Field arithmetic runs on
exponents in ``[0, q-2]``; results leave as 1-based :class:`Permutation`.

The corner-removal variants (W2, W3, G3, G4, G4*, G4**, G5*) are all built the
same way: generate the parent array, confirm the pinned dots the theorem
promises, delete those rows and columns, and renumber what is left.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ._backend import kernels
from .core import Permutation, _trusted, is_costas
from .errors import (
    BadShift,
    ConditionUnmet,
    FieldTooSmall,
    NotPrime,
    NotPrimitive,
    W3NotApplicable,
)
from .finfield import FiniteField, euler_phi, field_of_order, is_prime, make_field, prime_power

WELCH = ("W1exp", "W1log", "W2", "W3")
GOLOMB = ("G2", "G3", "G4", "G4star", "G4dstar", "G5star")
EMERGENT = ("G0", "G1", "W0", "RW0", "RG1")
METHODS = WELCH + GOLOMB + EMERGENT

__all__ = [
    "ConstructionSpec",
    "GenerationOutcome",
    "METHODS",
    "welch_generate",
    "golomb_generate",
    "emergent_generate",
    "generate",
    "w1exp",
    "w1log",
    "g2",
    "enumerate_family",
    "family_order",
    "methods_at_order",
    "expected_family_size",
]


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters for one construction.  Only the fields a method uses are read.

    ``q`` may be given instead of ``p``/``m`` for Golomb methods.  ``alpha`` and
    ``beta`` are element codes (ints) or :class:`FieldElement` values.
    """

    method: str
    p: int | None = None
    m: int = 1
    q: int | None = None
    alpha: int | None = None
    beta: int | None = None
    c: int = 0
    t: int | None = None
    t1: int | None = None
    t2: int | None = None

    def field(self) -> FiniteField:
        if self.q is not None:
            return field_of_order(self.q)
        if self.p is None:
            raise ValueError(f"{self.method} needs p or q")
        return make_field(self.p, self.m)

    def as_dict(self) -> dict:
        return {k: (int(v) if v is not None and not isinstance(v, str) else v)
                for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class GenerationOutcome:
    permutation: Permutation
    verified: bool
    method: str
    parameters: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# raw constructions returning 1-based tuples

def _prime_field(p: int) -> FiniteField:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return make_field(p)


def _primitive(F: FiniteField, a, name="alpha") -> int:
    if a is None:
        raise ValueError(f"{name} is required")
    code = F(a).rep
    if not F.is_primitive(code):
        raise NotPrimitive(f"{name}={code} is not primitive in GF({F.q})")
    return code


def w1exp(p: int, alpha, c: int = 0) -> Permutation:
    """f(i) = alpha**(i-1+c) mod p on [p-1]."""
    F = _prime_field(p)
    a = _primitive(F, alpha)
    if not 0 <= c <= p - 2:
        raise BadShift(f"c={c} outside [0, {p - 2}]")
    return _trusted(F.pow(a, i - 1 + c) for i in range(1, p))


def w1log(p: int, alpha, c: int = 0) -> Permutation:
    return w1exp(p, alpha, c).inverse()


def g2(q: int, alpha, beta) -> Permutation:
    """f on [q-2] with alpha**f(i) + beta**i == 1."""
    F = field_of_order(q)
    a = _primitive(F, alpha, "alpha")
    b = _primitive(F, beta, "beta")
    if q - 2 < 1:
        raise FieldTooSmall(f"G2 over GF({q}) has order {q - 2}")
    log_a = F.log_table(a)
    return _trusted(log_a[F.sub(1, F.pow(b, i))] for i in range(1, q - 1))


def _remove_dots(g: Permutation, dots: Iterable[tuple[int, int]], method: str) -> Permutation:
    """Delete the given (column, row) dots and renumber the remaining ones."""
    dots = list(dots)
    for col, row in dots:
        if g[col - 1] != row:
            raise ConditionUnmet(f"{method}: expected dot at column {col}, row {row}")
    cols = {c for c, _ in dots}
    rows = {r for _, r in dots}
    keep_rows = sorted(set(range(1, len(g) + 1)) - rows)
    relabel = {r: k for k, r in enumerate(keep_rows, 1)}
    out = tuple(relabel[v] for i, v in enumerate(g, 1) if i not in cols)
    if not out:
        raise FieldTooSmall(f"{method} leaves an empty array")
    return _trusted(out)


def _w2(p, alpha):
    return _remove_dots(w1exp(p, alpha, 0), [(1, 1)], "W2")


def _w3(p):
    F = _prime_field(p)
    if p < 3 or not F.is_primitive(2 % p):
        raise W3NotApplicable(f"2 is not primitive mod {p}")
    if p - 3 < 1:
        raise FieldTooSmall(f"W3 at p={p} has order {p - 3}")
    return _remove_dots(w1exp(p, 2, 0), [(1, 1), (2, 2)], "W3")


def _golomb_field(spec: ConstructionSpec):
    F = spec.field()
    a = _primitive(F, spec.alpha, "alpha")
    b = _primitive(F, spec.beta if spec.beta is not None else spec.alpha, "beta")
    return F, a, b


def _need(cond: bool, msg: str):
    if not cond:
        raise ConditionUnmet(msg)


def _golomb(spec: ConstructionSpec) -> Permutation:
    method = spec.method
    F, a, b = _golomb_field(spec)
    q = F.q
    sums_to_one = F.add(a, b) == 1
    # alpha^2 + beta^-1 == 1
    second = F.add(F.mul(a, a), F.inv(b)) == 1
    if method == "G2":
        if q - 2 < 1:
            raise FieldTooSmall(f"G2 over GF({q}) has order {q - 2}")
        return g2(q, a, b)
    if method == "G3":
        _need(sums_to_one, "G3 requires alpha + beta = 1")
        if q - 3 < 1:
            raise FieldTooSmall(f"G3 over GF({q}) has order {q - 3}")
        return _remove_dots(g2(q, a, b), [(1, 1)], method)
    if method == "G4":
        _need(F.p == 2, "G4 requires characteristic 2")
        _need(sums_to_one, "G4 requires alpha + beta = 1")
        if q - 4 < 1:
            raise FieldTooSmall(f"G4 over GF({q}) has order {q - 4}")
        return _remove_dots(g2(q, a, b), [(1, 1), (2, 2)], method)
    if method == "G4star":
        _need(F.p > 2, "G4* requires odd characteristic")
        _need(sums_to_one and second, "G4* requires alpha + beta = 1 and alpha^2 + beta^-1 = 1")
        if q - 4 < 1:
            raise FieldTooSmall(f"G4* over GF({q}) has order {q - 4}")
        return _remove_dots(g2(q, a, b), [(1, 1), (2, q - 2)], method)
    if method == "G4dstar":
        _need(F.p > 2, "G4** requires odd characteristic")
        _need(a == b, "G4** requires beta = alpha")
        _need(F.add(a, F.mul(a, a)) == 1, "G4** requires alpha + alpha^2 = 1")
        if q - 4 < 1:
            raise FieldTooSmall(f"G4** over GF({q}) has order {q - 4}")
        return _remove_dots(g2(q, a, b), [(1, 2), (2, 1)], method)
    if method == "G5star":
        _need(sums_to_one and second, "G5* requires alpha + beta = 1 and alpha^2 + beta^-1 = 1")
        if q - 5 < 1:
            raise FieldTooSmall(f"G5* over GF({q}) has order {q - 5}")
        return _remove_dots(g2(q, a, b), [(1, 1), (2, q - 2), (q - 2, 2)], method)
    raise ValueError(f"not a Golomb method: {method}")


# ---------------------------------------------------------------------------
# public generators

def welch_generate(spec: ConstructionSpec) -> GenerationOutcome:
    method = spec.method
    if method == "W1exp":
        f = w1exp(spec.p, spec.alpha, spec.c)
    elif method == "W1log":
        f = w1log(spec.p, spec.alpha, spec.c)
    elif method == "W2":
        _prime_field(spec.p)
        if spec.p - 2 < 1:
            raise FieldTooSmall(f"W2 at p={spec.p} has order {spec.p - 2}")
        f = _w2(spec.p, spec.alpha)
    elif method == "W3":
        f = _w3(spec.p)
    else:
        raise ValueError(f"not a Welch method: {method}")
    return GenerationOutcome(f, True, method, spec.as_dict())


def golomb_generate(spec: ConstructionSpec) -> GenerationOutcome:
    f = _golomb(spec)
    return GenerationOutcome(f, True, spec.method, spec.as_dict())


def _emergent_candidate(spec: ConstructionSpec) -> tuple[int, ...]:
    method = spec.method
    if method in ("G0", "G1"):
        F, a, b = _golomb_field(spec)
        q = F.q
        if q - 2 < 1:
            raise FieldTooSmall(f"{method} needs q >= 3")
        g = g2(q, a, b)
        body = [v + 1 for v in g]
        return tuple([1] + body + ([q] if method == "G0" else []))
    if method == "W0":
        g = w1exp(spec.p, spec.alpha, spec.c)
        return tuple([1] + [v + 1 for v in g])
    if method == "RW0":
        p = spec.p
        g = w1exp(p, spec.alpha, spec.c)
        t = spec.t
        if t is None or not 2 <= t <= p - 1:
            raise BadShift(f"RW0 needs t in [2, {p - 1}]")
        return tuple([(v + t - 1) % p + 1 for v in g] + [t])
    if method == "RG1":
        F, a, b = _golomb_field(spec)
        q = F.q
        g = g2(q, a, b)
        t1, t2 = spec.t1, spec.t2
        for name, t in (("t1", t1), ("t2", t2)):
            if t is None or not 2 <= t <= q - 2:
                raise BadShift(f"RG1 needs {name} in [2, {q - 2}]")
        n = q - 1
        f = []
        for i in range(1, n + 1):
            if i == t1:
                f.append(t2)
            else:
                f.append((g[(i - t1 - 1) % n] + t2 - 1) % n + 1)
        return tuple(f)
    raise ValueError(f"not an emergent method: {method}")


def emergent_generate(spec: ConstructionSpec) -> GenerationOutcome:
    """Build the dot-addition / shift candidate and report whether it is Costas."""
    cand = _emergent_candidate(spec)
    f = Permutation(cand)
    return GenerationOutcome(f, is_costas(f), spec.method, spec.as_dict())


def generate(spec: ConstructionSpec) -> GenerationOutcome:
    if spec.method in WELCH:
        return welch_generate(spec)
    if spec.method in GOLOMB:
        return golomb_generate(spec)
    if spec.method in EMERGENT:
        return emergent_generate(spec)
    raise ValueError(f"unknown method {spec.method!r}; choose from {', '.join(METHODS)}")


# ---------------------------------------------------------------------------
# whole families

# order = size - offset, where size is p for Welch methods and q for Golomb ones
_OFFSETS = {"W1": 1, "W1exp": 1, "W1log": 1, "W2": 2, "W3": 3, "G2": 2, "G3": 3,
            "G4": 4, "G4star": 4, "G4dstar": 4, "G5star": 5, "G0": 0, "G1": 1,
            "W0": 0, "RW0": 0, "RG1": 1}

def family_order(method: str, size: int) -> int:
    """Order of the arrays a method yields from prime p or field size q = ``size``."""
    return size - _OFFSETS[method]


def _welch_params(p):
    F = _prime_field(p)
    return F, F.primitive_codes()


def _golomb_params(q):
    F = field_of_order(q)
    return F, F.primitive_codes()


def _harvest(candidates: list[tuple[int, ...]]) -> set[Permutation]:
    if not candidates:
        return set()
    verdicts = kernels.costas_batch(candidates)
    return {_trusted(c) for c, ok in zip(candidates, verdicts) if ok}


def enumerate_family(method: str, size: int) -> set[Permutation]:
    """Every distinct array the method produces at prime p / field size q = ``size``.

    ``"W1"`` covers both exponential and logarithmic Welch arrays.  For the
    emergent methods only candidates that pass the Costas check are returned.
    Methods whose side conditions never hold at ``size`` give the empty set.
    """
    out: set[Permutation] = set()
    if method in ("W1", "W1exp", "W1log", "W2", "W0", "RW0"):
        F, prims = _welch_params(size)
        p = size
        if method == "W2" and p - 2 < 1:
            return out
        if method == "W0":
            cands = [_emergent_candidate(ConstructionSpec("W0", p=p, alpha=a, c=c))
                     for a in prims for c in range(p - 1)]
            return _harvest(cands)
        if method == "RW0":
            cands = [_emergent_candidate(ConstructionSpec("RW0", p=p, alpha=a, c=c, t=t))
                     for a in prims for c in range(p - 1) for t in range(2, p)]
            return _harvest(cands)
        for a in prims:
            if method == "W2":
                out.add(_w2(p, a))
                continue
            for c in range(p - 1):
                f = w1exp(p, a, c)
                if method in ("W1", "W1exp"):
                    out.add(f)
                if method in ("W1", "W1log"):
                    out.add(f.inverse())
        return out
    if method == "W3":
        if not is_prime(size):
            raise NotPrime(f"{size} is not prime")
        try:
            return {_w3(size)}
        except (W3NotApplicable, FieldTooSmall):
            return out
    if method in GOLOMB or method in ("G0", "G1", "RG1"):
        F, prims = _golomb_params(size)
        q = F.q
        if method == "G2":
            if q - 2 < 1:
                return out
            return {g2(q, a, b) for a in prims for b in prims}
        if method in ("G0", "G1"):
            if q - 2 < 1:
                return out
            return _harvest([_emergent_candidate(ConstructionSpec(method, q=q, alpha=a, beta=b))
                             for a in prims for b in prims])
        if method == "RG1":
            bases = {g2(q, a, b) for a in prims for b in prims} if q - 2 >= 1 else set()
            n = q - 1
            cands = []
            for g in bases:
                for t1 in range(2, q - 1):
                    for t2 in range(2, q - 1):
                        f = [t2 if i == t1 else (g[(i - t1 - 1) % n] + t2 - 1) % n + 1
                             for i in range(1, n + 1)]
                        cands.append(tuple(f))
            return _harvest(cands)
        for a in prims:
            for b in prims:
                try:
                    out.add(_golomb(ConstructionSpec(method, q=q, alpha=a, beta=b)))
                except (ConditionUnmet, FieldTooSmall):
                    pass
        return out
    raise ValueError(f"unknown family {method!r}")


def expected_family_size(method: str, size: int) -> int:
    """Closed-form family sizes: 2(p-1)phi(p-1) for W1, phi(q-1)^2/m for G2."""
    if method == "W1":
        return 2 * (size - 1) * euler_phi(size - 1)
    if method == "G2":
        p, m = prime_power(size)
        return euler_phi(size - 1) ** 2 // m
    raise ValueError(f"no closed form for {method}")


def methods_at_order(n: int) -> dict[str, int]:
    """Methods that can produce arrays of order n, mapped to their p or q."""
    out = {}
    for method in ("W1", "W2", "W3", "W0", "RW0"):
        p = n + _OFFSETS[method]
        if is_prime(p):
            out[method] = p
    for method in ("G2", "G3", "G4", "G4star", "G4dstar", "G5star", "G0", "G1", "RG1"):
        q = n + _OFFSETS[method]
        pm = prime_power(q)
        if pm is None:
            continue
        if method == "G4" and pm[0] != 2:
            continue
        if method in ("G4star", "G4dstar") and pm[0] == 2:
            continue
        out[method] = q
    return out
