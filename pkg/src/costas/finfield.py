"""Arithmetic in GF(p) and GF(p^m).

Elements are stored as integer codes ``sum(c_i * p**i)`` over the coefficients
of their polynomial representative, so GF(p) elements are just residues and
every element of GF(q) is an int in ``[0, q)``.  The modulus for m > 1 is the
lexicographically smallest monic irreducible polynomial (coefficients compared
from the high degree down), which makes the encoding reproducible.

Multiplication goes through exp/log tables built against an internal
generator; discrete logs to any primitive base are served from a per-base
table built on first use.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

from sympy import factorint, isprime, totient

from .errors import FieldMismatch, NotPrime, NotPrimitive, ZeroArgument

__all__ = [
    "FiniteField",
    "FieldElement",
    "make_field",
    "field_of_order",
    "prime_power",
    "primitive_elements",
    "discrete_log",
    "primitive_pairs_summing_to_one",
    "euler_phi",
    "is_prime",
]


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


def euler_phi(n: int) -> int:
    return int(totient(n))


def prime_factors(n: int) -> list[int]:
    return sorted(factorint(n))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m``, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, m), = f.items()
    return int(p), int(m)


def _digits(code: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _undigits(digits, p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """Multiply coefficient lists (low degree first) modulo a monic ``mod``."""
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for j in range(m + 1):
                prod[k - m + j] = (prod[k - m + j] - c * mod[j]) % p
    prod = prod[:m] + [0] * (m - len(prod))
    return prod


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over GF(p); both low degree first, b with nonzero lead."""
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return a[:db]


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(coeffs) - 1
    if m <= 1:
        return m == 1
    for d in range(1, m // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if not any(_poly_rem(coeffs, divisor, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    # monic, so the numeric order of the low part is the high-degree-first lexicographic order
    for low in range(p**m):
        coeffs = _digits(low, p, m) + [1]
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """The field GF(p**m).  Call the field with an int code to get an element."""

    def __init__(self, p: int, m: int = 1):
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(smallest_irreducible(p, m))
        self._build_tables()

    def _build_tables(self):
        p, q, m = self.p, self.q, self.m
        if q == 2:
            self._exp = [1]
            self._log = [None, 0]
            self._gen = 1
            return
        mod = list(self.modulus)
        order = q - 1
        cofactors = [order // r for r in prime_factors(order)]

        def mul(a, b):
            return _undigits(_poly_mulmod(_digits(a, p, m), _digits(b, p, m), mod, p), p)

        def power(a, e):
            result, base = 1, a
            while e:
                if e & 1:
                    result = mul(result, base)
                base = mul(base, base)
                e >>= 1
            return result

        for g in range(2, q):
            if all(power(g, c) != 1 for c in cofactors):
                break
        exp = [1] * order
        for k in range(1, order):
            exp[k] = mul(exp[k - 1], g)
        log = [None] * q
        for k, x in enumerate(exp):
            log[x] = k
        self._gen = g
        self._exp = exp
        self._log = log

    # raw arithmetic on codes
    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, self.m), _digits(b, p, self.m))], p)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        p = self.p
        return _undigits([-x % p for x in _digits(a, p, self.m)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def order_of(self, a: int) -> int:
        if a == 0:
            raise ZeroArgument("0 has no multiplicative order")
        n = self.q - 1
        return n // gcd(n, self._log[a])

    def is_primitive(self, a: int) -> bool:
        return a != 0 and gcd(self.q - 1, self._log[a]) == 1

    def primitive_codes(self) -> list[int]:
        return sorted(x for x in range(1, self.q) if self.is_primitive(x))

    @lru_cache(maxsize=None)
    def log_table(self, base: int) -> tuple:
        """Exponent table for a primitive ``base``: ``table[x] == log_base(x)``."""
        if not self.is_primitive(base):
            raise NotPrimitive(f"{base} is not primitive in GF({self.q})")
        table = [None] * self.q
        x = 1
        for k in range(self.q - 1):
            table[x] = k
            x = self.mul(x, base)
        return tuple(table)

    def log(self, base: int, x: int) -> int:
        if x == 0:
            raise ZeroArgument("logarithm of 0")
        return self.log_table(base)[x]

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        value = int(value)
        if self.m == 1:
            value %= self.p
        elif not 0 <= value < self.q:
            raise ValueError(f"code {value} out of range for GF({self.q})")
        return FieldElement(self, value)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, x) for x in range(self.q)]

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


class FieldElement:
    __slots__ = ("field", "rep")

    def __init__(self, field: FiniteField, rep: int):
        self.field = field
        self.rep = rep

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("cannot mix elements of different fields")
            return other.rep
        if isinstance(other, int):
            return self.field(other).rep
        return NotImplemented

    def _wrap(self, rep):
        return FieldElement(self.field, rep)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.rep, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.rep, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.rep))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.rep, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.rep, self.field.inv(o)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.rep))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.rep, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.rep))

    def order(self) -> int:
        return self.field.order_of(self.rep)

    def is_primitive(self) -> bool:
        return self.field.is_primitive(self.rep)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.rep))

    def __lt__(self, other):
        return self.rep < self._other(other)

    def __int__(self):
        return self.rep

    __index__ = __int__

    def __repr__(self):
        return f"{self.field!r}({self.rep})"


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FiniteField:
    """Return GF(p**m); fields are cached so repeated calls share tables."""
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    return FiniteField(p, m)


def field_of_order(q: int) -> FiniteField:
    pm = prime_power(q)
    if pm is None:
        raise NotPrime(f"{q} is not a prime power")
    return make_field(*pm)


def primitive_elements(F: FiniteField) -> set[FieldElement]:
    return {FieldElement(F, x) for x in F.primitive_codes()}


def discrete_log(F: FiniteField, base, x) -> int:
    """Exponent k in ``[0, q-2]`` with ``base**k == x``."""
    b, y = F(base).rep, F(x).rep
    if y == 0:
        raise ZeroArgument("logarithm of 0 is undefined")
    return F.log(b, y)


def primitive_pairs_summing_to_one(F: FiniteField) -> set[tuple[FieldElement, FieldElement]]:
    pairs = set()
    for a in F.primitive_codes():
        b = F.sub(1, a)
        if F.is_primitive(b):
            pairs.add((FieldElement(F, a), FieldElement(F, b)))
    return pairs
