"""Exact arithmetic in GF(p^h).

Elements are handled internally as canonical integers in ``[0, q)``: the
base-p digits of the integer are the coefficients of the residue polynomial,
constant term first.  :class:`FieldElement` wraps such an integer for
operator-style use; the linear algebra layers work on the raw integers through
the arithmetic methods of :class:`FieldSpec`.
"""

from __future__ import annotations

import functools
import itertools
import re
from typing import Iterator, Optional, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroElement,
)

__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_field",
    "parse_field_spec",
    "element_order",
    "find_element_of_order_at_least",
    "is_prime",
]

# Above this size multiplication falls back to polynomial reduction.
_LOG_TABLE_LIMIT = 1 << 16
_ADD_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _factorize(n: int) -> list[int]:
    """Distinct prime factors of ``n``."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p) as coefficient lists, constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    h = len(mod) - 1
    if h <= 0:
        return False
    if h == 1:
        return True
    # f is irreducible iff gcd(f, X^(p^i) - X) = 1 for all i <= h/2
    x_pow = [0, 1]
    for _ in range(h // 2):
        acc = [1]
        base = x_pow
        e = p
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, base, p), mod, p)
            base = _pmod(_pmul(base, base, p), mod, p)
            e >>= 1
        x_pow = acc
        diff = list(x_pow) + [0] * max(0, 2 - len(x_pow))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(list(mod), _trim(diff), p)
        if len(g) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _least_irreducible(p: int, h: int) -> tuple[int, ...]:
    # lexicographic over (c0, ..., c_{h-1}) with c0 most significant
    for low in itertools.product(range(p), repeat=h):
        cand = tuple(low) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldSpec:
    """The finite field GF(p^h) with an explicit monic irreducible modulus.

    Instances are immutable and interned by :func:`make_field`.  Equality and
    hashing depend only on ``(p, h, modulus)``.
    """

    __slots__ = ("p", "h", "modulus", "q", "_pw", "_exp", "_log", "_add_tab", "_digits")

    def __init__(self, p: int, h: int, modulus: tuple[int, ...]):
        self.p = p
        self.h = h
        self.modulus = modulus
        self.q = p**h
        self._pw = [p**i for i in range(h)]
        self._exp = self._log = self._add_tab = self._digits = None
        if h > 1:
            self._build_tables()

    # identity -----------------------------------------------------------
    def _key(self):
        return (self.p, self.h, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __reduce__(self):
        return (make_field, self._key())

    def __repr__(self):
        return f"FieldSpec({self.spec_string()!r})"

    def spec_string(self) -> str:
        """Serialize as ``p^h`` or ``p^h:modulus=c0,...,1``."""
        base = f"{self.p}^{self.h}"
        if self.h > 1 and self.modulus != _least_irreducible(self.p, self.h):
            base += ":modulus=" + ",".join(map(str, self.modulus))
        return base

    __str__ = spec_string

    @property
    def char(self) -> int:
        return self.p

    # encodings ----------------------------------------------------------
    def digits(self, a: int) -> tuple[int, ...]:
        if self._digits is not None:
            return self._digits[a]
        out = []
        for _ in range(self.h):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, coeffs: Sequence[int]) -> int:
        return sum((c % self.p) * w for c, w in zip(coeffs, self._pw))

    def from_int(self, n: int) -> int:
        """Map an integer into the prime subfield."""
        return n % self.p

    def _build_tables(self):
        p, q = self.p, self.q
        if q <= _LOG_TABLE_LIMIT:
            self._digits = [None] * q
            for a in range(q):
                x, out = a, []
                for _ in range(self.h):
                    x, r = divmod(x, p)
                    out.append(r)
                self._digits[a] = tuple(out)
        if q <= _ADD_TABLE_LIMIT:
            self._add_tab = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]
        if q <= _LOG_TABLE_LIMIT:
            for g in range(p, q):
                exp = [1]
                cur = 1
                while True:
                    cur = self._slow_mul(cur, g)
                    if cur == 1:
                        break
                    exp.append(cur)
                if len(exp) == q - 1:
                    break
            log = [0] * q
            for i, e in enumerate(exp):
                log[e] = i
            self._exp = exp + exp
            self._log = log

    def _slow_add(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([x + y for x, y in zip(da, db)])

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _pmul(_trim(list(self.digits(a))), _trim(list(self.digits(b))), self.p)
        return self.from_digits(_pmod(prod, self.modulus, self.p))

    # raw integer arithmetic --------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.h == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_tab is not None:
            return self._add_tab[a][b]
        return self._slow_add(a, b)

    def neg(self, a: int) -> int:
        if self.h == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.h == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.h == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.h == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """``a**e``; negative exponents invert first.  ``0**0 == 1``."""
        if e < 0:
            a, e = self.inv(a), -e
        if self.h == 1:
            return pow(a, e, self.p)
        if e == 0:
            return 1
        if not a:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self._slow_mul(acc, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return acc

    def sum(self, values) -> int:
        if self.h == 1:
            return sum(values) % self.p
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    # element-level API --------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.from_digits(value))
        if not 0 <= value < self.q:
            if self.h == 1:
                value %= self.p
            else:
                raise ValueError(f"canonical encoding {value} outside [0, {self.q})")
        return FieldElement(self, value)

    def elements(self) -> Iterator["FieldElement"]:
        for a in range(self.q):
            yield FieldElement(self, a)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)


class FieldElement:
    """An element of a :class:`FieldSpec`, stored by its canonical integer."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other) if self.field.h == 1 else self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"GF({self.field.q})({self.value})"


@functools.lru_cache(maxsize=None)
def _intern(p: int, h: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, h, modulus)


def make_field(p: int, h: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Return GF(p^h).

    Without ``modulus`` the lexicographically least monic irreducible of
    degree ``h`` is used, comparing coefficient tuples constant term first.
    For ``h == 1`` the default modulus is ``X``.

    >>> make_field(2, 2).modulus
    (1, 1, 1)
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if h < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        mod = _least_irreducible(p, h)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != h + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {h}")
        if not _is_irreducible(mod, p):
            raise ReducibleModulus(f"{mod} is reducible over GF({p})")
    return _intern(p, h, mod)


_SPEC_RE = re.compile(r"^\s*(\d+)(?:\^(\d+))?(?::modulus=([\d,\s]+))?\s*$")


def parse_field_spec(text: str) -> FieldSpec:
    """Parse ``p``, ``p^h`` or ``p^h:modulus=c0,c1,...,1``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"malformed field spec {text!r}")
    p = int(m.group(1))
    h = int(m.group(2) or 1)
    mod = None
    if m.group(3):
        mod = [int(c) for c in m.group(3).split(",")]
    return make_field(p, h, mod)


def _order(field: FieldSpec, a: int) -> int:
    n = field.q - 1
    order = n
    for f in _factorize(n):
        while order % f == 0 and field.pow(a, order // f) == 1:
            order //= f
    return order


def element_order(a: FieldElement) -> int:
    """Multiplicative order of a nonzero element."""
    if not a:
        raise ZeroElement("zero has no multiplicative order")
    return _order(a.field, a.value)


def find_element_of_order_at_least(field: FieldSpec, n: int) -> Optional[FieldElement]:
    """First nonzero element, in canonical integer order, of order >= ``n``."""
    if n > field.q - 1:
        return None
    for a in range(1, field.q):
        if _order(field, a) >= n:
            return FieldElement(field, a)
    return None
