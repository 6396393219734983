"""Arithmetic in GF(p^e) with a designated primitive element.

Elements are encoded internally as integers ``v = c0 + c1*p + ... + c_{e-1}*p^(e-1)``
where ``(c0, ..., c_{e-1})`` are the polynomial-basis coefficients.  The
integer-level methods (``iadd``, ``imul``, ...) operate on these encodings and
are what the hot loops use; :class:`FieldElement` wraps an encoding together
with its field for the public API.
"""

from __future__ import annotations

import re
from functools import cached_property
from itertools import product

from .errors import (
    DivisionByZero,
    ElementSyntaxError,
    ExponentOutOfRange,
    FieldMismatch,
    FormatError,
    NoPrimitiveRoot,
    NotPrime,
    ReducibleModulus,
)

TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = 3
    while r * r <= n:
        if n % r == 0:
            return False
        r += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    r = 2
    while r * r <= n:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            break
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


# -- polynomials over GF(p), coefficient lists with constant term first ------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    """Remainder of a modulo the monic polynomial m over GF(p)."""
    a = _trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i in range(dm + 1):
            a[shift + i] = (a[shift + i] - c * m[i]) % p
        a = _trim(a)
    return a


def _is_irreducible(m, p) -> bool:
    e = len(m) - 1
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _pmod(m, list(low) + [1], p):
                return False
    return True


def _monic_polys(p, e):
    """Monic degree-e polynomials ordered by the integer encoding of their lower coefficients."""
    for v in range(p**e):
        coeffs = []
        for _ in range(e):
            coeffs.append(v % p)
            v //= p
        yield coeffs + [1]


class FiniteField:
    """GF(p^e) with modulus polynomial and a verified primitive element.

    Use :func:`field_create` (or the :func:`GF` shorthand) rather than calling the
    constructor directly.
    """

    def __init__(self, p: int, e: int, modulus, primitive: int):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        self._mod = list(modulus)
        self._prim = primitive
        if self.q <= TABLE_LIMIT:
            self._build_tables()
        else:
            self._exp = self._log = None

    # -- construction helpers ------------------------------------------------
    def _build_tables(self):
        q = self.q
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._polymul(x, self._prim)
        for k in range(q - 1, 2 * (q - 1)):
            exp[k] = exp[k - (q - 1)]
        self._exp = exp
        self._log = log

    def _coeffs(self, v: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(v % self.p)
            v //= self.p
        return out

    def _encode(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c
        return v

    def _polymul(self, x: int, y: int) -> int:
        """Multiplication by schoolbook polynomial product and reduction (no tables)."""
        if self.e == 1:
            return x * y % self.p
        a, b = self._coeffs(x), self._coeffs(y)
        prod = [0] * (2 * self.e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % self.p
        r = _pmod(prod, self._mod, self.p)
        return self._encode(r + [0] * (self.e - len(r)))

    def _polypow(self, x: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._polymul(r, x)
            x = self._polymul(x, x)
            n >>= 1
        return r

    # -- integer-level arithmetic -------------------------------------------
    def iadd(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        p, r, f = self.p, 0, 1
        while x or y:
            r += ((x % p + y % p) % p) * f
            x //= p
            y //= p
            f *= p
        return r

    def ineg(self, x: int) -> int:
        if self.e == 1:
            return -x % self.p
        if self.p == 2:
            return x
        p, r, f = self.p, 0, 1
        while x:
            r += (-(x % p) % p) * f
            x //= p
            f *= p
        return r

    def isub(self, x: int, y: int) -> int:
        return self.iadd(x, self.ineg(y))

    def imul(self, x: int, y: int) -> int:
        if self.e == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        if self._log is None:
            return self._polymul(x, y)
        return self._exp[self._log[x] + self._log[y]]

    def iinv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        if self.e == 1:
            return pow(x, self.p - 2, self.p)
        if self._log is None:
            return self._polypow(x, self.q - 2)
        return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]

    def ipow(self, x: int, n: int) -> int:
        if n < 0:
            x, n = self.iinv(x), -n
        if x == 0:
            return 1 if n == 0 else 0
        if self.e == 1:
            return pow(x, n, self.p)
        if self._log is None:
            return self._polypow(x, n % (self.q - 1))
        return self._exp[(self._log[x] * n) % (self.q - 1)]

    def ilog(self, x: int) -> int:
        """Discrete log of x to the primitive element."""
        if x == 0:
            raise DivisionByZero("log of zero")
        if self._log is not None:
            return self._log[x]
        y, k = 1, 0
        while y != x:
            y = self.imul(y, self._prim)
            k += 1
        return k

    def iexp(self, k: int) -> int:
        """The primitive element raised to k."""
        k %= self.q - 1
        if self._exp is not None:
            return self._exp[k]
        return self._polypow(self._prim, k)

    def ifrobenius(self, x: int, i: int = 1) -> int:
        return self.ipow(x, self.p ** (i % self.e))

    def order_key(self, x: int) -> int:
        """Canonical total order on encodings.

        Residue order (0 first) in prime fields; discrete-log order with 0 last
        in extension fields.
        """
        if self.e == 1:
            return x
        return self.q - 1 if x == 0 else self.ilog(x)

    @cached_property
    def nonzero_order(self) -> tuple[int, ...]:
        """Nonzero encodings in search order (residues, or powers of the primitive element)."""
        if self.e == 1:
            return tuple(range(1, self.p))
        return tuple(self.iexp(k) for k in range(self.q - 1))

    # -- element API ---------------------------------------------------------
    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int):
            if self.e == 1:
                return FieldElement(self, value % self.p)
            return FieldElement(self, value % self.p)  # image of the integer in the prime subfield
        return self.from_coeffs(value)

    def from_coeffs(self, coeffs) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) > self.e or any(not 0 <= c < self.p for c in coeffs):
            raise ElementSyntaxError(f"bad coefficient vector {coeffs} for GF({self.q})")
        return FieldElement(self, self._encode(coeffs))

    def element(self, v: int) -> FieldElement:
        if not 0 <= v < self.q:
            raise ValueError(f"encoding {v} out of range for GF({self.q})")
        return FieldElement(self, v)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive(self) -> FieldElement:
        return FieldElement(self, self._prim)

    def elements(self) -> list[FieldElement]:
        return sorted((FieldElement(self, v) for v in range(self.q)), key=lambda a: self.order_key(a.value))

    def _check(self, *xs):
        for x in xs:
            if not isinstance(x, FieldElement) or x.field != self:
                raise FieldMismatch("operand not in this field")

    def add(self, a, b):
        self._check(a, b)
        return FieldElement(self, self.iadd(a.value, b.value))

    def sub(self, a, b):
        self._check(a, b)
        return FieldElement(self, self.isub(a.value, b.value))

    def mul(self, a, b):
        self._check(a, b)
        return FieldElement(self, self.imul(a.value, b.value))

    def inv(self, a):
        self._check(a)
        return FieldElement(self, self.iinv(a.value))

    def pow(self, a, n: int):
        self._check(a)
        return FieldElement(self, self.ipow(a.value, n))

    # -- text notation -------------------------------------------------------
    _POWER = re.compile(r"^(?:w|ω)(?:\^\(?(-?\d+)\)?)?$")

    def parse(self, text: str, strict: bool = False) -> FieldElement:
        """Parse "0", "w^k", a residue integer, or "[c0,c1,...]"."""
        t = text.strip().replace(" ", "")
        if not t:
            raise ElementSyntaxError("empty element")
        m = self._POWER.match(t)
        if m:
            k = int(m.group(1)) if m.group(1) is not None else 1
            if strict and not 0 <= k <= self.q - 2:
                raise ExponentOutOfRange(f"exponent {k} outside 0..{self.q - 2}")
            return FieldElement(self, self.iexp(k))
        if t.startswith("[") and t.endswith("]"):
            body = t[1:-1]
            try:
                coeffs = [int(c) for c in body.split(",")] if body else []
            except ValueError:
                raise ElementSyntaxError(f"bad polynomial-basis element {text!r}") from None
            coeffs = _trim(coeffs)
            return self.from_coeffs(coeffs)
        if re.fullmatch(r"-?\d+", t):
            n = int(t)
            if self.e == 1:
                if strict and not 0 <= n < self.p:
                    raise ExponentOutOfRange(f"residue {n} outside 0..{self.p - 1}")
                return FieldElement(self, n % self.p)
            if n in (0, 1):
                return FieldElement(self, n)
            raise ElementSyntaxError(f"integer {n} is ambiguous in GF({self.q}); use w^k or [c0,...]")
        raise ElementSyntaxError(f"cannot parse element {text!r}")

    def format(self, a, notation: str = "canonical") -> str:
        """Canonical: residues in prime fields; "0", "1", "w", "w^k" otherwise.

        ``notation="poly"`` gives the polynomial-basis form ``[c0,...]``.
        """
        v = a.value if isinstance(a, FieldElement) else a
        if notation == "poly":
            return "[" + ",".join(map(str, self._coeffs(v))) + "]"
        if self.e == 1:
            return str(v)
        if v == 0:
            return "0"
        k = self.ilog(v)
        if k == 0:
            return "1"
        return "w" if k == 1 else f"w^{k}"

    def header(self) -> str:
        return f"GF p={self.p} e={self.e} mod={','.join(map(str, self.modulus))}"

    # -- identity ------------------------------------------------------------
    def _key(self):
        return (self.p, self.e, self.modulus, self._prim)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FiniteField({self.header()})"


class FieldElement:
    """An element of a :class:`FiniteField` (immutable)."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> list[int]:
        return self.field._coeffs(self.value)

    def _other(self, b):
        if isinstance(b, int):
            return self.field(b)
        if not isinstance(b, FieldElement):
            return NotImplemented
        if b.field != self.field:
            raise FieldMismatch("operands from different fields")
        return b

    def __add__(self, b):
        b = self._other(b)
        return FieldElement(self.field, self.field.iadd(self.value, b.value))

    __radd__ = __add__

    def __sub__(self, b):
        b = self._other(b)
        return FieldElement(self.field, self.field.isub(self.value, b.value))

    def __rsub__(self, b):
        return self._other(b) - self

    def __neg__(self):
        return FieldElement(self.field, self.field.ineg(self.value))

    def __mul__(self, b):
        b = self._other(b)
        return FieldElement(self.field, self.field.imul(self.value, b.value))

    __rmul__ = __mul__

    def __truediv__(self, b):
        b = self._other(b)
        return FieldElement(self.field, self.field.imul(self.value, self.field.iinv(b.value)))

    def __rtruediv__(self, b):
        return self._other(b) / self

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.ipow(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.iinv(self.value))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, b):
        if isinstance(b, int) and not isinstance(b, bool):
            return self == self.field(b)
        return isinstance(b, FieldElement) and b.field == self.field and b.value == self.value

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __repr__(self):
        return f"<{self.field.format(self.value)} in GF({self.field.q})>"

    def __str__(self):
        return self.field.format(self.value)


def field_create(p: int, e: int = 1, modulus="default", primitive=None) -> FiniteField:
    """Build GF(p^e).

    ``modulus`` is a monic coefficient list (constant term first) or
    ``"default"``: the first irreducible monic polynomial, in order of the
    integer encoding of its lower coefficients, for which x is primitive.  For
    prime fields the default primitive element is the smallest generator.
    ``primitive`` optionally overrides the primitive element (an encoding or a
    coefficient list).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    q = p**e
    factors = prime_factors(q - 1)

    def order_is_full(f: FiniteField, x: int) -> bool:
        if x == 0:
            return False
        return f._polypow(x, q - 1) == 1 and all(f._polypow(x, (q - 1) // r) != 1 for r in factors)

    if isinstance(modulus, str):
        if modulus != "default":
            raise ValueError(f"unknown modulus option {modulus!r}")
        if e == 1:
            for g in range(1, p):
                if all(pow(g, (q - 1) // r, p) != 1 for r in factors):
                    return FiniteField(p, 1, ((-g) % p, 1), g)
            raise NoPrimitiveRoot(f"no generator for GF({p})")  # pragma: no cover
        for m in _monic_polys(p, e):
            if not _is_irreducible(m, p):
                continue
            f = FiniteField.__new__(FiniteField)
            f.p, f.e, f.q, f._mod = p, e, q, m
            if order_is_full(f, p):  # encoding p is the polynomial x
                return FiniteField(p, e, m, p if primitive is None else _as_encoding(f, primitive))
        raise NoPrimitiveRoot(f"no irreducible modulus of degree {e} over GF({p}) has x primitive")

    m = [int(c) for c in modulus]
    if len(m) != e + 1 or m[-1] != 1 or any(not 0 <= c < p for c in m):
        raise ReducibleModulus(f"modulus {m} is not monic of degree {e} over GF({p})")
    if not _is_irreducible(m, p):
        raise ReducibleModulus(f"modulus {m} is reducible over GF({p})")
    f = FiniteField.__new__(FiniteField)
    f.p, f.e, f.q, f._mod = p, e, q, m
    if primitive is not None:
        g = _as_encoding(f, primitive)
    elif e == 1:
        g = (-m[0]) % p  # x is congruent to -c0
    else:
        g = p
    if not order_is_full(f, g):
        raise NoPrimitiveRoot(f"x is not a primitive element modulo {m}; pass primitive= explicitly")
    return FiniteField(p, e, m, g)


def _as_encoding(f: FiniteField, primitive) -> int:
    if isinstance(primitive, FieldElement):
        return primitive.value
    if isinstance(primitive, int):
        return primitive
    return FiniteField._encode(f, list(primitive))


_CACHE: dict = {}


def GF(q_or_p: int, e: int | None = None, modulus="default") -> FiniteField:
    """Convenience constructor: ``GF(64)`` or ``GF(2, 6)``; default moduli are cached."""
    if e is None:
        pe = prime_power(q_or_p)
        if pe is None:
            raise NotPrime(f"{q_or_p} is not a prime power")
        p, e = pe
    else:
        p = q_or_p
    key = (p, e, tuple(modulus) if not isinstance(modulus, str) else modulus)
    if key not in _CACHE:
        _CACHE[key] = field_create(p, e, modulus)
    return _CACHE[key]


_HEADER = re.compile(r"^GF\s+p=(\d+)\s+e=(\d+)\s+mod=([\d,\s]+)$")


def parse_header(line: str) -> FiniteField:
    m = _HEADER.match(line.strip())
    if not m:
        raise FormatError(f"bad field header {line!r}")
    p, e = int(m.group(1)), int(m.group(2))
    mod = [int(c) for c in m.group(3).replace(" ", "").split(",") if c]
    return GF(p, e, mod)
