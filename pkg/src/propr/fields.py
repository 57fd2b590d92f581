"""Exact arithmetic in finite fields GF(p^k).

Elements are stored as integer indices in [0, p^k).  The index digits are
the coefficients of the representative polynomial with the *constant* term
as the most significant digit, so numeric index order coincides with
lexicographic order of coefficient vectors read low degree first -- the
same order used by the canonical byte encoding of group elements.

The reducing modulus is chosen deterministically: the lexicographically
smallest monic irreducible polynomial of degree k over GF(p), coefficients
compared low degree first.  For k = 1 the modulus is the placeholder x and
arithmetic is plain arithmetic mod p.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .errors import InputError

FIELD_SIZE_LIMIT = 1 << 16
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- polynomial helpers over GF(p); tuples of coefficients, low degree first


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> tuple:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i in range(k):
                prod[d - k + i] = (prod[d - k + i] - c * modulus[i]) % p
    return tuple(prod[:k])


def _poly_rem(a: list[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by monic-leading b (b need not be monic; p prime)."""
    a = list(a)
    db = len(b) - 1
    while len(b) > 1 and b[-1] == 0:
        b = b[:-1]
        db -= 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] = (a[shift + i] - c * b[i]) % p
    return a


def _is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(coeffs) - 1
    for d in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            divisor = list(lower) + [1]
            if not any(_poly_rem(list(coeffs), divisor, p)):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    if k == 1:
        return (0, 1)
    for lower in itertools.product(range(p), repeat=k):
        candidate = lower + (1,)
        if _is_irreducible(candidate, p):
            return candidate
    raise InternalError  # unreachable: irreducibles exist in every degree


class FieldElement:
    """An element of a FiniteField, identified by its index."""

    __slots__ = ("field", "index")

    def __init__(self, field: "FiniteField", index: int):
        self.field = field
        self.index = index

    @property
    def coeffs(self) -> tuple:
        return self.field.coeffs_of(self.index)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.index, other.index))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.sub(self.index, other.index))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.index, other.index))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def multiplicative_order(self) -> int:
        return self.field.order_of(self.index)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.index == other.index
            and self.field is other.field
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.index))

    def __repr__(self) -> str:
        if self.field.k == 1:
            return str(self.index)
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms) if terms else "0"


class FiniteField:
    """GF(p^k) with deterministic modulus and index-level arithmetic."""

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if k < 1:
            raise InputError(f"extension degree must be >= 1, got {k}")
        q = p**k
        if q > FIELD_SIZE_LIMIT:
            raise InputError(f"field size {q} exceeds limit {FIELD_SIZE_LIMIT}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _smallest_irreducible(p, k)
        # index weights: constant coefficient is the most significant digit
        self._weights = tuple(p ** (k - 1 - i) for i in range(k))
        self.zero_index = 0
        self.one_index = self._weights[0]  # constant polynomial 1
        self._mul_table: list | None = None
        self._add_table: list | None = None
        if q <= _TABLE_LIMIT:
            self._build_tables()

    # -- representation

    def coeffs_of(self, a: int) -> tuple:
        p = self.p
        return tuple((a // w) % p for w in self._weights)

    def index_of(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.k:
            raise InputError(f"expected {self.k} coefficients, got {len(coeffs)}")
        p = self.p
        return sum((c % p) * w for c, w in zip(coeffs, self._weights))

    def element(self, value) -> FieldElement:
        """Coerce an int (constant polynomial) or coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise InputError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p) * self._weights[0])
        return FieldElement(self, self.index_of(tuple(value)))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self.one_index)

    def elements(self) -> Iterator[FieldElement]:
        for a in range(self.q):
            yield FieldElement(self, a)

    # -- index arithmetic

    def _build_tables(self) -> None:
        q = self.q
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                s = self._add_slow(a, b)
                m = self._mul_slow(a, b)
                add[a][b] = add[b][a] = s
                mul[a][b] = mul[b][a] = m
        self._add_table = add
        self._mul_table = mul

    def _add_slow(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        return sum(((ca + cb) % p) * w for ca, cb, w in zip(self.coeffs_of(a), self.coeffs_of(b), self._weights))

    def _mul_slow(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        prod = _poly_mulmod(self.coeffs_of(a), self.coeffs_of(b), self.modulus, self.p)
        return self.index_of(prod)

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def neg(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return (-a) % p
        return sum(((-c) % p) * w for c, w in zip(self.coeffs_of(a), self._weights))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one_index
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise InputError("division by zero in finite field")
        return self.pow(a, self.q - 2)

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise InputError("zero has no multiplicative order")
        order = self.q - 1
        for f in factorize(order):
            while order % f == 0 and self.pow(a, order // f) == self.one_index:
                order //= f
        return order

    def primitive_element(self) -> FieldElement:
        """Smallest-index element generating the multiplicative group."""
        target = self.q - 1
        for a in range(1, self.q):
            if self.order_of(a) == target:
                return FieldElement(self, a)
        raise InternalError  # unreachable: F* is cyclic

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


class InternalError(AssertionError):
    """Unreachable code paths in field construction."""


_field_cache: dict[tuple[int, int], FiniteField] = {}


def ff_make(p: int, k: int = 1) -> FiniteField:
    """Construct (and cache) GF(p^k) with the deterministic modulus."""
    key = (p, k)
    field = _field_cache.get(key)
    if field is None:
        field = FiniteField(p, k)
        _field_cache[key] = field
    return field


def ff_primitive_element(field: FiniteField) -> FieldElement:
    return field.primitive_element()
