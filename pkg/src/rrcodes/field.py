"""Finite fields GF(p^m).

Elements are plain ints: the base-p digits of an element are the
coefficients (constant term first) of its residue modulo the field's
irreducible modulus. For p = 2 that is the usual bit-packed encoding.
Fields up to ``TABLE_CAP`` elements use exp/log tables (plus Zech
logarithms for odd p with m > 1); larger fields fall back to direct
polynomial arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_SIZE_CAP = 1 << 20
TABLE_CAP = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Smallest e >= 1 with a^e = 1 mod n (n = 1 gives 1)."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    e, x = 1, a % n
    while x != 1:
        x = x * a % n
        e += 1
    return e


def to_digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        x, d = divmod(x, p)
        out.append(d)
    return out


def from_digits(digits, p: int) -> int:
    x = 0
    for d in reversed(list(digits)):
        x = x * p + d
    return x


# -- polynomials over GF(p) as digit lists, used only for field construction --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _prime_poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    db = len(b) - 1
    inv_lc = pow(b[-1], -1, p)
    while len(a) - 1 >= db:
        c = a[-1] * inv_lc % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int):
    for low in range(p ** degree):
        yield to_digits(low, p, degree) + [1]


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    mod = list(modulus)
    deg = len(mod) - 1
    if deg < 1 or mod[-1] == 0:
        return False
    if deg == 1:
        return True
    if mod[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _prime_poly_mod(mod, cand, p):
                return False
    return True


def lowest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m with the smallest integer encoding."""
    if m == 1:
        return (0, 1)
    for low in range(p ** m):
        cand = to_digits(low, p, m) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Field:
    """GF(p^m) with integer-encoded elements.

    ``add``, ``sub``, ``neg``, ``mul``, ``inv``, ``div`` and ``pow`` operate on
    ints and are the fast path used throughout the package. Calling the field
    wraps an int into a :class:`FieldElement` for operator-style arithmetic.
    """

    def __init__(self, p: int, m: int = 1, modulus=None, *, size_cap: int = DEFAULT_SIZE_CAP):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if p ** m > size_cap:
            raise ValueError(f"GF({p}^{m}) exceeds the size cap {size_cap}")
        self.p = p
        self.m = m
        self.q = p ** m
        if modulus is None:
            modulus = lowest_irreducible(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self._mod_int = from_digits(modulus, p)
        self._setup_addition()
        self.generator = self._find_generator()
        self.has_tables = self.q <= TABLE_CAP
        if self.has_tables:
            self._build_tables()

    # -- raw arithmetic (no tables) --

    def _raw_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if p == 2:
            mod, top = self._mod_int, 1 << m
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r
        da, db = to_digits(a, p, m), to_digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return from_digits(_prime_poly_mod(prod, self.modulus, p), p)

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        r, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            r += (x + y) % p * place
            place *= p
        return r

    def _digit_neg(self, a: int) -> int:
        p = self.p
        r, place = 0, 1
        while a:
            a, x = divmod(a, p)
            r += (-x) % p * place
            place *= p
        return r

    def _setup_addition(self) -> None:
        p = self.p
        if p == 2:
            self.add = self.sub = lambda a, b: a ^ b
            self.neg = lambda a: a
        elif self.m == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: -a % p
        else:
            self.add = self._digit_add
            self.neg = self._digit_neg
            self.sub = lambda a, b: self.add(a, self.neg(b))

    def _find_generator(self) -> int:
        q = self.q
        if q == 2:
            return 1
        exps = [(q - 1) // r for r in prime_factors(q - 1)]
        for c in range(2, q):
            if all(self._raw_pow(c, e) != 1 for e in exps):
                return c
        raise AssertionError("no primitive element")  # pragma: no cover

    def _build_tables(self) -> None:
        q, g = self.q, self.generator
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, g)
        exp[q - 1:] = exp[: q - 1]
        self._exp, self._log = exp, log
        if self.p != 2 and self.m > 1:
            # Zech logarithms: g^zech[d] = 1 + g^d, -1 when that sum is 0.
            zech = [-1] * (q - 1)
            for d in range(q - 1):
                s = self._digit_add(1, exp[d])
                zech[d] = log[s] if s else -1
            self._zech = zech
            half = (q - 1) // 2
            self.add = self._zech_add
            self.neg = lambda a: exp[log[a] + half] if a else 0
            self.sub = lambda a, b: self._zech_add(a, self.neg(b))

    def _zech_add(self, a: int, b: int) -> int:
        if not a:
            return b
        if not b:
            return a
        log = self._log
        la = log[a]
        z = self._zech[(log[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self._exp[la + z]

    # -- public int arithmetic --

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.has_tables:
            return self._exp[self._log[a] + self._log[b]]
        return self._raw_mul(a, b)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        if self.has_tables:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._raw_pow(a, e % (self.q - 1))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.has_tables:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def log(self, a: int) -> int:
        """Discrete log to the base of ``self.generator``."""
        if a == 0:
            raise ValueError("log of zero")
        if self.has_tables:
            return self._log[a]
        x, i = 1, 0
        while x != a:
            x = self._raw_mul(x, self.generator)
            i += 1
        return i

    def exp(self, i: int) -> int:
        return self.pow(self.generator, i)

    def scalar(self, c: int) -> int:
        """Encoding of the integer c reduced into the prime subfield."""
        return c % self.p

    # -- structure --

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return range(self.q)

    def order_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(self.q - 1):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def element_of_order(self, n: int) -> "FieldElement":
        return element_of_order(self, n)

    def in_subfield(self, a: int, degree: int) -> bool:
        """True when a lies in the subfield GF(p^degree)."""
        return self.pow(a, self.p ** degree) == a if a else True

    def subfield_generator(self, degree: int) -> int:
        if self.m % degree:
            raise ValueError(f"GF({self.p}^{degree}) is not a subfield of GF({self.p}^{self.m})")
        return self.pow(self.generator, (self.q - 1) // (self.p ** degree - 1))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element encoding of GF({self.q})")
        return FieldElement(self, value)

    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot mix elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def order(self) -> int:
        return self.field.order_of(self.value)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value:#x})"


_FIELDS: dict[tuple[int, int], Field] = {}


def field_create(p: int, m: int = 1, *, size_cap: int = DEFAULT_SIZE_CAP) -> Field:
    """GF(p^m) with the lowest monic irreducible modulus; cached per (p, m)."""
    key = (p, m)
    F = _FIELDS.get(key)
    if F is None:
        F = _FIELDS[key] = Field(p, m, size_cap=size_cap)
    elif F.q > size_cap:
        raise ValueError(f"GF({p}^{m}) exceeds the size cap {size_cap}")
    return F


def element_of_order(F: Field, n: int) -> FieldElement:
    """generator^((q-1)/n), the smallest power of the canonical generator of order n."""
    if n < 1 or (F.q - 1) % n:
        raise ValueError(f"{n} does not divide |GF({F.q})*| = {F.q - 1}")
    return FieldElement(F, F.pow(F.generator, (F.q - 1) // n))


class FieldEmbedding:
    """Injective homomorphism src -> dst fixed by the image of the src variable."""

    def __init__(self, src: Field, dst: Field, image: int):
        self.src, self.dst, self.image = src, dst, image
        powers = [1]
        for _ in range(src.m - 1):
            powers.append(dst.mul(powers[-1], image))
        self._powers = powers
        self._table = None
        self._inverse = None
        if src.q <= TABLE_CAP:
            self._table = [self._compute(x) for x in range(src.q)]

    def _compute(self, x: int) -> int:
        dst = self.dst
        acc = 0
        for d, pw in zip(to_digits(x, self.src.p, self.src.m), self._powers):
            if d:
                acc = dst.add(acc, dst.mul(d, pw))
        return acc

    def __call__(self, x):
        if isinstance(x, FieldElement):
            if x.field != self.src:
                raise ValueError("element is not in the embedding's source field")
            return FieldElement(self.dst, self(x.value))
        return self._table[x] if self._table is not None else self._compute(x)

    def preimage(self, y: int) -> int:
        if self._inverse is None:
            if self._table is None:
                raise ValueError("preimage lookup requires a tabulated source field")
            self._inverse = {v: i for i, v in enumerate(self._table)}
        try:
            return self._inverse[y]
        except KeyError:
            raise ValueError(f"{y:#x} is not in the image of {self.src}") from None

    def in_image(self, y: int) -> bool:
        return self.dst.in_subfield(y, self.src.m)

    def __repr__(self) -> str:
        return f"FieldEmbedding({self.src!r} -> {self.dst!r}, x -> {self.image:#x})"


def _modulus_roots(src: Field, dst: Field):
    """Roots of src.modulus in dst, as the Frobenius orbit of the first root found."""
    mod = src.modulus
    h = dst.subfield_generator(src.m)
    x = 1
    for _ in range(src.q - 1):
        acc = 0
        for c in reversed(mod):
            acc = dst.add(dst.mul(acc, x), c)
        if acc == 0:
            orbit = [x]
            for _ in range(src.m - 1):
                orbit.append(dst.pow(orbit[-1], src.p))
            return orbit
        x = dst.mul(x, h)
    raise AssertionError("modulus has no root in the target field")  # pragma: no cover


def embed(src: Field, dst: Field, base: tuple[FieldEmbedding, FieldEmbedding] | None = None) -> FieldEmbedding:
    """Embed src into dst.

    ``base = (F -> src, F -> dst)`` restricts the choice to embeddings that
    commute with the two given embeddings of a common subfield F.
    """
    if src.p != dst.p or dst.m % src.m:
        raise ValueError(f"{src} does not embed into {dst}")
    if base is not None:
        lo_src, lo_dst = base
        if lo_src.dst != src or lo_dst.dst != dst or lo_src.src != lo_dst.src:
            raise ValueError("base embeddings do not match the fields")
    if src == dst and (base is None or all(base[0](x) == base[1](x) for x in _generators(base[0].src))):
        return _cached_embed(src, dst, None)
    if base is None:
        return _cached_embed(src, dst, None)
    lo_src, lo_dst = base
    gens = _generators(lo_src.src)
    for root in ([1] if src.m == 1 else _modulus_roots(src, dst)):
        cand = FieldEmbedding(src, dst, root if src.m > 1 else 1)
        if all(cand(lo_src(x)) == lo_dst(x) for x in gens):
            return cand
    raise ValueError("no embedding compatible with the given base embeddings")


def _generators(F: Field) -> list[int]:
    return [1] if F.m == 1 else [F.p]


@lru_cache(maxsize=None)
def _cached_embed(src: Field, dst: Field, _unused) -> FieldEmbedding:
    if src.m == 1:
        return FieldEmbedding(src, dst, 1 if src.m == 1 else 0)
    if src == dst:
        return FieldEmbedding(src, dst, src.p)
    return FieldEmbedding(src, dst, _modulus_roots(src, dst)[0])
