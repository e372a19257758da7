"""Dense univariate polynomials over a :class:`~rrcodes.field.Field`.

Coefficients are stored lowest degree first as field-element ints. The zero
polynomial has degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .field import Field, FieldElement


def binomial_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    r = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        r = r * comb(ni, ki) % p
        n //= p
        k //= p
    return r


def _val(x) -> int:
    return x.value if isinstance(x, FieldElement) else int(x)


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        c = [_val(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Polynomial":
        return cls(field, [0] * degree + [_val(coeff)])

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls.monomial(field, 1)

    @classmethod
    def from_roots(cls, field: Field, roots) -> "Polynomial":
        """prod (X - r)."""
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, (field.neg(_val(r)), 1))
        return out

    # -- basic properties --

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> list[int]:
        if self.degree >= length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    # -- arithmetic --

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(f"polynomials over {self.field} and {other.field}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        add = self.field.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add(out[i], y)
        return Polynomial(self.field, out)

    def __neg__(self) -> "Polynomial":
        neg = self.field.neg
        return Polynomial(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(self.field)
        F = self.field
        add, mul = F.add, F.mul
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Polynomial(F, out)

    def scale(self, c) -> "Polynomial":
        c = _val(c)
        mul = self.field.mul
        return Polynomial(self.field, [mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by X^k."""
        if not self.coeffs:
            return self
        return Polynomial(self.field, [0] * k + list(self.coeffs))

    def truncate(self, k: int) -> "Polynomial":
        """Reduce modulo X^k."""
        return Polynomial(self.field, self.coeffs[:k])

    def __divmod__(self, other: "Polynomial"):
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        sub, mul = F.sub, F.mul
        rem = list(self.coeffs)
        db = other.degree
        inv_lc = F.inv(other.lc)
        b = other.coeffs
        quot = [0] * max(len(rem) - db, 0)
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = rem[shift + db]
            if not c:
                continue
            c = mul(c, inv_lc)
            quot[shift] = c
            for i, y in enumerate(b):
                if y:
                    rem[shift + i] = sub(rem[shift + i], mul(c, y))
        return Polynomial(F, quot), Polynomial(F, rem[:db] if db > 0 else [])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        out, base = Polynomial.one(self.field), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def evaluate(self, x: int) -> int:
        F = self.field
        add, mul = F.add, F.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), c)
        return acc

    def __call__(self, x):
        if isinstance(x, FieldElement):
            if x.field != self.field:
                raise ValueError(f"cannot evaluate a polynomial over {self.field} at an element of {x.field}")
            return FieldElement(self.field, self.evaluate(x.value))
        return self.evaluate(int(x))

    def map(self, embedding) -> "Polynomial":
        """Apply a coefficient map (e.g. a FieldEmbedding) to every coefficient."""
        if embedding.src != self.field:
            raise ValueError("embedding source does not match the polynomial's field")
        return Polynomial(embedding.dst, [embedding(c) for c in self.coeffs])

    def pullback(self, embedding) -> "Polynomial":
        """Inverse of :meth:`map`; fails if a coefficient lies outside the image."""
        if embedding.dst != self.field:
            raise ValueError("embedding target does not match the polynomial's field")
        return Polynomial(embedding.src, [embedding.preimage(c) for c in self.coeffs])


def reduce_cyclic(a: Polynomial, n: int) -> Polynomial:
    """a mod (X^n - 1)."""
    if a.degree < n:
        return a
    add = a.field.add
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        if c:
            out[i % n] = add(out[i % n], c)
    return Polynomial(a.field, out)


def x_pow_minus_one(field: Field, n: int) -> Polynomial:
    return Polynomial(field, [field.neg(1)] + [0] * (n - 1) + [1])


def hasse_derivative(a: Polynomial, j: int) -> Polynomial:
    """j-th Hasse derivative: sum_i C(i, j) a_i X^(i-j), binomials reduced mod p."""
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    F = a.field
    p = F.p
    out = []
    for i in range(j, len(a.coeffs)):
        c = a.coeffs[i]
        b = binomial_mod(i, j, p) if c else 0
        out.append(F.mul(b, c) if b else 0)
    return Polynomial(F, out)


def root_multiplicity(a: Polynomial, x) -> int:
    """Largest s with every Hasse derivative of order < s vanishing at x."""
    if a.is_zero():
        raise ValueError("root multiplicity of the zero polynomial is undefined")
    if isinstance(x, FieldElement):
        if x.field != a.field:
            raise ValueError("point and polynomial live in different fields")
        x = x.value
    j = 0
    while hasse_derivative(a, j).evaluate(x) == 0:
        j += 1
    return j


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial):
    """(g, u, v) with u*a + v*b = g, g monic."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    F = a.field
    r0, r1 = a, b
    u0, u1 = Polynomial.one(F), Polynomial.zero(F)
    v0, v1 = Polynomial.zero(F), Polynomial.one(F)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    inv = F.inv(r0.lc)
    return r0.scale(inv), u0.scale(inv), v0.scale(inv)


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic lcm; lcm with the zero polynomial is zero."""
    if a.is_zero() and b.is_zero():
        raise ValueError("lcm(0, 0) is undefined")
    if a.is_zero() or b.is_zero():
        return Polynomial.zero(a.field)
    return ((a * b) // poly_gcd(a, b)).monic()


def substitute_power(a: Polynomial, e: int) -> Polynomial:
    """a(X^e)."""
    if e < 1:
        raise ValueError("substitution exponent must be >= 1")
    if e == 1 or a.degree < 1:
        return a
    out = [0] * (a.degree * e + 1)
    for i, c in enumerate(a.coeffs):
        out[i * e] = c
    return Polynomial(a.field, out)


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of an exponent under multiplication by q modulo n."""

    rep: int
    n: int
    q: int
    members: frozenset

    @property
    def size(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)


def cyclotomic_coset(i: int, n: int, q: int) -> CyclotomicCoset:
    if n < 1:
        raise ValueError("coset modulus must be positive")
    if not 0 <= i < n:
        raise ValueError(f"index {i} outside [0, {n})")
    from math import gcd

    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    members = {i}
    j = i * q % n
    while j != i:
        members.add(j)
        j = j * q % n
    return CyclotomicCoset(min(members), n, q, frozenset(members))


def cyclotomic_cosets(n: int, q: int) -> list[CyclotomicCoset]:
    seen: set[int] = set()
    out = []
    for i in range(n):
        if i not in seen:
            c = cyclotomic_coset(i, n, q)
            seen |= c.members
            out.append(c)
    return out


def minimal_polynomial(coset: CyclotomicCoset, gamma: FieldElement) -> Polynomial:
    """prod_{j in coset} (X - gamma^j) over gamma's field.

    Raises ValueError when a coefficient is not fixed by x -> x^q, i.e. the
    product does not lie in GF(q)[X].
    """
    F = gamma.field
    if not gamma.value or F.order_of(gamma.value) != coset.n:
        raise ValueError(f"gamma must have order {coset.n}")
    out = Polynomial.from_roots(F, [F.pow(gamma.value, j) for j in coset])
    q = coset.q
    if any(F.pow(c, q) != c for c in out.coeffs):
        raise ValueError(f"minimal polynomial of coset {coset.rep} is not defined over GF({q})")
    return out
