"""Repeated-root cyclic codes, defining sets and folding.

A code of length n = p^s * n' over GF(q) is described by the multiplicity of
each root gamma^i (gamma of order n') in its generator polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import chain, product

from .field import Field, embed, element_of_order, field_create, multiplicative_order
from .poly import Polynomial, cyclotomic_coset, minimal_polynomial, root_multiplicity, x_pow_minus_one

FOLD_TABLE_CAP = 1 << 20


class DefiningSet:
    """Map root index -> multiplicity, indices taken modulo ``modulus``."""

    __slots__ = ("modulus", "_mult")

    def __init__(self, modulus: int, entries=()):
        if modulus < 1:
            raise ValueError("defining-set modulus must be positive")
        self.modulus = modulus
        mult: dict[int, int] = {}
        if isinstance(entries, dict):
            entries = entries.items()
        for i, s in entries:
            if s < 0:
                raise ValueError(f"negative multiplicity for index {i}")
            if s:
                mult[i % modulus] = max(mult.get(i % modulus, 0), s)
        self._mult = mult

    @classmethod
    def uniform(cls, modulus: int, indices, mult: int) -> "DefiningSet":
        return cls(modulus, [(i, mult) for i in indices])

    def multiplicity(self, i: int) -> int:
        return self._mult.get(i % self.modulus, 0)

    def __contains__(self, i: int) -> bool:
        return (i % self.modulus) in self._mult

    def __iter__(self):
        return iter(sorted(self._mult.items()))

    def __len__(self) -> int:
        return len(self._mult)

    def indices(self) -> list[int]:
        return sorted(self._mult)

    def full_indices(self, required: int) -> list[int]:
        return sorted(i for i, s in self._mult.items() if s >= required)

    def total(self) -> int:
        return sum(self._mult.values())

    def max_multiplicity(self) -> int:
        return max(self._mult.values(), default=0)

    def as_pairs(self) -> list[list[int]]:
        return [[i, s] for i, s in self]

    def shift(self, z: int, modulus: int | None = None) -> "DefiningSet":
        """Translate every index by z, optionally re-reading indices modulo a new modulus.

        The result need not be closed under conjugation.
        """
        mod = self.modulus if modulus is None else modulus
        return DefiningSet(mod, [(i + z, s) for i, s in self._mult.items()])

    def cupmax(self, other: "DefiningSet") -> "DefiningSet":
        if other.modulus != self.modulus:
            raise ValueError(f"moduli differ: {self.modulus} vs {other.modulus}")
        out = dict(self._mult)
        for i, s in other._mult.items():
            out[i] = max(out.get(i, 0), s)
        return DefiningSet(self.modulus, out)

    def is_closed(self, q: int) -> bool:
        n = self.modulus
        return all(self._mult.get(i * q % n, 0) == s for i, s in self._mult.items())

    def closure(self, q: int) -> "DefiningSet":
        """Smallest closed set dominating this one (maximum over each conjugacy class)."""
        n = self.modulus
        out: dict[int, int] = {}
        for i in self._mult:
            coset = cyclotomic_coset(i, n, q)
            s = max(self._mult.get(j, 0) for j in coset)
            for j in coset:
                out[j] = s
        return DefiningSet(n, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, DefiningSet) and self.modulus == other.modulus and self._mult == other._mult

    def __hash__(self) -> int:
        return hash((self.modulus, frozenset(self._mult.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{i}^<{s}>" for i, s in self)
        return f"DefiningSet(mod {self.modulus}: {{{body}}})"


@dataclass(frozen=True)
class FoldingBasis:
    """Coordinates of GF(q^(p^s)) over GF(q) in the basis 1, zeta, ..., zeta^(w-1).

    ``field`` is the working field that contains both GF(q^(p^s)) and the
    code's splitting field; folded symbols are elements of ``field``.
    """

    base: Field
    field: Field
    lift: object
    zeta: int
    width: int
    coords: dict

    def combine(self, digits) -> int:
        W, lift = self.field, self.lift
        acc, zp = 0, 1
        for d in digits:
            if d:
                acc = W.add(acc, W.mul(lift(d), zp))
            zp = W.mul(zp, self.zeta)
        return acc

    def split(self, x: int) -> tuple[int, ...]:
        try:
            return self.coords[x]
        except KeyError:
            raise ValueError(f"{x:#x} does not lie in GF({self.base.q}^{self.width})") from None


@dataclass(frozen=True)
class FoldedWord:
    basis: FoldingBasis
    symbols: tuple

    def __len__(self) -> int:
        return len(self.symbols)

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.basis.field, self.symbols)

    def weight(self) -> int:
        return sum(1 for x in self.symbols if x)

    def support(self) -> list[int]:
        return [j for j, x in enumerate(self.symbols) if x]

    def __add__(self, other: "FoldedWord") -> "FoldedWord":
        if other.basis is not self.basis or len(other) != len(self):
            raise ValueError("folded words over different bases or lengths")
        add = self.basis.field.add
        return FoldedWord(self.basis, tuple(add(a, b) for a, b in zip(self.symbols, other.symbols)))

    def __sub__(self, other: "FoldedWord") -> "FoldedWord":
        if other.basis is not self.basis or len(other) != len(self):
            raise ValueError("folded words over different bases or lengths")
        sub = self.basis.field.sub
        return FoldedWord(self.basis, tuple(sub(a, b) for a, b in zip(self.symbols, other.symbols)))


class RepeatedRootCyclicCode:
    """Cyclic code of length p^s * n' over ``field`` with the given defining set.

    Attributes: ``n``, ``k``, ``n_prime``, ``s``, ``burst`` (= p^s), ``generator``,
    ``defining_set``, ``splitting_field``, ``lift`` (field -> splitting field)
    and ``gamma`` (int of order n' in the splitting field).
    """

    def __init__(self, field: Field, n_prime: int, s: int, defining_set: DefiningSet):
        p, q = field.p, field.q
        if n_prime < 1 or s < 0:
            raise ValueError("need n' >= 1 and s >= 0")
        if math.gcd(n_prime, p) != 1:
            raise ValueError(f"gcd(n'={n_prime}, p={p}) != 1")
        if defining_set.modulus != n_prime:
            raise ValueError(f"defining set modulus {defining_set.modulus} != n' = {n_prime}")
        burst = p ** s
        if defining_set.max_multiplicity() > burst:
            raise ValueError(f"multiplicity exceeds p^s = {burst}")
        if not defining_set.is_closed(q):
            raise ValueError("defining set is not closed under multiplication by q")

        self.field = field
        self.n_prime = n_prime
        self.s = s
        self.burst = burst
        self.n = burst * n_prime
        self.defining_set = defining_set

        degree = multiplicative_order(q, n_prime)
        S = field if degree == 1 else field_create(p, field.m * degree)
        self.splitting_field = S
        self.lift = embed(field, S)
        self.gamma = element_of_order(S, n_prime).value

        g = Polynomial.one(field)
        seen: set[int] = set()
        gamma = S(self.gamma)
        for i, mult in defining_set:
            if i in seen:
                continue
            coset = cyclotomic_coset(i, n_prime, q)
            seen |= coset.members
            mp = minimal_polynomial(coset, gamma).pullback(self.lift)
            g = g * mp ** mult
        self.generator = g
        self.k = self.n - g.degree
        self._check_profile()

    def _check_profile(self) -> None:
        gS = self.generator.map(self.lift)
        S = self.splitting_field
        for i in range(self.n_prime):
            want = self.defining_set.multiplicity(i)
            got = root_multiplicity(gS, S.pow(self.gamma, i))
            if got != want:
                raise AssertionError(f"root gamma^{i}: multiplicity {got}, expected {want}")

    # -- codewords --

    def encode(self, u: Polynomial) -> Polynomial:
        if u.field != self.field:
            raise ValueError("message is over the wrong field")
        if u.degree >= self.k:
            raise ValueError(f"message degree {u.degree} >= k = {self.k}")
        return u * self.generator

    def is_codeword(self, c: Polynomial) -> bool:
        return c.field == self.field and c.degree < self.n and self.generator.divides(c)

    def generator_rows(self) -> list[list[int]]:
        """Coefficient rows of X^i g(X), i < k."""
        g = self.generator.padded(self.n - self.k + 1)
        return [[0] * i + g + [0] * (self.k - 1 - i) for i in range(self.k)]

    def check_polynomial(self) -> Polynomial:
        return x_pow_minus_one(self.field, self.n) // self.generator

    # -- phase structure --

    def full_indices(self) -> list[int]:
        """Indices whose root has the maximal multiplicity p^s."""
        return self.defining_set.full_indices(self.burst)

    @cached_property
    def phase_root(self) -> int:
        """Element of order n' at which each phase of a codeword vanishes on full_indices().

        Phases of codewords are multiples of the Frobenius image (x -> x^(p^s)) of
        the product of the full-multiplicity minimal polynomials, so they vanish
        at gamma^(p^s * i). When p^s is a power of q modulo n' this set equals
        {gamma^i}, and gamma itself is returned.
        """
        q, n = self.field.q, self.n_prime
        target = self.burst % n
        x = 1 % n
        for _ in range(multiplicative_order(q, n) if n > 1 else 1):
            if x == target:
                return self.gamma
            x = x * q % n
        return self.splitting_field.pow(self.gamma, self.burst)

    def phases(self, w: Polynomial) -> list[Polynomial]:
        """w = sum_t X^t * w_t(X^(p^s)); returns [w_0, ..., w_(p^s - 1)]."""
        if w.degree >= self.n:
            raise ValueError(f"word of degree {w.degree} does not fit length {self.n}")
        c = w.padded(self.n)
        b = self.burst
        return [Polynomial(self.field, c[t::b]) for t in range(b)]

    def from_phases(self, parts) -> Polynomial:
        b = self.burst
        out = [0] * self.n
        for t, part in enumerate(parts):
            for j, x in enumerate(part.coeffs):
                out[t + j * b] = x
        return Polynomial(self.field, out)

    @cached_property
    def folding(self) -> FoldingBasis:
        """Basis and working field for folding; see :class:`FoldingBasis`."""
        F, S, b = self.field, self.splitting_field, self.burst
        if b == 1:
            coords = {self.lift(x): (x,) for x in range(F.q)}
            return FoldingBasis(F, S, self.lift, 1, 1, coords)
        if F.q ** b > FOLD_TABLE_CAP:
            raise ValueError(f"folding table GF({F.q}^{b}) exceeds {FOLD_TABLE_CAP} entries")
        deg_s = S.m // F.m
        W = field_create(F.p, F.m * math.lcm(b, deg_s))
        lift_w = embed(F, W)
        zeta_candidates = chain([W.subfield_generator(F.m * b)], range(1, W.q))
        for zeta in zeta_candidates:
            if not W.in_subfield(zeta, F.m * b):
                continue
            basis = FoldingBasis(F, W, lift_w, zeta, b, {})
            coords = {}
            for digits in product(range(F.q), repeat=b):
                coords[basis.combine(digits)] = digits
            if len(coords) == F.q ** b:
                return FoldingBasis(F, W, lift_w, zeta, b, coords)
        raise AssertionError("no folding basis found")  # pragma: no cover

    @cached_property
    def to_working(self):
        """Embedding splitting field -> folding working field, compatible with the lifts."""
        basis = self.folding
        if basis.field == self.splitting_field:
            return embed(self.splitting_field, self.splitting_field)
        return embed(self.splitting_field, basis.field, base=(self.lift, basis.lift))

    def info(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "n_prime": self.n_prime,
            "s": self.s,
            "q": self.field.q,
            "deg_g": self.generator.degree,
            "defining_set": self.defining_set.as_pairs(),
        }

    def __repr__(self) -> str:
        return f"RepeatedRootCyclicCode([{self.n}, {self.k}] over {self.field!r}, n'={self.n_prime}, s={self.s})"


def code_from_defining_set(field: Field, n_prime: int, s: int, D: DefiningSet) -> RepeatedRootCyclicCode:
    return RepeatedRootCyclicCode(field, n_prime, s, D)


def fold(C: RepeatedRootCyclicCode, w: Polynomial) -> FoldedWord:
    if w.field != C.field:
        raise ValueError("word is over the wrong field")
    if w.degree >= C.n:
        raise ValueError(f"word of degree {w.degree} does not fit length {C.n}")
    basis = C.folding
    c, b = w.padded(C.n), C.burst
    return FoldedWord(basis, tuple(basis.combine(c[j * b:(j + 1) * b]) for j in range(C.n_prime)))


def unfold(word: FoldedWord) -> Polynomial:
    out = []
    for x in word.symbols:
        out.extend(word.basis.split(x))
    return Polynomial(word.basis.base, out)


@dataclass(frozen=True)
class FoldedCode:
    """Simple-root code of length n' over GF(q^(p^s)) obtained by folding."""

    code: RepeatedRootCyclicCode
    length: int
    dimension: int
    zeros: tuple

    @property
    def field_order(self) -> int:
        return self.code.field.q ** self.code.burst

    def is_codeword(self, word: FoldedWord) -> bool:
        W = self.code.folding.field
        root = self.code.to_working(self.code.phase_root)
        poly = word.as_polynomial()
        return len(word) == self.length and all(poly.evaluate(W.pow(root, i)) == 0 for i in self.zeros)


def folded_code(C: RepeatedRootCyclicCode) -> FoldedCode:
    D = C.defining_set
    if any(mult != C.burst for _, mult in D):
        raise ValueError("folding needs every defining-set multiplicity equal to p^s")
    if C.k % C.burst:
        raise ValueError(f"k = {C.k} is not a multiple of p^s = {C.burst}")
    return FoldedCode(C, C.n_prime, C.k // C.burst, tuple(D.indices()))
