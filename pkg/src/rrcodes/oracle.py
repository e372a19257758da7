"""Brute-force reference implementations used to check the fast paths."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .code import RepeatedRootCyclicCode
from .field import to_digits
from .poly import Polynomial

DEFAULT_ENUM_CAP = 1 << 24


@dataclass(frozen=True)
class OracleResult:
    distance: int
    codeword: Polynomial
    count: int
    elapsed: float
    length: int = 0

    def to_dict(self) -> dict:
        return {
            "distance": self.distance,
            "codeword": self.codeword.padded(max(self.length, len(self.codeword.coeffs))),
            "count": self.count,
            "elapsed": round(self.elapsed, 6),
        }


def _prime_rows(C: RepeatedRootCyclicCode) -> list[list[int]]:
    """GF(p)-basis of the code: each generator row times each basis element of GF(q)."""
    F = C.field
    rows = []
    for row in C.generator_rows():
        for b in range(F.m):
            unit = F.p ** b
            rows.append([F.mul(unit, x) for x in row])
    return rows


def _min_weight_binary(C: RepeatedRootCyclicCode):
    """Gray-code walk; symbols packed m bits each into one int."""
    F = C.field
    m, n = F.m, C.n
    rows = []
    for row in _prime_rows(C):
        v = 0
        for i, x in enumerate(row):
            v |= x << (i * m)
        rows.append(v)
    low = 0
    for i in range(n):
        low |= 1 << (i * m)

    def weight(v: int) -> int:
        acc = v
        for sh in range(1, m):
            acc |= v >> sh
        return (acc & low).bit_count()

    best, best_v = n + 1, 0
    v = 0
    for step in range(1, 1 << len(rows)):
        v ^= rows[(step & -step).bit_length() - 1]
        wt = weight(v) if m > 1 else v.bit_count()
        if wt < best:
            best, best_v = wt, v
    coeffs = [(best_v >> (i * m)) & ((1 << m) - 1) for i in range(n)]
    return best, Polynomial(F, coeffs)


def _min_weight_prime(C: RepeatedRootCyclicCode, chunk: int = 1 << 14):
    """Enumerate GF(p)-combinations with numpy: a low-half table plus a loop over the high half."""
    F = C.field
    p, m, n = F.p, F.m, C.n
    G = np.array([[d for x in row for d in to_digits(x, p, m)] for row in _prime_rows(C)], dtype=np.int64)
    K = G.shape[0]
    k_lo = 1
    while k_lo < K and p ** (k_lo + 1) <= chunk:
        k_lo += 1
    k_lo = min(k_lo, K)
    k_hi = K - k_lo

    def combos(k):
        if k == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grid = np.indices((p,) * k).reshape(k, -1).T
        return grid[:, ::-1]

    lo_msgs = combos(k_lo)
    lo_words = lo_msgs @ G[:k_lo] % p
    best, best_word = n + 1, None
    for hi in combos(k_hi):
        words = (lo_words + hi @ G[k_lo:]) % p
        sym = words.reshape(len(words), n, m).any(axis=2)
        wt = sym.sum(axis=1)
        if not hi.any():
            wt[0] = n + 1  # the zero codeword
        i = int(wt.argmin())
        if wt[i] < best:
            best, best_word = int(wt[i]), words[i]
    digits = best_word.reshape(n, m)
    coeffs = [sum(int(d) * p ** b for b, d in enumerate(row)) for row in digits]
    return best, Polynomial(F, coeffs)


def min_distance_exhaustive(C: RepeatedRootCyclicCode, cap: int = DEFAULT_ENUM_CAP) -> OracleResult:
    """True minimum distance by enumerating all q^k codewords."""
    F = C.field
    count = F.q ** C.k
    if count > cap:
        raise ValueError(f"q^k = {count} exceeds the enumeration cap {cap}")
    start = time.perf_counter()
    if C.k == 0:
        raise ValueError("the zero code has no minimum distance")
    if F.p == 2:
        d, word = _min_weight_binary(C)
    else:
        d, word = _min_weight_prime(C)
    return OracleResult(d, word, count, time.perf_counter() - start, C.n)


def classical_bch_decode(C: RepeatedRootCyclicCode, r: Polynomial, f: int, m: int, delta: int):
    """Textbook simple-root decoder: Sugiyama EEA, Chien search, Forney with the formal derivative.

    Corrects up to (delta - 1) // 2 errors using the zeros gamma^(f + i m),
    i < delta - 1. Returns the corrected word or None on failure.
    """
    if C.s != 0:
        raise ValueError("the classical decoder handles simple-root codes only")
    S_field, lift, g, n = C.splitting_field, C.lift, C.gamma, C.n
    rS = r.map(lift)
    L = delta - 1
    S = Polynomial(S_field, [rS.evaluate(S_field.pow(g, (f + i * m) % n)) for i in range(L)])
    if S.is_zero():
        return r if C.is_codeword(r) else None
    t = L // 2
    r0, r1 = Polynomial.monomial(S_field, L), S
    v0, v1 = Polynomial.zero(S_field), Polynomial.one(S_field)
    while r1.degree >= t:
        q, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        v0, v1 = v1, v0 - q * v1
    lam, omega = v1, r1
    if lam.coeff(0) == 0:
        return None
    c = S_field.inv(lam.coeff(0))
    lam, omega = lam.scale(c), omega.scale(c)
    # formal derivative
    dlam = Polynomial(S_field, [S_field.mul(S_field.scalar(i), lam.coeff(i)) for i in range(1, lam.degree + 1)])
    out = list(r.padded(n))
    found = 0
    for j in range(n):
        xj = S_field.pow(g, j * m % n)
        xinv = S_field.inv(xj)
        if lam.evaluate(xinv):
            continue
        found += 1
        num = S_field.mul(xj, omega.evaluate(xinv))
        den = dlam.evaluate(xinv)
        if not den:
            return None
        wj = S_field.neg(S_field.div(num, den))
        e = S_field.mul(wj, S_field.pow(g, -f * j % n))
        if not lift.in_image(e):
            return None
        out[j] = C.field.sub(out[j], lift.preimage(e))
    if found != lam.degree:
        return None
    decoded = Polynomial(C.field, out)
    return decoded if C.is_codeword(decoded) else None
