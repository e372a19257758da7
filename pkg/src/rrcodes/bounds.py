"""Minimum-distance lower bounds from runs of full-multiplicity zeros.

Three families are searched:

* ``I``: delta - 1 zeros gamma^(f + i*m) of multiplicity p^s give d >= delta.
* ``II``: nu + 1 such runs starting at f, f+1, ..., f+nu give d >= delta + nu.
* ``III``: a run in the defining set of the product with an associated
  simple-root code B of distance d_b gives d >= ceil(delta / d_b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .code import DefiningSet, RepeatedRootCyclicCode, code_from_defining_set
from .field import embed, field_create, multiplicative_order
from .poly import Polynomial, poly_gcd, reduce_cyclic, root_multiplicity, x_pow_minus_one


@dataclass(frozen=True)
class AssociatedCode:
    """Simple-root code B used by Bound III, with its (known) minimum distance."""

    code: RepeatedRootCyclicCode
    distance: int
    name: str = ""

    def __post_init__(self):
        if self.code.s != 0:
            raise ValueError("the associated code must be simple-root (s = 0)")


@dataclass(frozen=True)
class BoundWitness:
    family: str
    f: int | None
    m: int | None
    delta: int
    value: int
    nu: int = 0
    modulus: int = 0
    # Bound III only
    f_a: int | None = None
    f_b: int | None = None
    m_a: int | None = None
    m_b: int | None = None
    n_b: int | None = None
    d_b: int | None = None
    assoc: AssociatedCode | None = dc_field(default=None, compare=False, repr=False)

    def witness_indices(self) -> list[int]:
        if self.f is None:
            return []
        n = self.modulus
        return sorted({(self.f + j + i * self.m) % n for j in range(self.nu + 1) for i in range(self.delta - 1)})

    def params(self) -> dict:
        out = {"f": self.f, "m": self.m}
        if self.family == "III":
            out.update(f_a=self.f_a, f_b=self.f_b, m_a=self.m_a, m_b=self.m_b, n_b=self.n_b, d_b=self.d_b)
            if self.assoc is not None and self.assoc.name:
                out["assoc"] = self.assoc.name
        return out

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params(),
            "delta": self.delta,
            "nu": self.nu,
            "value": self.value,
            "witness_indices": self.witness_indices(),
        }


def zero_run(D: DefiningSet, f: int, m: int, required_mult: int) -> int:
    """Length of the run f, f+m, f+2m, ... (mod n') of indices with multiplicity >= required_mult."""
    n = D.modulus
    if math.gcd(n, m) != 1:
        raise ValueError(f"gcd({n}, {m}) != 1")
    run = 0
    while run < n and D.multiplicity(f + run * m) >= required_mult:
        run += 1
    return run


def _steps(n: int) -> list[int]:
    return [m for m in range(1, n) if math.gcd(m, n) == 1] or [1]


def _run_table(D: DefiningSet, required: int) -> dict:
    n = D.modulus
    return {(f, m): zero_run(D, f, m, required) for m in _steps(n) for f in range(n)}


def _check_searchable(C: RepeatedRootCyclicCode) -> None:
    if C.generator.degree < C.burst - 1:
        raise ValueError(f"deg g = {C.generator.degree} < p^s - 1 = {C.burst - 1}")
    if len(C.full_indices()) == C.n_prime:
        raise ValueError("every root has full multiplicity: g = X^n - 1, the code is trivial")


def _best_run(D: DefiningSet, required: int):
    """(run, f, m) with the longest run, smallest (f, m) on ties."""
    best = (0, None, None)
    for (f, m), run in sorted(_run_table(D, required).items()):
        if run > best[0]:
            best = (run, f, m)
    return best


def bound_I_search(C: RepeatedRootCyclicCode) -> BoundWitness:
    _check_searchable(C)
    run, f, m = _best_run(C.defining_set, C.burst)
    if run == 0:
        return BoundWitness("I", None, None, 1, 1, modulus=C.n_prime)
    return BoundWitness("I", f, m, run + 1, run + 1, modulus=C.n_prime)


def _bound_II_candidates(C: RepeatedRootCyclicCode, nu_max: int | None):
    """Yield (value, f, m, nu, delta) for every (f, m, nu) with delta >= 2, delta maximal."""
    _check_searchable(C)
    n = C.n_prime
    nu_max = n - 1 if nu_max is None else nu_max
    if nu_max < 0:
        raise ValueError("nu_max must be >= 0")
    runs = _run_table(C.defining_set, C.burst)
    for m in _steps(n):
        for f in range(n):
            low = n
            for nu in range(min(nu_max, n - 1) + 1):
                low = min(low, runs[((f + nu) % n, m)])
                if low == 0:
                    break
                yield low + 1 + nu, f, m, nu, low + 1


def bound_II_search(C: RepeatedRootCyclicCode, nu_max: int | None = None) -> BoundWitness:
    """Best delta + nu; smallest (f, m) on ties, then the largest nu."""
    best = None
    for value, f, m, nu, delta in _bound_II_candidates(C, nu_max):
        key = (value, -f, -m, nu)
        if best is None or key > best[0]:
            best = (key, BoundWitness("II", f, m, delta, value, nu=nu, modulus=C.n_prime))
    if best is None:
        return BoundWitness("II", None, None, 1, 1, modulus=C.n_prime)
    return best[1]


def bound_II_optima(C: RepeatedRootCyclicCode, nu_max: int | None = None) -> list[BoundWitness]:
    """Every (f, m, nu) attaining the Bound II maximum."""
    cands = list(_bound_II_candidates(C, nu_max))
    if not cands:
        return []
    top = max(c[0] for c in cands)
    return [BoundWitness("II", f, m, delta, value, nu=nu, modulus=C.n_prime)
            for value, f, m, nu, delta in sorted(cands, key=lambda c: (c[1], c[2], c[3])) if value == top]


# -- product codes --

def bezout_pair(n_a: int, n_b: int) -> tuple[int, int]:
    """(a, b) with a*n_a + b*n_b = 1 and 0 <= a < n_b."""
    if math.gcd(n_a, n_b) != 1:
        raise ValueError(f"gcd({n_a}, {n_b}) != 1")
    if n_b == 1:
        return 0, 1
    a = pow(n_a, -1, n_b)
    return a, (1 - a * n_a) // n_b


def _check_pair(A: RepeatedRootCyclicCode, B: RepeatedRootCyclicCode) -> None:
    if B.s != 0:
        raise ValueError("B must be a simple-root code")
    if A.field != B.field:
        raise ValueError("A and B must share the base field")
    if math.gcd(A.n, B.n) != 1:
        raise ValueError(f"gcd(n_a={A.n}, n_b={B.n}) != 1")


def product_defining_set(A: RepeatedRootCyclicCode, B: RepeatedRootCyclicCode) -> DefiningSet:
    """Defining set of A (x) B over n'_a * n_b, with B's zeros lifted to multiplicity p^s."""
    _check_pair(A, B)
    na, nb = A.n_prime, B.n_prime
    N = na * nb
    lifted_b = DefiningSet.uniform(nb, B.defining_set.indices(), A.burst)
    out = DefiningSet(N)
    for j in range(nb):
        out = out.cupmax(A.defining_set.shift(j * na, N))
    for j in range(na):
        out = out.cupmax(lifted_b.shift(j * nb, N))
    return out


def _substitute_cyclic(g: Polynomial, e: int, n: int) -> Polynomial:
    """g(X^e) mod (X^n - 1)."""
    add = g.field.add
    out = [0] * n
    for i, c in enumerate(g.coeffs):
        if c:
            out[i * e % n] = add(out[i * e % n], c)
    return Polynomial(g.field, out)


def product_generator(A: RepeatedRootCyclicCode, B: RepeatedRootCyclicCode) -> Polynomial:
    """gcd(X^N - 1, g_a(X^(b n_b)) * g_b(X^(a n_a))), N = n_a n_b, exponents reduced mod N."""
    _check_pair(A, B)
    a, b = bezout_pair(A.n, B.n)
    N = A.n * B.n
    ga = _substitute_cyclic(A.generator, b * B.n % N, N)
    gb = _substitute_cyclic(B.generator, a * A.n % N, N)
    return poly_gcd(x_pow_minus_one(A.field, N), reduce_cyclic(ga * gb, N))


class ProductCode:
    """A (x) B with the joint splitting field and gamma = alpha * beta."""

    def __init__(self, A: RepeatedRootCyclicCode, B: RepeatedRootCyclicCode):
        _check_pair(A, B)
        self.A, self.B = A, B
        self.a, self.b = bezout_pair(A.n, B.n)
        self.n = A.n * B.n
        self.n_prime = A.n_prime * B.n_prime
        F = A.field
        deg = math.lcm(A.splitting_field.m, B.splitting_field.m)
        J = field_create(F.p, deg)
        self.joint_field = J
        self.lift = embed(F, J)
        self.lift_a = embed(A.splitting_field, J, base=(A.lift, self.lift))
        self.lift_b = embed(B.splitting_field, J, base=(B.lift, self.lift))
        self.alpha = self.lift_a(A.gamma)
        self.beta = self.lift_b(B.gamma)
        self.gamma = J.mul(self.alpha, self.beta)

    @cached_property
    def defining_set(self) -> DefiningSet:
        return product_defining_set(self.A, self.B)

    @cached_property
    def generator(self) -> Polynomial:
        return product_generator(self.A, self.B)

    @property
    def dimension(self) -> int:
        return self.A.k * self.B.k

    def root_profile(self) -> DefiningSet:
        """Multiplicity of each gamma^i as a root of the gcd-formula generator."""
        J = self.joint_field
        gJ = self.generator.map(self.lift)
        return DefiningSet(self.n_prime, [(i, root_multiplicity(gJ, J.pow(self.gamma, i))) for i in range(self.n_prime)])


def bound_III_search(A: RepeatedRootCyclicCode, candidates) -> BoundWitness:
    """Best ceil(delta / d_b) over the candidate associated codes (first candidate wins ties)."""
    candidates = list(candidates)
    if not candidates:
        raise ValueError("no associated codes supplied")
    best = None
    for cand in candidates:
        B = cand.code
        P = product_defining_set(A, B)
        run, f, m = _best_run(P, A.burst)
        if run == 0:
            continue
        delta = run + 1
        value = -(-delta // cand.distance)
        if best is None or value > best.value:
            best = _product_witness(A, cand, f, m, delta, value)
    if best is None:
        return BoundWitness("III", None, None, 1, 1)
    return best


def _product_witness(A, cand: AssociatedCode, f: int, m: int, delta: int, value: int) -> BoundWitness:
    na, nb = A.n_prime, cand.code.n
    m_a = m % na
    while math.gcd(A.n, m_a) != 1:
        m_a += na
    return BoundWitness(
        "III", f, m, delta, value, modulus=na * nb,
        f_a=f % na, f_b=f % nb, m_a=m_a, m_b=m % nb, n_b=nb, d_b=cand.distance, assoc=cand,
    )


def product_witness(A: RepeatedRootCyclicCode, cand: AssociatedCode, f: int, m: int, delta: int | None = None) -> BoundWitness:
    """Bound III witness for a caller-chosen (f, m); delta defaults to the full run length there."""
    P = product_defining_set(A, cand.code)
    run = zero_run(P, f, m, A.burst)
    delta = run + 1 if delta is None else delta
    if delta < 2 or delta - 1 > run:
        raise ValueError(f"no run of {max(delta - 1, 1)} full-multiplicity zeros at f={f}, m={m}")
    return _product_witness(A, cand, f % P.modulus, m, delta, -(-delta // cand.distance))


def parity_code(field, n_b: int) -> AssociatedCode:
    B = code_from_defining_set(field, n_b, 0, DefiningSet.uniform(n_b, [0], 1))
    return AssociatedCode(B, 2, f"parity[{n_b},{n_b - 1},2]")


def repetition_code(field, n_b: int) -> AssociatedCode:
    B = code_from_defining_set(field, n_b, 0, DefiningSet.uniform(n_b, range(1, n_b), 1))
    return AssociatedCode(B, n_b, f"repetition[{n_b},1,{n_b}]")


def trivial_code(field, n_b: int = 1) -> AssociatedCode:
    B = code_from_defining_set(field, n_b, 0, DefiningSet(n_b))
    return AssociatedCode(B, 1, f"full[{n_b},{n_b},1]")


def standard_candidates(A: RepeatedRootCyclicCode, max_nb: int = 7, field_cap: int = 1 << 16) -> list[AssociatedCode]:
    """Parity and repetition codes of length 2..max_nb coprime to n_a.

    Lengths whose splitting field would exceed ``field_cap`` are skipped.
    """
    F = A.field
    out = []
    for nb in range(2, max_nb + 1):
        if math.gcd(nb, A.n) != 1:
            continue
        try:
            deg = math.lcm(A.splitting_field.m, F.m * multiplicative_order(F.q, nb))
            if F.p ** deg > field_cap:
                continue
            out.append(parity_code(F, nb))
            if nb > 2:
                out.append(repetition_code(F, nb))
        except ValueError:
            continue
    return out


def verify_witness(C: RepeatedRootCyclicCode, w: BoundWitness) -> bool:
    """Re-check the run conditions behind a witness directly on the defining set."""
    if w.f is None:
        return w.value == 1
    try:
        if w.family in ("I", "II"):
            D = C.defining_set
            if w.delta < 2 or w.nu < 0 or math.gcd(C.n_prime, w.m) != 1:
                return False
            if w.family == "I" and w.nu != 0:
                return False
            ok = all(zero_run(D, w.f + j, w.m, C.burst) >= w.delta - 1 for j in range(w.nu + 1))
            return ok and w.value == w.delta + w.nu
        if w.family == "III":
            if w.assoc is None:
                return False
            B = w.assoc.code
            P = product_defining_set(C, B)
            if w.delta < 2 or math.gcd(P.modulus, w.m) != 1:
                return False
            if math.gcd(C.n, w.m_a) != 1 or math.gcd(B.n, w.m_b) != 1:
                return False
            if (w.f - w.f_a) % C.n_prime or (w.f - w.f_b) % B.n or (w.m - w.m_a) % C.n_prime or (w.m - w.m_b) % B.n:
                return False
            if w.d_b != w.assoc.distance:
                return False
            return zero_run(P, w.f, w.m, C.burst) >= w.delta - 1 and w.value == -(-w.delta // w.d_b)
    except ValueError:
        return False
    return False
