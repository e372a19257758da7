"""Syndrome decoding of p^s-phased burst errors.

``decode_alg1`` folds the received word into a length-n' word over
GF(q^(p^s)) and solves nu + 1 key equations jointly. ``decode_alg2`` splits
the received word into its p^s phases and decodes them as an interleaved
code through the product with an associated simple-root code.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .bounds import BoundWitness, ProductCode, verify_witness
from .code import FoldedWord, RepeatedRootCyclicCode, fold, unfold
from .field import Field
from .poly import Polynomial


@dataclass(frozen=True)
class SyndromeSet:
    field: Field
    sequences: tuple  # tuples of exactly delta - 1 field ints
    params: dict

    @property
    def length(self) -> int:
        return len(self.sequences[0]) if self.sequences else 0

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial(self.field, s) for s in self.sequences]

    def is_zero(self) -> bool:
        return not any(any(s) for s in self.sequences)


@dataclass(frozen=True)
class KeyEquationSolution:
    locator: Polynomial
    evaluators: tuple

    @property
    def tau(self) -> int:
        return self.locator.degree

    def satisfies(self, syndromes: SyndromeSet) -> bool:
        """Lambda * S_t = Omega_t mod X^(delta-1) and deg Omega_t < deg Lambda for every t."""
        L = syndromes.length
        for S, omega in zip(syndromes.polynomials(), self.evaluators):
            if (self.locator * S).truncate(L) != omega:
                return False
            if not omega.is_zero() and omega.degree >= self.locator.degree:
                return False
        return len(self.evaluators) == len(syndromes.sequences)


@dataclass
class DecoderReport:
    outcome: str
    decoded: Polynomial | None = None
    error_positions: list = dc_field(default_factory=list)
    error_values: dict = dc_field(default_factory=dict)
    tau: int = 0
    solution: KeyEquationSolution | None = None
    checks: dict = dc_field(default_factory=dict)
    reason: str = ""

    @property
    def success(self) -> bool:
        return self.outcome == "success"

    def to_dict(self) -> dict:
        def hexval(v):
            return [f"{x:#x}" for x in v] if isinstance(v, tuple) else f"{v:#x}"

        return {
            "outcome": self.outcome,
            "tau": self.tau,
            "error_positions": list(self.error_positions),
            "error_values": [hexval(self.error_values[j]) for j in self.error_positions],
            "checks": dict(self.checks),
            "reason": self.reason,
        }


def _failure(reason: str, checks: dict, solution=None, positions=(), tau=0) -> DecoderReport:
    return DecoderReport("failure", None, list(positions), {}, tau, solution, checks, reason)


# -- multisequence key-equation solver --

def _shifted_degrees(row, shifts):
    return [p.degree + sh if not p.is_zero() else -1 for p, sh in zip(row, shifts)]


def _leading(row, shifts):
    """(row degree, leftmost column attaining it)."""
    degs = _shifted_degrees(row, shifts)
    top = max(degs)
    return top, degs.index(top)


def geea(syndromes: SyndromeSet) -> KeyEquationSolution:
    """Shortest Lambda with Lambda * S_t = Omega_t mod X^(delta-1), deg Omega_t < deg Lambda for all t.

    Solved by reducing the module basis
        [1, S_0, ..., S_T], [0, X^L, 0, ...], ..., [0, ..., X^L]
    to weak Popov form under the column shift (0, 1, ..., 1); the row whose
    leading entry sits in the first column carries (Lambda, Omega_0, ...).
    For a single sequence this is the extended Euclidean algorithm.
    """
    K = syndromes.field
    T = len(syndromes.sequences)
    if T == 0:
        raise ValueError("need at least one syndrome sequence")
    L = syndromes.length
    zero, one = Polynomial.zero(K), Polynomial.one(K)
    xl = Polynomial.monomial(K, L)
    rows = [[one] + syndromes.polynomials()]
    for t in range(T):
        rows.append([zero] * (t + 1) + [xl] + [zero] * (T - t - 1))
    shifts = [0] + [1] * T

    while True:
        lead = [_leading(r, shifts) for r in rows]
        owner: dict[int, int] = {}
        clash = None
        for i, (_, pos) in enumerate(lead):
            if pos in owner:
                clash = (owner[pos], i)
                break
            owner[pos] = i
        if clash is None:
            break
        i, j = clash
        if lead[i][0] < lead[j][0]:
            i, j = j, i
        pos = lead[i][1]
        shift = lead[i][0] - lead[j][0]
        c = K.div(rows[i][pos].lc, rows[j][pos].lc)
        rows[i] = [a - b.scale(c).shift(shift) for a, b in zip(rows[i], rows[j])]

    row = rows[owner[0]]
    lam, omegas = row[0], row[1:]
    c0 = lam.coeff(0)
    norm = K.inv(c0) if c0 else K.inv(lam.lc)
    return KeyEquationSolution(lam.scale(norm), tuple(o.scale(norm) for o in omegas))


def chien_search(locator: Polynomial, candidates) -> list[int]:
    """Labels of the candidate points that are roots of the locator."""
    return [label for label, x in candidates if locator.evaluate(x) == 0]


# -- Algorithm 1: folded code --

def _working_root(C: RepeatedRootCyclicCode) -> int:
    return C.to_working(C.phase_root)


def _check_alg1_witness(C: RepeatedRootCyclicCode, w: BoundWitness) -> None:
    if w.family not in ("I", "II") or w.f is None:
        raise ValueError("Algorithm 1 needs a Bound I or II witness")
    if w.modulus != C.n_prime or not verify_witness(C, w):
        raise ValueError(f"witness {w.to_dict()} does not hold for {C!r}")


def syndromes_folded(C: RepeatedRootCyclicCode, r_folded: FoldedWord, w: BoundWitness) -> SyndromeSet:
    _check_alg1_witness(C, w)
    if r_folded.basis is not C.folding or len(r_folded) != C.n_prime:
        raise ValueError("folded word does not belong to this code")
    W = C.folding.field
    g = _working_root(C)
    poly = r_folded.as_polynomial()
    seqs = []
    for t in range(w.nu + 1):
        seqs.append(tuple(poly.evaluate(W.pow(g, w.f + i * w.m + t)) for i in range(w.delta - 1)))
    return SyndromeSet(W, tuple(seqs), {"f": w.f, "m": w.m, "delta": w.delta, "nu": w.nu})


def error_values_folded(C: RepeatedRootCyclicCode, sol: KeyEquationSolution, positions, w: BoundWitness, t: int = 0) -> dict:
    """Folded error symbol at each located position, read off evaluator t."""
    if len(positions) != sol.tau:
        raise ValueError("need exactly deg(Lambda) located positions")
    W = C.folding.field
    g = _working_root(C)
    n = C.n_prime
    out = {}
    for j in positions:
        x_inv = W.pow(g, -j * w.m % n)
        den = W.pow(g, (w.f + t) * j % n)
        for i in positions:
            if i != j:
                den = W.mul(den, W.sub(1, W.pow(g, (i - j) * w.m % n)))
        assert den, "distinct positions cannot give a zero denominator"
        out[j] = W.div(sol.evaluators[t].evaluate(x_inv), den)
    return out


def decode_alg1(C: RepeatedRootCyclicCode, r: Polynomial, w: BoundWitness) -> DecoderReport:
    if r.field != C.field or r.degree >= C.n:
        raise ValueError(f"received word must be over {C.field!r} with length {C.n}")
    rF = fold(C, r)
    S = syndromes_folded(C, rF, w)
    checks = {"key_eq": True, "root_count": True, "reencode": True}
    if S.is_zero():
        checks["reencode"] = C.is_codeword(r)
        if not checks["reencode"]:
            return _failure("zero syndromes but not a codeword", checks)
        return DecoderReport("success", r, [], {}, 0, None, checks)

    sol = geea(S)
    checks["key_eq"] = sol.satisfies(S)
    if not checks["key_eq"]:
        return _failure("key equation not satisfied", checks, sol)
    W, g, n = C.folding.field, _working_root(C), C.n_prime
    cands = [(j, W.pow(g, -j * w.m % n)) for j in range(n)]
    E = chien_search(sol.locator, cands)
    if len(E) < sol.tau or sol.locator.coeff(0) != 1:
        checks["root_count"] = False
        return _failure(f"{len(E)} roots for a locator of degree {sol.tau}", checks, sol, E, sol.tau)

    values = [error_values_folded(C, sol, E, w, t) for t in range(w.nu + 1)]
    if any(v != values[0] for v in values[1:]):
        checks["reencode"] = False
        return _failure("error values disagree across evaluators", checks, sol, E, sol.tau)
    values = values[0]
    basis = C.folding
    if any(v not in basis.coords for v in values.values()):
        checks["reencode"] = False
        return _failure("error value outside GF(q^(p^s))", checks, sol, E, sol.tau)
    symbols = list(rF.symbols)
    for j, v in values.items():
        symbols[j] = W.sub(symbols[j], v)
    decoded = unfold(FoldedWord(basis, tuple(symbols)))
    checks["reencode"] = C.is_codeword(decoded)
    if not checks["reencode"]:
        return _failure("corrected word is not a codeword", checks, sol, E, sol.tau)
    values = {j: basis.split(v) for j, v in values.items()}
    return DecoderReport("success", decoded, E, values, sol.tau, sol, checks)


# -- Algorithm 2: interleaved phases through a product code --

def decompose(C: RepeatedRootCyclicCode, r: Polynomial) -> list[Polynomial]:
    """Phases r_t with r(X) = sum_t r_t(X^(p^s)) X^t."""
    return C.phases(r)


def reassemble(C: RepeatedRootCyclicCode, parts) -> Polynomial:
    return C.from_phases(parts)


class _ProductContext:
    """Joint-field constants for one (A, B, b, witness) combination."""

    def __init__(self, A, B, b: Polynomial, f_a, f_b, m_a, m_b, delta):
        pc = ProductCode(A, B)
        J = pc.joint_field
        self.J = J
        self.lift = pc.lift
        self.alpha = pc.lift_a(A.phase_root)
        self.beta = pc.lift_b(B.gamma)
        na, nb = A.n_prime, B.n
        self.Y = b.support()
        self.b_vals = {l: pc.lift(b.coeff(l)) for l in self.Y}
        bJ = b.map(pc.lift)
        self.b_evals = [bJ.evaluate(J.pow(self.beta, (f_b + i * m_b) % nb)) for i in range(delta - 1)]
        self.points = [J.pow(self.alpha, (f_a + i * m_a) % na) for i in range(delta - 1)]
        self.x = {(j, l): J.mul(J.pow(self.alpha, j * m_a % na), J.pow(self.beta, l * m_b % nb))
                  for j in range(na) for l in self.Y}
        l0 = self.Y[0]
        self.candidates = [(j, J.inv(self.x[(j, l0)])) for j in range(na)]
        self.weights = {(j, l): J.mul(J.mul(self.b_vals[l], J.pow(self.alpha, f_a * j % na)),
                                      J.pow(self.beta, f_b * l % nb))
                        for j in range(na) for l in self.Y}


@lru_cache(maxsize=64)
def _product_context(A, B, b, f_a, f_b, m_a, m_b, delta) -> _ProductContext:
    return _ProductContext(A, B, b, f_a, f_b, m_a, m_b, delta)


def _check_alg2_inputs(A, B, b: Polynomial, w: BoundWitness) -> None:
    if w.family != "III" or w.f is None:
        raise ValueError("Algorithm 2 needs a Bound III witness")
    if w.assoc is not None and w.assoc.code is not B:
        raise ValueError("witness was built for a different associated code")
    if not verify_witness(A, w):
        raise ValueError(f"witness {w.to_dict()} does not hold for {A!r}")
    if not B.is_codeword(b) or b.is_zero():
        raise ValueError("b(X) is not a nonzero codeword of the associated code")
    if b.weight() != w.d_b:
        raise ValueError(f"b(X) has weight {b.weight()}, expected d_b = {w.d_b}")


def syndromes_product(A: RepeatedRootCyclicCode, B: RepeatedRootCyclicCode, b: Polynomial, r_parts, w: BoundWitness) -> SyndromeSet:
    _check_alg2_inputs(A, B, b, w)
    if len(r_parts) != A.burst:
        raise ValueError(f"expected {A.burst} phases, got {len(r_parts)}")
    ctx = _product_context(A, B, b, w.f_a, w.f_b, w.m_a, w.m_b, w.delta)
    return _product_syndromes(ctx, r_parts, w)


def _product_syndromes(ctx: _ProductContext, r_parts, w) -> SyndromeSet:
    J = ctx.J
    seqs = []
    for part in r_parts:
        pJ = part.map(ctx.lift)
        seqs.append(tuple(J.mul(pJ.evaluate(x), bv) for x, bv in zip(ctx.points, ctx.b_evals)))
    params = {"f_a": w.f_a, "f_b": w.f_b, "m_a": w.m_a, "m_b": w.m_b, "delta": w.delta}
    return SyndromeSet(J, tuple(seqs), params)


def decode_alg2(A: RepeatedRootCyclicCode, B: RepeatedRootCyclicCode, b: Polynomial, r: Polynomial,
                w: BoundWitness, tau_max: int | None = None) -> DecoderReport:
    """Decode A as a p^s-interleaved code; success is probabilistic beyond the unique radius."""
    if r.field != A.field or r.degree >= A.n:
        raise ValueError(f"received word must be over {A.field!r} with length {A.n}")
    _check_alg2_inputs(A, B, b, w)
    ctx = _product_context(A, B, b, w.f_a, w.f_b, w.m_a, w.m_b, w.delta)
    J = ctx.J
    parts = decompose(A, r)
    S = _product_syndromes(ctx, parts, w)
    checks = {"key_eq": True, "root_count": True, "reencode": True}
    if S.is_zero():
        checks["reencode"] = A.is_codeword(r)
        if not checks["reencode"]:
            return _failure("zero syndromes but not a codeword", checks)
        return DecoderReport("success", r, [], {}, 0, None, checks)

    sol = geea(S)
    checks["key_eq"] = sol.satisfies(S)
    if not checks["key_eq"]:
        return _failure("key equation not satisfied", checks, sol)
    E = chien_search(sol.locator, ctx.candidates)
    tau = len(E)
    Y = ctx.Y
    if tau * len(Y) < sol.tau:
        checks["root_count"] = False
        return _failure(f"{tau} positions x {len(Y)} cannot cover a locator of degree {sol.tau}", checks, sol, E, tau)
    expected = Polynomial.one(J)
    for j in E:
        for l in Y:
            expected = expected * Polynomial(J, (1, J.neg(ctx.x[(j, l)])))
    if expected != sol.locator:
        checks["root_count"] = False
        return _failure("locator does not factor over the located positions", checks, sol, E, tau)
    if tau_max is not None and tau > tau_max:
        return _failure(f"{tau} located positions exceed the radius {tau_max}", checks, sol, E, tau)

    roots = [(j, l) for j in E for l in Y]
    corrected = []
    values: dict[int, list] = {j: [0] * A.burst for j in E}
    for t, part in enumerate(parts):
        omega = sol.evaluators[t]
        coeffs = part.padded(A.n_prime)
        for j in E:
            found = None
            for l in Y:
                xi = J.inv(ctx.x[(j, l)])
                den = ctx.weights[(j, l)]
                for jl in roots:
                    if jl != (j, l):
                        den = J.mul(den, J.sub(1, J.mul(ctx.x[jl], xi)))
                v = J.div(omega.evaluate(xi), den)
                if found is None:
                    found = v
                elif v != found:
                    checks["reencode"] = False
                    return _failure(f"inconsistent error value at position {j}, phase {t}", checks, sol, E, tau)
            if not ctx.lift.in_image(found):
                checks["reencode"] = False
                return _failure(f"error value at position {j} lies outside the base field", checks, sol, E, tau)
            e = ctx.lift.preimage(found)
            values[j][t] = e
            coeffs[j] = A.field.sub(coeffs[j], e)
        corrected.append(Polynomial(A.field, coeffs))
    decoded = reassemble(A, corrected)
    checks["reencode"] = A.is_codeword(decoded)
    if not checks["reencode"]:
        return _failure("corrected word is not a codeword", checks, sol, E, tau)
    return DecoderReport("success", decoded, E, {j: tuple(v) for j, v in values.items()}, tau, sol, checks)
