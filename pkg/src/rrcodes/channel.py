"""Burst-error channel and Monte Carlo decoding experiments."""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from .bounds import AssociatedCode, BoundWitness, bound_II_search
from .code import RepeatedRootCyclicCode
from .decoder import decode_alg1, decode_alg2
from .field import to_digits
from .poly import Polynomial

CSV_COLUMNS = ("tau", "trials", "success", "failure", "miscorrect", "mean_us")


@dataclass(frozen=True)
class ErrorRecord:
    positions: tuple  # phase indices j in [0, n')
    values: tuple  # one p^s-tuple over GF(q) per position
    error: Polynomial


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_codeword(C: RepeatedRootCyclicCode, seed) -> Polynomial:
    rng = _rng(seed)
    u = rng.integers(0, C.field.q, size=C.k)
    return C.encode(Polynomial(C.field, [int(x) for x in u]))


def burst_channel(C: RepeatedRootCyclicCode, c: Polynomial, tau: int, seed):
    """Corrupt tau distinct phases of c with uniformly random nonzero p^s-tuples."""
    if not 0 <= tau <= C.n_prime:
        raise ValueError(f"tau = {tau} outside [0, {C.n_prime}]")
    rng = _rng(seed)
    q, b = C.field.q, C.burst
    positions = sorted(int(j) for j in rng.choice(C.n_prime, size=tau, replace=False))
    e = [0] * C.n
    values = []
    for j in positions:
        digits = tuple(to_digits(int(rng.integers(1, q ** b)), q, b))
        values.append(digits)
        e[j * b:(j + 1) * b] = digits
    err = Polynomial(C.field, e)
    return c + err, ErrorRecord(tuple(positions), tuple(values), err)


@dataclass
class ExperimentConfig:
    code: RepeatedRootCyclicCode
    alg: str = "alg1"
    witness: BoundWitness | None = None  # None: Bound II search (alg1 only)
    assoc: AssociatedCode | None = None
    b: Polynomial | None = None
    taus: list = dc_field(default_factory=lambda: [0, 1, 2])
    trials: int = 1000
    seed: int = 0
    tau_max: int | None = None

    def validate(self) -> None:
        if self.alg not in ("alg1", "alg2"):
            raise ValueError(f"unknown algorithm {self.alg!r}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if any(not 0 <= t <= self.code.n_prime for t in self.taus):
            raise ValueError(f"tau values must lie in [0, {self.code.n_prime}]")
        if self.alg == "alg2":
            if self.witness is None or self.witness.family != "III":
                raise ValueError("alg2 needs a Bound III witness")
            if self.assoc is None or self.b is None:
                raise ValueError("alg2 needs the associated code and b(X)")


def run_experiment(cfg: ExperimentConfig) -> list[dict]:
    """One row per tau with success/failure/miscorrection counts; deterministic in cfg.seed."""
    cfg.validate()
    C = cfg.code
    w = cfg.witness if cfg.witness is not None else bound_II_search(C)
    if cfg.alg == "alg1":
        def decode(r):
            return decode_alg1(C, r, w)
    else:
        B = cfg.assoc.code

        def decode(r):
            return decode_alg2(C, B, cfg.b, r, w, cfg.tau_max)

    rows = []
    for tau in cfg.taus:
        counts = {"success": 0, "failure": 0, "miscorrect": 0}
        elapsed = 0.0
        for trial in range(cfg.trials):
            rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, tau, trial]))
            c = random_codeword(C, rng)
            r, _ = burst_channel(C, c, tau, rng)
            start = time.perf_counter()
            report = decode(r)
            elapsed += time.perf_counter() - start
            if not report.success:
                counts["failure"] += 1
            elif report.decoded == c:
                counts["success"] += 1
            else:
                counts["miscorrect"] += 1
        rows.append({"tau": tau, "trials": cfg.trials, **counts, "mean_us": round(elapsed / cfg.trials * 1e6, 1)})
    return rows


def rows_to_csv(rows) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(str(row[c]) for c in CSV_COLUMNS))
    return "\n".join(lines) + "\n"
