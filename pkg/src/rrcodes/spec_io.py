"""JSON (de)serialization of codes, witnesses, received words and experiment configs."""

from __future__ import annotations

import json
import re
from pathlib import Path

from .bounds import AssociatedCode, BoundWitness, bound_II_search, bound_III_search, product_witness, verify_witness
from .channel import ExperimentConfig
from .code import DefiningSet, RepeatedRootCyclicCode, code_from_defining_set
from .field import Field, field_create
from .poly import Polynomial


class SpecError(ValueError):
    """Malformed or inconsistent input file."""


def _require(d: dict, key: str, where: str):
    if key not in d:
        raise SpecError(f"{where}: missing key {key!r}")
    return d[key]


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc


def field_from_dict(d: dict) -> Field:
    p, m = int(_require(d, "p", "field")), int(d.get("m", 1))
    modulus = d.get("modulus")
    try:
        F = field_create(p, m)
        if modulus is not None and tuple(int(c) for c in modulus) != F.modulus:
            F = Field(p, m, modulus)
    except ValueError as exc:
        raise SpecError(f"field: {exc}") from exc
    return F


def code_from_dict(d: dict) -> RepeatedRootCyclicCode:
    F = field_from_dict(_require(d, "field", "code spec"))
    n_prime = int(_require(d, "n_prime", "code spec"))
    s = int(d.get("s", 0))
    entries = _require(d, "defining_set", "code spec")
    try:
        pairs = [(int(i), int(mult)) for i, mult in entries]
        if len({i % n_prime for i, _ in pairs}) != len(pairs):
            raise ValueError("repeated index in the defining set")
        D = DefiningSet(n_prime, pairs)
        return code_from_defining_set(F, n_prime, s, D)
    except (ValueError, TypeError) as exc:
        raise SpecError(f"code spec: {exc}") from exc


def code_to_dict(C: RepeatedRootCyclicCode) -> dict:
    return {
        "field": C.field.descriptor(),
        "n_prime": C.n_prime,
        "s": C.s,
        "defining_set": C.defining_set.as_pairs(),
    }


def load_code(path) -> RepeatedRootCyclicCode:
    return code_from_dict(load_json(path))


def assoc_from_dict(d: dict, name: str = "") -> AssociatedCode:
    """Associated code: a code spec with s = 0 and an optional known "distance"."""
    from .oracle import min_distance_exhaustive

    B = code_from_dict(d)
    if B.s != 0:
        raise SpecError("the associated code must have s = 0")
    dist = d.get("distance")
    if dist is None:
        dist = min_distance_exhaustive(B).distance
    return AssociatedCode(B, int(dist), d.get("name", name))


def witness_from_dict(C: RepeatedRootCyclicCode, d: dict, assoc: AssociatedCode | None = None) -> BoundWitness:
    family = str(_require(d, "family", "witness")).upper()
    params = _require(d, "params", "witness")
    f, m = params.get("f"), params.get("m")
    delta = int(_require(d, "delta", "witness"))
    if f is None or m is None:
        raise SpecError("witness: params need f and m")
    if family in ("I", "II"):
        nu = int(d.get("nu", 0))
        w = BoundWitness(family, int(f) % C.n_prime, int(m), delta, delta + nu, nu=nu, modulus=C.n_prime)
    elif family == "III":
        if assoc is None:
            raise SpecError("a Bound III witness needs the associated code")
        try:
            w = product_witness(C, assoc, int(f), int(m), delta)
        except ValueError as exc:
            raise SpecError(f"witness: {exc}") from exc
    else:
        raise SpecError(f"witness: unknown family {family!r}")
    if "value" in d and int(d["value"]) != w.value:
        raise SpecError(f"witness: value {d['value']} does not match the parameters ({w.value})")
    if not verify_witness(C, w):
        raise SpecError("witness: run condition does not hold for this code")
    return w


def read_received(path, C: RepeatedRootCyclicCode) -> Polynomial:
    """Whitespace- or comma-separated hex symbols, lowest position first."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    tokens = [t for t in re.split(r"[\s,]+", text) if t]
    if len(tokens) != C.n:
        raise SpecError(f"received word has {len(tokens)} symbols, expected n = {C.n}")
    try:
        values = [int(t, 16) for t in tokens]
    except ValueError as exc:
        raise SpecError(f"received word: {exc}") from exc
    if any(not 0 <= v < C.field.q for v in values):
        raise SpecError(f"received symbol outside GF({C.field.q})")
    return Polynomial(C.field, values)


def write_received(path, C: RepeatedRootCyclicCode, r: Polynomial) -> None:
    Path(path).write_text(" ".join(f"{x:x}" for x in r.padded(C.n)) + "\n")


def _taus(spec) -> list[int]:
    if isinstance(spec, dict):
        return list(range(int(spec["start"]), int(spec["stop"]) + 1))
    return [int(t) for t in spec]


def config_from_dict(d: dict, base: Path | None = None) -> ExperimentConfig:
    base = base or Path(".")
    if "code_file" in d:
        C = load_code(base / d["code_file"])
    else:
        C = code_from_dict(_require(d, "code", "config"))
    alg = str(d.get("alg", "alg1")).lower()
    if alg in ("1", "2"):
        alg = "alg" + alg
    assoc = b = None
    wspec = d.get("witness", "search")
    if alg == "alg2":
        assoc = assoc_from_dict(_require(d, "assoc", "config"))
        if wspec == "search":
            witness = bound_III_search(C, [assoc])
        else:
            witness = witness_from_dict(C, wspec, assoc)
        if "b" in d:
            b = Polynomial(C.field, [int(x) for x in d["b"]])
        else:
            from .oracle import min_distance_exhaustive

            b = min_distance_exhaustive(assoc.code).codeword
    else:
        witness = bound_II_search(C) if wspec == "search" else witness_from_dict(C, wspec)
    cfg = ExperimentConfig(
        code=C, alg=alg, witness=witness, assoc=assoc, b=b,
        taus=_taus(d.get("taus", [0, 1, 2])), trials=int(d.get("trials", 1000)),
        seed=int(d.get("seed", 0)), tau_max=d.get("tau_max"),
    )
    try:
        cfg.validate()
    except ValueError as exc:
        raise SpecError(f"config: {exc}") from exc
    return cfg
