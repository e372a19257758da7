"""Seeded corpus of small repeated-root codes for soundness checks against the oracle."""

import math
import random

from rrcodes.code import DefiningSet, code_from_defining_set
from rrcodes.field import field_create, multiplicative_order
from rrcodes.poly import cyclotomic_cosets

# (p, s) -> largest dimension the brute-force oracle should face
K_MAX = {(2, 1): 18, (2, 2): 18, (3, 1): 10, (3, 2): 9}
SPLIT_CAP = 1 << 12


def random_code(rng: random.Random, p: int, s: int, n_prime: int):
    F = field_create(p, 1)
    burst = p ** s
    entries = []
    for coset in cyclotomic_cosets(n_prime, p):
        mult = rng.choice([0, 0, burst, burst, rng.randint(1, burst)])
        entries += [(i, mult) for i in coset]
    D = DefiningSet(n_prime, entries)
    return code_from_defining_set(F, n_prime, s, D)


def corpus(size: int = 60, seed: int = 20240611):
    """``size`` distinct codes with p in {2, 3}, s in {1, 2}, n' <= 13, small dimension."""
    rng = random.Random(seed)
    out, seen = [], set()
    shapes = [(p, s, n) for p in (2, 3) for s in (1, 2) for n in range(2, 14)
              if math.gcd(n, p) == 1 and p ** multiplicative_order(p, n) <= SPLIT_CAP]
    attempts = 0
    while len(out) < size:
        attempts += 1
        if attempts > 50 * size:
            raise RuntimeError("corpus generation stalled")
        p, s, n = rng.choice(shapes)
        C = random_code(rng, p, s, n)
        key = (p, s, n, C.defining_set)
        if key in seen or not 1 <= C.k <= K_MAX[(p, s)]:
            continue
        if C.generator.degree < C.burst - 1 or len(C.full_indices()) in (0, n):
            continue
        seen.add(key)
        out.append(C)
    return out
