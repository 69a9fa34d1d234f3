"""Arithmetic classification of Cl(p,q): division-ring type, Radon-Hurwitz
numbers, primitive idempotents, and the Wedderburn dimension audit."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    MetricSignature,
    Multivector,
    blade_format,
    blade_square_sign,
    blades_commute,
)

_RH_TABLE = (0, 1, 2, 2, 3, 3, 3, 3)

# Division ring per (p - q) mod 8. "+": direct sum of two simple summands.
_RING_BY_MOD8 = {
    0: "R",
    1: "R+R",
    2: "R",
    3: "C",
    4: "H",
    5: "H+H",
    6: "H",
    7: "C",
}

_RING_DIM = {"R": 1, "C": 2, "H": 4, "R+R": 1, "H+H": 4}


class IdempotentSearchError(RuntimeError):
    """No valid commuting generator set was found (should not happen)."""


@dataclass(frozen=True)
class RingType:
    tag: str
    pq_mod8: int

    @property
    def summands(self) -> int:
        return 2 if self.tag in ("R+R", "H+H") else 1

    @property
    def dim_per_summand(self) -> int:
        return _RING_DIM[self.tag]


@dataclass(frozen=True)
class IdempotentData:
    k: int
    generators_used: tuple[int, ...]  # blade masks
    f: Multivector

    def generator_strings(self) -> list[str]:
        return [blade_format(m) for m in self.generators_used]


@dataclass(frozen=True)
class DimensionAudit:
    p: int
    q: int
    passed: bool
    total_dim: int
    summands: int
    matrix_size: int
    ring_dim: int
    ring_tag: str


def radon_hurwitz(i: int) -> int:
    """The period-8 sequence 0,1,2,2,3,3,3,3 extended both directions
    by r_{i+8} = r_i + 4."""
    return _RH_TABLE[i % 8] + 4 * (i // 8)


def ring_type(p: int, q: int) -> RingType:
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    mod = (p - q) % 8
    return RingType(_RING_BY_MOD8[mod], mod)


def idempotent_factor_count(p: int, q: int) -> int:
    return q - radon_hurwitz(q - p)


def _gf2_reduce(x: int, pivots: dict[int, int]) -> int:
    while x:
        h = x.bit_length() - 1
        if h not in pivots:
            return x
        x ^= pivots[h]
    return 0


def primitive_idempotent(sig: MetricSignature) -> IdempotentData:
    """f = prod over the chosen blades of (1 + e_a)/2, all '+' signs.

    The generator set is the lexicographically least (by blade mask)
    sequence of k mutually commuting square-(+1) blades whose masks are
    GF(2)-independent; independence guarantees the expansion of f has
    exactly 2^k distinct terms, hence f is a nonzero idempotent.
    """
    p, q = sig.p, sig.q
    k = idempotent_factor_count(p, q)
    n = sig.n
    if k == 0:
        f = Multivector.scalar(sig, 1)
        return IdempotentData(0, (), f)

    candidates = [m for m in range(1, 1 << n) if blade_square_sign(m, sig) == 1]
    chosen: list[int] = []
    pivots: dict[int, int] = {}

    def rec(start: int) -> bool:
        if len(chosen) == k:
            return True
        for idx in range(start, len(candidates)):
            m = candidates[idx]
            red = _gf2_reduce(m, pivots)
            if red == 0:
                continue
            if any(not blades_commute(m, c, sig) for c in chosen):
                continue
            h = red.bit_length() - 1
            pivots[h] = red
            chosen.append(m)
            if rec(idx + 1):
                return True
            chosen.pop()
            del pivots[h]
        return False

    if not rec(0):
        raise IdempotentSearchError(
            f"no commuting +1-square blade set of size {k} found for Cl({p},{q})"
        )

    f = Multivector.scalar(sig, 1)
    half = Fraction(1, 2)
    for m in chosen:
        factor = Multivector(sig, {0: half, m: half})
        f = f * factor
    if f * f != f:
        raise IdempotentSearchError(f"constructed f is not idempotent for Cl({p},{q})")
    if len(f.terms) != 1 << k:
        raise IdempotentSearchError(
            f"idempotent expansion for Cl({p},{q}) has {len(f.terms)} terms, expected {1 << k}"
        )
    return IdempotentData(k, tuple(chosen), f)


def dimension_audit(p: int, q: int) -> DimensionAudit:
    """Check 2^(p+q) = summands * (matrix size)^2 * dim_R(ring per summand).

    The matrix size is inferred from the idempotent factor count k: the
    minimal left ideal has real dimension 2^(p+q-k) and is a column space
    over the division ring.
    """
    ring = ring_type(p, q)
    k = idempotent_factor_count(p, q)
    n = p + q
    total = 1 << n
    ideal_dim = 1 << (n - k) if n >= k else 0
    ring_dim = ring.dim_per_summand
    if ideal_dim % ring_dim != 0:
        return DimensionAudit(p, q, False, total, ring.summands, 0, ring_dim, ring.tag)
    size = ideal_dim // ring_dim
    ok = size > 0 and (size & (size - 1)) == 0
    ok = ok and ring.summands * size * size * ring_dim == total
    return DimensionAudit(p, q, ok, total, ring.summands, size, ring_dim, ring.tag)
