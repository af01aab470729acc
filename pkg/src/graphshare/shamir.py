"""Degree-one Shamir sharing over Z_p, kept as a cost and robustness baseline."""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2

from .errors import ContractError, SingularSystemError

DEFAULT_PRIME = 2**31 - 1


@dataclass(frozen=True)
class ShamirParams:
    p: int = DEFAULT_PRIME
    n: int = 2

    def __post_init__(self):
        if self.p < 2 or not gmpy2.is_prime(self.p):
            raise ContractError(f"modulus {self.p} is not prime")
        if not 2 <= self.n < self.p:
            raise ContractError(f"need 2 <= n < p, got n={self.n}")


@dataclass(frozen=True)
class ShamirShare:
    x: int
    y: int
    p: int

    def __post_init__(self):
        if not 1 <= self.x < self.p:
            raise ContractError(f"x={self.x} outside [1, p)")
        if not 0 <= self.y < self.p:
            raise ContractError(f"y={self.y} outside [0, p)")


def shamir_deal(a0: int, params: ShamirParams, rng) -> list[ShamirShare]:
    """Shares (x, a0 + a1*x mod p) at x = 1..n with a1 drawn from ``rng.randrange(p)``."""
    p = params.p
    if not 0 <= a0 < p:
        raise ContractError(f"secret {a0} outside [0, p)")
    a1 = rng.randrange(p)
    return [ShamirShare(x, (a0 + a1 * x) % p, p) for x in range(1, params.n + 1)]


def shamir_reconstruct(s1: ShamirShare, s2: ShamirShare, p: int | None = None) -> int:
    """Solve [[1, x1], [1, x2]] @ [a0, a1] = [y1, y2] (mod p) for a0."""
    p = s1.p if p is None else p
    if s1.p != p or s2.p != p:
        raise ContractError("shares use different moduli")
    if s1.x == s2.x:
        raise SingularSystemError(f"both shares have x = {s1.x}")
    det_inv = pow(s2.x - s1.x, -1, p)
    return (s1.y * s2.x - s2.y * s1.x) * det_inv % p


def shamir_cost(bits: int) -> int:
    """Operation count for a field inversion at ``bits`` bits, modelled as bits**3."""
    if bits < 1:
        raise ContractError("bits must be >= 1")
    return bits**3
