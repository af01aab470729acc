"""Threshold sharing of a set of opaque tokens by set intersection.

Every share holds the secret plus junk tokens; each junk token is copied into
exactly k-1 shares, so it survives any intersection of k-1 shares and drops
out of every intersection of k.

:func:`set_deal` is the original three-party-threshold construction, loop for
loop. :func:`set_deal_general` extends it to any threshold 2 <= k <= n.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BelowThresholdError,
    BelowThresholdWarning,
    ContractError,
    ExhaustionError,
    ReconstructionError,
)
from .graph import node_intersection

# Junk tokens are signed 64-bit integers rendered in decimal.
JUNK_RANGE = (-(2**63), 2**63)
MAX_REDRAWS = 64


def _as_tokens(items: Iterable) -> frozenset[bytes]:
    tokens = frozenset(items)
    for tok in tokens:
        if not isinstance(tok, bytes) or not tok:
            raise ContractError(f"token {tok!r} is not a non-empty byte string")
    return tokens


def token(value) -> bytes:
    """Coerce an int or str to a token (``13`` -> ``b"13"``)."""
    if isinstance(value, bytes):
        return value
    return str(value).encode("utf-8")


@dataclass(frozen=True)
class SetSecret:
    elements: frozenset[bytes]

    def __post_init__(self):
        object.__setattr__(self, "elements", _as_tokens(self.elements))
        if not self.elements:
            raise ContractError("secret set must have at least one element")

    @property
    def u(self) -> int:
        return len(self.elements)

    @classmethod
    def of(cls, values: Iterable) -> SetSecret:
        return cls(frozenset(token(v) for v in values))


def share_size(k: int, n: int, u: int) -> int:
    """Elements per share: the secret plus u junk tokens per (k-1)-subset it belongs to."""
    return u * (1 + comb(n - 1, k - 2))


@dataclass(frozen=True)
class SetShare:
    index: int
    n: int
    k: int
    u: int
    elements: frozenset[bytes]

    def __post_init__(self):
        object.__setattr__(self, "elements", _as_tokens(self.elements))
        if not 2 <= self.k <= self.n:
            raise ContractError(f"threshold k={self.k} outside 2..n={self.n}")
        if not 1 <= self.index <= self.n:
            raise ContractError(f"share index {self.index} outside 1..{self.n}")
        if self.u < 1:
            raise ContractError("u must be positive")
        expected = share_size(self.k, self.n, self.u)
        if len(self.elements) != expected:
            raise ContractError(
                f"share {self.index} has {len(self.elements)} elements, expected {expected}"
            )

    def sorted_elements(self) -> list[bytes]:
        return sorted(self.elements)


def _check_domain(secret: SetSecret, needed: int, token_range: tuple[int, int]) -> None:
    lo, hi = token_range
    if hi - lo < needed + secret.u:
        raise ExhaustionError(
            f"token domain of size {hi - lo} cannot supply {needed} fresh junk tokens"
        )


def _fresh_token(rng, used: set[bytes], token_range: tuple[int, int]) -> bytes:
    lo, hi = token_range
    for _ in range(MAX_REDRAWS):
        tok = str(rng.randrange(lo, hi)).encode("ascii")
        if tok not in used:
            used.add(tok)
            return tok
    raise ExhaustionError(f"no fresh token after {MAX_REDRAWS} draws")


def set_deal(secret: SetSecret, n: int, rng, *, token_range=JUNK_RANGE) -> list[SetShare]:
    """Deal ``n`` shares of ``secret`` with threshold 3.

    Share i (1-based) draws (n-i)*u fresh tokens and hands u of them, chosen
    at random among those not yet handed out, to every later share.
    ``rng`` needs ``randrange`` and ``sample`` (a :class:`random.Random` works).
    """
    if n < 3:
        raise ContractError(f"need n >= 3 parties, got {n}")
    u = secret.u
    _check_domain(secret, u * n * (n - 1) // 2, token_range)
    used = set(secret.elements)
    members: list[set[bytes]] = [set(secret.elements) for _ in range(n)]
    for i in range(n - 1):
        own = [_fresh_token(rng, used, token_range) for _ in range((n - 1 - i) * u)]
        members[i].update(own)
        unmarked = list(own)
        for j in range(i + 1, n):
            picked = rng.sample(unmarked, u)
            for tok in picked:
                unmarked.remove(tok)
            members[j].update(picked)
    return [SetShare(i + 1, n, 3, u, frozenset(m)) for i, m in enumerate(members)]


def set_deal_general(
    secret: SetSecret, k: int, n: int, rng, *, token_range=JUNK_RANGE
) -> list[SetShare]:
    """Deal with any threshold: u fresh junk tokens for every (k-1)-subset of shares."""
    if not 2 <= k <= n:
        raise ContractError(f"need 2 <= k <= n, got k={k}, n={n}")
    u = secret.u
    groups = list(combinations(range(n), k - 1))
    _check_domain(secret, u * len(groups), token_range)
    used = set(secret.elements)
    members: list[set[bytes]] = [set(secret.elements) for _ in range(n)]
    for group in groups:
        junk = [_fresh_token(rng, used, token_range) for _ in range(u)]
        for i in group:
            members[i].update(junk)
    return [SetShare(i + 1, n, k, u, frozenset(m)) for i, m in enumerate(members)]


def set_reconstruct(shares: Sequence[SetShare], *, force: bool = False) -> frozenset[bytes]:
    """Intersect the element sets of ``shares``.

    Below the threshold this raises :class:`BelowThresholdError`; with
    ``force=True`` the raw intersection is returned instead and a
    :class:`BelowThresholdWarning` is issued.
    """
    if not shares:
        raise BelowThresholdError("no shares given")
    first = shares[0]
    for s in shares[1:]:
        if (s.n, s.k, s.u) != (first.n, first.k, first.u):
            raise ReconstructionError(
                f"share {s.index} has parameters (n={s.n}, k={s.k}, u={s.u}), "
                f"share {first.index} has (n={first.n}, k={first.k}, u={first.u})"
            )
    indices = [s.index for s in shares]
    if len(set(indices)) != len(indices):
        raise ReconstructionError(f"duplicate share indices in {indices}")
    if len(shares) < first.k:
        if not force:
            raise BelowThresholdError(f"{len(shares)} shares given, threshold is {first.k}")
        warnings.warn(
            f"only {len(shares)} of {first.k} shares: result is not the secret",
            BelowThresholdWarning,
            stacklevel=2,
        )
    common = reduce(node_intersection, (s.sorted_elements() for s in shares[1:]),
                    first.sorted_elements())
    return frozenset(common)
