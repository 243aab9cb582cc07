"""Operator-channel simulation: dimension erasures plus error insertions.

A transmitted subspace loses `erasures` dimensions (a uniformly random
subspace of that codimension survives) and gains up to `insertions`
dimensions spanned by uniformly random ambient vectors; dependent or
duplicate insertions may gain less, which is how real error packets
behave.  Decoding is minimum-distance over the enumerated code.

Randomness is fully reproducible: trial t of a simulation uses the
derived seed ``master_seed * 1_000_003 + t``, so trials can be replayed
or partitioned across workers without changing the statistics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .analysis import OrbitCode, enumerate_code
from .subspace import Subspace, orbit_matrices

TRIAL_SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class ChannelParams:
    erasures: int
    insertions: int
    seed: int = 0


def _transmit_with_rng(codeword: Subspace, erasures: int, insertions: int, rng) -> Subspace:
    tower = codeword.tower
    if erasures < 0 or insertions < 0:
        raise ValueError("erasures and insertions must be nonnegative")
    if erasures > codeword.dim:
        raise ValueError(f"cannot erase {erasures} dimensions from a dim-{codeword.dim} codeword")
    keep = codeword.dim - erasures
    gf = tower.gf_tables()
    q = tower.q
    add, mul = gf.add_py, gf.mul_py
    rows: list[list[int]] = []
    # random keep-dimensional subspace of the codeword: draw random
    # F_q-combinations of its basis, rejecting rank-deficient draws
    rank_now = 0
    while rank_now < keep:
        coeffs = [rng.randrange(q) for _ in range(codeword.dim)]
        vec = [0] * tower.n
        for c, row in zip(coeffs, codeword.rows):
            if c:
                mc = mul[c]
                vec = [add[x][mc[y]] for x, y in zip(vec, row)]
        new_rank = linalg.rank(rows + [vec], tower.n, gf)
        if new_rank > rank_now:
            rows.append(vec)
            rank_now = new_rank
    for _ in range(insertions):
        rows.append(list(tower.coords_of_value(rng.randrange(tower.qn_card))))
    return Subspace.from_rows(tower, rows)


def transmit(codeword: Subspace, params: ChannelParams) -> Subspace:
    """Push one codeword through the channel, reproducibly from the seed."""
    rng = random.Random(params.seed)
    return _transmit_with_rng(codeword, params.erasures, params.insertions, rng)


@dataclass
class DecodeResult:
    distance: int
    codeword: Subspace | None
    candidates: tuple[Subspace, ...]
    ambiguous: bool


def decode(received: Subspace, codewords: list[Subspace]) -> DecodeResult:
    """Minimum-distance decoding; ties are reported, not broken."""
    if not codewords:
        raise ValueError("cannot decode against an empty code")
    if codewords[0].tower.params != received.tower.params:
        raise ValueError("received word and code live in different towers")
    tower = received.tower
    gf = tower.gf_tables()
    by_dim: dict[int, list[Subspace]] = {}
    for w in codewords:
        by_dim.setdefault(w.dim, []).append(w)
    best = 10**9
    minimizers: list[Subspace] = []
    for d, group in by_dim.items():
        prepared = orbit_matrices(group)
        ranks = linalg.stack_ranks(received.rows, prepared, tower.n, gf)
        for w, rk in zip(group, ranks):
            dist = 2 * rk - received.dim - d
            if dist < best:
                best = dist
                minimizers = [w]
            elif dist == best:
                minimizers.append(w)
    ambiguous = len(minimizers) > 1
    return DecodeResult(
        distance=best,
        codeword=None if ambiguous else minimizers[0],
        candidates=tuple(minimizers),
        ambiguous=ambiguous,
    )


class _PreparedCode:
    """Codeword list grouped by dimension with prepacked matrices."""

    def __init__(self, codewords: list[Subspace]):
        if not codewords:
            raise ValueError("cannot decode against an empty code")
        self.codewords = codewords
        tower = codewords[0].tower
        self.tower = tower
        by_dim: dict[int, list[Subspace]] = {}
        for w in codewords:
            by_dim.setdefault(w.dim, []).append(w)
        self.groups = [
            (d, group, orbit_matrices(group)) for d, group in sorted(by_dim.items())
        ]

    def decode(self, received: Subspace) -> DecodeResult:
        gf = self.tower.gf_tables()
        best = 10**9
        minimizers: list[Subspace] = []
        for d, group, prepared in self.groups:
            ranks = linalg.stack_ranks(received.rows, prepared, self.tower.n, gf)
            for w, rk in zip(group, ranks):
                dist = 2 * rk - received.dim - d
                if dist < best:
                    best = dist
                    minimizers = [w]
                elif dist == best:
                    minimizers.append(w)
        ambiguous = len(minimizers) > 1
        return DecodeResult(
            distance=best,
            codeword=None if ambiguous else minimizers[0],
            candidates=tuple(minimizers),
            ambiguous=ambiguous,
        )


@dataclass
class SimulationStats:
    trials: int
    successes: int
    ambiguous: int
    success_rate: float
    ambiguity_rate: float
    mean_received_dim: float
    params: ChannelParams

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "successes": self.successes,
            "ambiguous": self.ambiguous,
            "success_rate": self.success_rate,
            "ambiguity_rate": self.ambiguity_rate,
            "mean_received_dim": self.mean_received_dim,
            "erasures": self.params.erasures,
            "insertions": self.params.insertions,
            "seed": self.params.seed,
        }


def trial_rng(params: ChannelParams, trial: int) -> random.Random:
    return random.Random(params.seed * TRIAL_SEED_STRIDE + trial)


def simulate(
    code: OrbitCode,
    params: ChannelParams,
    trials: int,
    *,
    guard_override: bool = False,
) -> SimulationStats:
    """Seeded transmission and decode over the enumerated code."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    enumeration = enumerate_code(code, guard_override)
    prepared = _PreparedCode(enumeration.codewords)
    successes = 0
    ambiguous = 0
    dim_total = 0
    for t in range(trials):
        rng = trial_rng(params, t)
        sent = enumeration.codewords[rng.randrange(len(enumeration.codewords))]
        received = _transmit_with_rng(sent, params.erasures, params.insertions, rng)
        dim_total += received.dim
        result = prepared.decode(received)
        if result.ambiguous:
            ambiguous += 1
        elif result.codeword == sent:
            successes += 1
    return SimulationStats(
        trials=trials,
        successes=successes,
        ambiguous=ambiguous,
        success_rate=successes / trials,
        ambiguity_rate=ambiguous / trials,
        mean_received_dim=dim_total / trials,
        params=params,
    )
