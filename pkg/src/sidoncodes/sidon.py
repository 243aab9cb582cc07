"""Product-collision (Sidon) tests, shift-intersection bounds, orbit sizes.

The checks come in independent pairs on purpose: a combinatorial scan
over element products on one side and an exhaustive scan over cyclic
shifts on the other.  Test suites assert that the two sides agree; a
disagreement would mean an internal arithmetic bug, not a data error.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import linalg
from .errors import SizeGuardError
from .subspace import (
    Subspace,
    cyclic_shift,
    is_direct_sum,
    orbit,
    orbit_matrices,
    product_space,
    sum_spaces,
)
from .tower import ENUMERATION_GUARD, FieldElement


def _guard_elements(u: Subspace) -> None:
    if u.tower.q**u.dim > ENUMERATION_GUARD:
        raise SizeGuardError(
            f"subspace has q^dim = {u.tower.q ** u.dim} elements, beyond the guard"
        )


def is_sidon(u: Subspace, guard_override: bool = False) -> bool:
    """Product-collision freeness: ab = cd forces {aFq, bFq} = {cFq, dFq}.

    Scans one representative per F_q*-class and hashes pair products by
    their projective class, so the cost is quadratic in the number of
    classes.  The zero subspace is vacuously collision free.
    """
    if not guard_override:
        _guard_elements(u)
    if u.dim == 0:
        return True
    tower = u.tower
    lv = tower.level("qn")
    reps = u.projective_values()
    buckets: dict[int, tuple[int, int]] = {}
    for i, a in enumerate(reps):
        for b in reps[i:]:
            key = tower.projective_rep(lv.mul(a, b))
            pair = (a, b)
            prev = buckets.get(key)
            if prev is None:
                buckets[key] = pair
            elif prev != pair:
                return False
    return True


@dataclass
class BoundCheck:
    """Outcome of a pairwise intersection-bound test, with a witness on failure."""

    ok: bool
    mode: str
    witness: dict | None = None

    def to_json(self) -> dict:
        data: dict = {
            "claim": "dim(U n alpha*V) <= 1 for every unit class alpha",
            "measured": {"ok": self.ok, "mode": self.mode},
        }
        if self.witness is not None:
            witness: dict = {}
            for key, value in self.witness.items():
                if isinstance(value, FieldElement):
                    witness[key] = value.value
                elif isinstance(value, Subspace):
                    witness[key] = [list(r) for r in value.rows]
                else:
                    witness[key] = value
            data["witness"] = witness
        return data


def pairwise_bound(
    u: Subspace, v: Subspace, mode: str = "shift", guard_override: bool = False
) -> BoundCheck:
    """Check dim(U n alpha*V) <= 1 over all unit classes alpha.

    mode="shift" scans projective shift representatives directly;
    mode="product" checks the equivalent multiplicative condition that
    distinct products of class representatives never collide.  For
    u == v the scan skips the identity class (alpha in F_q*), where the
    intersection is trivially the whole space; the product mode then
    coincides with the unordered collision test of is_sidon.
    """
    tower = u.tower
    same = u == v
    if mode == "shift":
        u.tower.ensure_enumerable(guard_override)
        gf = tower.gf_tables()
        lv = tower.level("qn")
        n = tower.n
        top = list(u.rows)
        vbasis = v.basis_values()
        for idx, alpha in enumerate(tower.projective_units(guard_override)):
            if same and idx == 0:
                continue
            rows = [tower.coords_of_value(lv.mul(alpha, b)) for b in vbasis]
            rk = linalg.rank(top + rows, n, gf)
            inter = u.dim + v.dim - rk
            if inter > 1:
                shifted = Subspace.from_rows(tower, rows)
                witness = {
                    "alpha": FieldElement(tower, "qn", alpha),
                    "intersection_dim": inter,
                    "intersection": u & shifted,
                }
                return BoundCheck(False, mode, witness)
        return BoundCheck(True, mode)
    if mode == "product":
        if not guard_override:
            _guard_elements(u)
            _guard_elements(v)
        if same:
            return BoundCheck(is_sidon(u, guard_override), mode)
        lv = tower.level("qn")
        buckets: dict[int, tuple[int, int]] = {}
        for a in u.projective_values():
            for b in v.projective_values():
                key = tower.projective_rep(lv.mul(a, b))
                prev = buckets.get(key)
                if prev is None:
                    buckets[key] = (a, b)
                elif prev != (a, b):
                    witness = {"pair": (a, b), "collides_with": prev}
                    return BoundCheck(False, mode, witness)
        return BoundCheck(True, mode)
    raise ValueError(f"unknown mode {mode!r}")


def orbit_size(u: Subspace) -> int:
    """Orbit length from the largest subfield stabilizing the subspace.

    The stabilizer {alpha : alpha*U = U} together with 0 is a subfield
    F_q^d, so d divides gcd(n, dim); testing one generator per candidate
    subfield suffices.
    """
    if u.dim == 0:
        raise ValueError("the zero subspace has no orbit length")
    tower = u.tower
    group = tower.qn_card - 1
    lv = tower.level("qn")
    g = lv.generator()
    for d in sorted(_divisors(gcd(tower.n, u.dim)), reverse=True):
        if d == 1:
            break
        zeta = lv.pow(g, group // (tower.q**d - 1))
        if cyclic_shift(zeta, u) == u:
            return group // (tower.q**d - 1)
    return group // (tower.q - 1)


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, int(n**0.5) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


@dataclass
class OrbitEquivalenceReport:
    """Dual-oracle comparison: collision test vs measured orbit profile.

    The two sides must agree for every subspace; `orbit_side` requires a
    full-length orbit and, for dim >= 2, within-orbit minimum distance
    exactly 2*dim - 2 (for dim 1 the distance clause is vacuous, since
    distinct subspaces are never at distance 0).
    """

    sidon: bool
    orbit_length: int
    full_length: int
    orbit_min_distance: int | None
    orbit_side: bool
    agree: bool

    def to_json(self) -> dict:
        return {
            "claim": "sidon iff full orbit with distance 2*dim-2",
            "measured": {
                "sidon": self.sidon,
                "orbit_length": self.orbit_length,
                "full_length": self.full_length,
                "orbit_min_distance": self.orbit_min_distance,
            },
            "agree": self.agree,
        }


def sidon_orbit_equivalence(u: Subspace, guard_override: bool = False) -> OrbitEquivalenceReport:
    """Measure both sides of the Sidon / orbit-profile equivalence."""
    sidon = is_sidon(u, guard_override)
    members = orbit(u, guard_override)
    tower = u.tower
    full = (tower.qn_card - 1) // (tower.q - 1)
    min_dist: int | None = None
    if len(members) >= 2:
        prepared = orbit_matrices(members)
        ranks = linalg.stack_ranks(u.rows, prepared, tower.n, tower.gf_tables())
        dists = [2 * rk - 2 * u.dim for rk in ranks]
        min_dist = min(d for d in dists if d > 0)
    orbit_side = len(members) == full and (u.dim < 2 or min_dist == 2 * u.dim - 2)
    return OrbitEquivalenceReport(
        sidon=sidon,
        orbit_length=len(members),
        full_length=full,
        orbit_min_distance=min_dist,
        orbit_side=orbit_side,
        agree=sidon == orbit_side,
    )


@dataclass
class SumCheckReport:
    """Conditions under which the sum of two collision-free spaces stays so."""

    u_sidon: bool
    v_sidon: bool
    squares_direct: bool
    squares_span_match: bool
    bound_ok: bool
    sum_sidon: bool | None
    consistent: bool

    @property
    def conditions_hold(self) -> bool:
        return (
            self.u_sidon
            and self.v_sidon
            and self.squares_direct
            and self.squares_span_match
            and self.bound_ok
        )

    def to_json(self) -> dict:
        return {
            "claim": "sum of the two spaces is again collision free",
            "measured": {
                "u_sidon": self.u_sidon,
                "v_sidon": self.v_sidon,
                "squares_direct": self.squares_direct,
                "squares_span_match": self.squares_span_match,
                "bound_ok": self.bound_ok,
                "sum_sidon": self.sum_sidon,
            },
            "consistent": self.consistent,
        }


def sidon_sum_check(u: Subspace, v: Subspace, guard_override: bool = False) -> SumCheckReport:
    """Evaluate the two sum conditions and, when they hold, the consequence.

    Condition one: the squares U^2, UV, V^2 sum directly and span (U+V)^2.
    Condition two: the pairwise shift-intersection bound.  Only when both
    hold (and the inputs are collision free) is the consequence asserted;
    a violated condition leaves sum_sidon as None.
    """
    u_sidon = is_sidon(u, guard_override)
    v_sidon = is_sidon(v, guard_override)
    u2 = product_space(u, u)
    v2 = product_space(v, v)
    uv = product_space(u, v)
    s = sum_spaces(u, v)
    s2 = product_space(s, s)
    if u.dim == 0 or v.dim == 0:
        squares_direct = True
        squares_span_match = s2 == sum_spaces(sum_spaces(u2, uv), v2)
    else:
        squares_direct = is_direct_sum([u2, uv, v2])
        squares_span_match = s2 == sum_spaces(sum_spaces(u2, uv), v2)
    bound_ok = pairwise_bound(u, v, "shift", guard_override).ok
    sum_sidon: bool | None = None
    if u_sidon and v_sidon and squares_direct and squares_span_match and bound_ok:
        sum_sidon = is_sidon(s, guard_override)
    consistent = sum_sidon is not False
    return SumCheckReport(
        u_sidon=u_sidon,
        v_sidon=v_sidon,
        squares_direct=squares_direct,
        squares_span_match=squares_span_match,
        bound_ok=bound_ok,
        sum_sidon=sum_sidon,
        consistent=consistent,
    )
