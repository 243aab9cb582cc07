"""Orbit-generator families for the cyclic subspace codes.

Each family maps the subfield F_q^k (and for some families an extra F_q
summand) through a fixed shape of gamma-components:

    lem31:  u + (tau*u^q + u) * delta * gamma^l      tau in coset reps, delta in F_qk*, 1 <= l <= e
    lem33:  u + eta * u^q * gamma^l                  eta in coset reps, 1 <= l <= e
    thm34:  lem31 + lem33 + the embedded subfield
    lem36:  u + (u^q+u)*tau*gamma + (u^q+u)*delta*gamma^2     tau, delta in F_qk*
    thm37:  lem36 + V-family + W-family + one extra generator
    thm311: a + u*gamma + (u^q + delta*u)*gamma^l    a in F_q, delta in F_qk, l in ells
    subfield_orbit: the embedded subfield F_q^k itself

with e = ceil(r/2) - 1 for the first three and e = ceil(r/4) - 1 for
thm311.  Families are emitted in lexicographic parameter order, so equal
inputs give byte-identical artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConstructionError
from .subspace import Subspace
from .tower import FieldTower

FAMILIES = ("lem31", "lem33", "thm34", "lem36", "thm37", "thm311", "subfield_orbit")

_HALF = ("lem31", "lem33", "thm34")
_QUARTER = ("thm311",)
_DEEP = ("lem36", "thm37", "thm311")


def derived_e(family: str, r: int) -> int | None:
    if family in _HALF:
        return -(-r // 2) - 1
    if family in _QUARTER:
        return -(-r // 4) - 1
    return None


@dataclass(frozen=True)
class ConstructionParams:
    """Family selector plus the derived exponent data, for artifacts."""

    family: str
    e: int | None = None
    ells: tuple[int, ...] | None = None
    overrides: dict | None = field(default=None, hash=False)

    def to_json(self) -> dict:
        data: dict = {"family": self.family}
        if self.e is not None:
            data["e"] = self.e
        if self.ells is not None:
            data["ells"] = list(self.ells)
        if self.overrides is not None:
            data["overrides"] = self.overrides
        return data


def _require_deep(tower: FieldTower, family: str) -> None:
    if tower.r <= 4:
        raise ConstructionError(
            f"family {family} requires n/k > 4, got n/k = {tower.r}"
        )


def _fqk_units(tower: FieldTower) -> range:
    return range(1, tower.qk_card)


def _u_basis(tower: FieldTower) -> list[int]:
    """F_q-basis of F_q^k: encodings of xi^0 .. xi^(k-1)."""
    return [tower.q**i for i in range(tower.k)]


def _graded_rows(tower: FieldTower, pieces: list[tuple[int, int]]) -> tuple[int, ...]:
    """Encode sum of (gamma-exponent, qk-coefficient) pieces as coordinates."""
    value = 0
    shift = tower.qk_card
    for exp, coeff in pieces:
        value += coeff * shift**exp
    return tower.coords_of_value(value)


def family_lem31(tower: FieldTower) -> list[Subspace]:
    """One generator per (l, coset rep tau, unit delta)."""
    e = derived_e("lem31", tower.r)
    qk = tower.level("qk")
    q = tower.q
    reps = [rep.value for rep in tower.coset_representatives()]
    basis = _u_basis(tower)
    frob = {u: qk.pow(u, q) for u in basis}
    gens = []
    for ell in range(1, e + 1):
        for tau in reps:
            for delta in _fqk_units(tower):
                rows = []
                for u in basis:
                    w = qk.mul(qk.add(qk.mul(tau, frob[u]), u), delta)
                    rows.append(_graded_rows(tower, [(0, u), (ell, w)]))
                sub = Subspace.from_rows(tower, rows)
                assert sub.dim == tower.k
                gens.append(sub)
    return gens


def family_lem33(tower: FieldTower) -> list[Subspace]:
    """One generator per (l, coset rep eta)."""
    e = derived_e("lem33", tower.r)
    qk = tower.level("qk")
    q = tower.q
    reps = [rep.value for rep in tower.coset_representatives()]
    basis = _u_basis(tower)
    gens = []
    for ell in range(1, e + 1):
        for eta in reps:
            rows = []
            for u in basis:
                w = qk.mul(eta, qk.pow(u, q))
                rows.append(_graded_rows(tower, [(0, u), (ell, w)]))
            sub = Subspace.from_rows(tower, rows)
            assert sub.dim == tower.k
            gens.append(sub)
    return gens


def family_subfield_orbit(tower: FieldTower) -> list[Subspace]:
    """The embedded subfield F_q^k as a single generator."""
    rows = [tower.coords_of_value(u) for u in _u_basis(tower)]
    return [Subspace.from_rows(tower, rows)]


def family_thm34(tower: FieldTower) -> list[Subspace]:
    return family_lem31(tower) + family_lem33(tower) + family_subfield_orbit(tower)


def family_lem36(tower: FieldTower) -> list[Subspace]:
    """One generator per unit pair (tau, delta), two gamma components."""
    _require_deep(tower, "lem36")
    qk = tower.level("qk")
    q = tower.q
    basis = _u_basis(tower)
    gens = []
    for tau in _fqk_units(tower):
        for delta in _fqk_units(tower):
            rows = []
            for u in basis:
                t = qk.add(qk.pow(u, q), u)
                rows.append(
                    _graded_rows(tower, [(0, u), (1, qk.mul(t, tau)), (2, qk.mul(t, delta))])
                )
            sub = Subspace.from_rows(tower, rows)
            assert sub.dim == tower.k
            gens.append(sub)
    return gens


def _default_vw_pairs(tower: FieldTower) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    v_pairs = [(tau, 1) for tau in _fqk_units(tower)]
    w_pairs = [(1, delta) for delta in _fqk_units(tower)]
    return v_pairs, w_pairs


def family_thm37(tower: FieldTower, overrides: dict | None = None) -> list[Subspace]:
    """lem36 plus the V and W families plus the single extra generator.

    The V and W families each take q^k - 1 parameter pairs; the default
    fixes the second parameter to 1 and sweeps the first over all units
    (and symmetrically for W).  Pass overrides={"v_pairs": [...],
    "w_pairs": [...]} to supply explicit pairs.
    """
    _require_deep(tower, "thm37")
    qk = tower.level("qk")
    q = tower.q
    basis = _u_basis(tower)
    v_pairs, w_pairs = _default_vw_pairs(tower)
    if overrides:
        v_pairs = [tuple(p) for p in overrides.get("v_pairs", v_pairs)]
        w_pairs = [tuple(p) for p in overrides.get("w_pairs", w_pairs)]
        want = tower.qk_card - 1
        if len(v_pairs) != want or len(w_pairs) != want:
            raise ConstructionError(
                f"thm37 override lists must have length q^k-1 = {want}"
            )
        for tau, delta in v_pairs + w_pairs:
            if not (0 < tau < tower.qk_card and 0 < delta < tower.qk_card):
                raise ConstructionError("thm37 override parameters must be units of F_q^k")
    gens = family_lem36(tower)
    for tau, delta in v_pairs:
        rows = []
        for u in basis:
            uq = qk.pow(u, q)
            t = qk.add(uq, u)
            rows.append(
                _graded_rows(tower, [(0, u), (1, qk.mul(uq, tau)), (2, qk.mul(t, delta))])
            )
        sub = Subspace.from_rows(tower, rows)
        assert sub.dim == tower.k
        gens.append(sub)
    for tau, delta in w_pairs:
        rows = []
        for u in basis:
            uq = qk.pow(u, q)
            t = qk.add(uq, u)
            rows.append(
                _graded_rows(tower, [(0, u), (1, qk.mul(t, tau)), (2, qk.mul(uq, delta))])
            )
        sub = Subspace.from_rows(tower, rows)
        assert sub.dim == tower.k
        gens.append(sub)
    rows = []
    for u in basis:
        uq = qk.pow(u, q)
        rows.append(_graded_rows(tower, [(0, u), (1, uq), (2, uq)]))
    sub = Subspace.from_rows(tower, rows)
    assert sub.dim == tower.k
    gens.append(sub)
    return gens


def thm311_ells(tower: FieldTower) -> tuple[int, ...]:
    """Gamma exponents for thm311: e consecutive values starting at 2.

    The family needs exponents l >= 2 (the gamma^1 slot carries u), and
    exactly e of them to hit the stated generator count.
    """
    e = derived_e("thm311", tower.r)
    return tuple(range(2, e + 2))


def family_thm311(tower: FieldTower, overrides: dict | None = None) -> list[Subspace]:
    """One (k+1)-dimensional generator per (l, delta in F_q^k)."""
    _require_deep(tower, "thm311")
    qk = tower.level("qk")
    q = tower.q
    basis = _u_basis(tower)
    ells = thm311_ells(tower)
    if overrides and "ells" in overrides:
        ells = tuple(int(x) for x in overrides["ells"])
        if any(not 2 <= ell <= tower.r - 1 for ell in ells):
            raise ConstructionError("thm311 ells must lie in 2 .. r-1")
    gens = []
    for ell in ells:
        for delta in range(tower.qk_card):
            rows = [tower.coords_of_value(1)]
            for u in basis:
                w = qk.add(qk.pow(u, q), qk.mul(delta, u))
                rows.append(_graded_rows(tower, [(1, u), (ell, w)]))
            sub = Subspace.from_rows(tower, rows)
            assert sub.dim == tower.k + 1
            gens.append(sub)
    return gens


def thm311_inner_part(tower: FieldTower, delta: int, ell: int) -> Subspace:
    """The k-dimensional part {u*gamma + (u^q + delta*u)*gamma^l} alone."""
    qk = tower.level("qk")
    rows = []
    for u in _u_basis(tower):
        w = qk.add(qk.pow(u, tower.q), qk.mul(delta, u))
        rows.append(_graded_rows(tower, [(1, u), (ell, w)]))
    return Subspace.from_rows(tower, rows)


def generators(
    tower: FieldTower, family: str, overrides: dict | None = None
) -> tuple[ConstructionParams, list[Subspace]]:
    """Build the generator list for a family, plus its parameter record."""
    family = family.lower()
    if family not in FAMILIES:
        raise ConstructionError(f"unknown family {family!r}; choose from {FAMILIES}")
    if family == "lem31":
        gens = family_lem31(tower)
    elif family == "lem33":
        gens = family_lem33(tower)
    elif family == "thm34":
        gens = family_thm34(tower)
    elif family == "lem36":
        gens = family_lem36(tower)
    elif family == "thm37":
        gens = family_thm37(tower, overrides)
    elif family == "thm311":
        gens = family_thm311(tower, overrides)
    else:
        gens = family_subfield_orbit(tower)
    if len(set(gens)) != len(gens):
        raise ConstructionError(
            f"family {family} produced duplicate generator subspaces"
        )
    params = ConstructionParams(
        family=family,
        e=derived_e(family, tower.r),
        ells=thm311_ells(tower) if family == "thm311" and not overrides else None,
        overrides=overrides,
    )
    return params, gens


def expected_generator_count(family: str, q: int, k: int, r: int) -> int:
    e2 = -(-r // 2) - 1
    e4 = -(-r // 4) - 1
    qk = q**k
    return {
        "lem31": e2 * (q - 1) * (qk - 1),
        "lem33": e2 * (q - 1),
        "thm34": e2 * (q - 1) * qk + 1,
        "lem36": (qk - 1) ** 2,
        "thm37": qk**2,
        "thm311": e4 * qk,
        "subfield_orbit": 1,
    }[family]
