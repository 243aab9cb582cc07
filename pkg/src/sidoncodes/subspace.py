"""F_q-subspaces of F_q^n in canonical reduced-row-echelon form.

A subspace is a matrix of F_q digit rows over the tower's coordinate
basis, kept in RREF so that two subspaces are equal as sets exactly when
their matrices are identical.  All operations are pure; instances are
immutable and hashable, so orbit deduplication is a set insertion.
"""

from __future__ import annotations

from . import linalg
from .errors import TowerMismatchError
from .tower import FieldElement, FieldTower


def _check_same_tower(a: "Subspace", b: "Subspace") -> None:
    if a.tower.params != b.tower.params:
        raise TowerMismatchError("subspaces belong to different towers")


class Subspace:
    """An F_q-subspace of F_q^n, identified by its RREF basis matrix."""

    __slots__ = ("tower", "rows", "_hash", "_basis_values")

    def __init__(self, tower: FieldTower, canonical_rows: tuple[tuple[int, ...], ...]):
        self.tower = tower
        self.rows = canonical_rows
        self._hash = hash((tower.params, canonical_rows))
        self._basis_values: tuple[int, ...] | None = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_rows(cls, tower: FieldTower, rows) -> "Subspace":
        canonical, _ = linalg.rref(rows, tower.n, tower.gf_tables())
        return cls(tower, canonical)

    @classmethod
    def zero(cls, tower: FieldTower) -> "Subspace":
        return cls(tower, ())

    # -- basic structure --------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_values(self) -> tuple[int, ...]:
        """Level-qn encodings of the basis rows."""
        if self._basis_values is None:
            self._basis_values = tuple(self.tower.value_of_coords(r) for r in self.rows)
        return self._basis_values

    def basis_elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.tower, "qn", v) for v in self.basis_values())

    def element_values(self) -> list[int]:
        """Encodings of all q^dim elements (small dims only)."""
        lv = self.tower.level("qn")
        els = [0]
        for b in self.basis_values():
            step = [lv.mul(c, b) for c in range(self.tower.q)]
            els = [lv.add(x, s) for s in step for x in els]
        return els

    def nonzero_values(self) -> list[int]:
        return [v for v in self.element_values() if v]

    def projective_values(self) -> list[int]:
        """One encoding per F_q*-class of nonzero elements."""
        tower = self.tower
        if tower.q == 2:
            return self.nonzero_values()
        return [v for v in self.nonzero_values() if tower.projective_rep(v) == v]

    def contains_value(self, value: int) -> bool:
        vec = list(self.tower.coords_of_value(value))
        gf = self.tower.gf_tables()
        add, mul, neg = gf.add_py, gf.mul_py, gf.neg_py
        for row in self.rows:
            lead = next(j for j, x in enumerate(row) if x)
            c = vec[lead]
            if c:
                mnf = mul[neg[c]]
                vec = [add[x][mnf[y]] for x, y in zip(vec, row)]
        return not any(vec)

    def __contains__(self, x: FieldElement) -> bool:
        return x.level == "qn" and self.contains_value(x.value)

    # -- identity ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.rows == other.rows
            and self.tower.params == other.tower.params
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.tower.n})"

    # -- operators -----------------------------------------------------------
    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_spaces(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __mul__(self, other: "Subspace") -> "Subspace":
        return product_space(self, other)

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        data = {
            "tower": dict(zip(("p", "m", "k", "r", "poly_seed"), self.tower.params)),
            "rows": [list(r) for r in self.rows],
        }
        if self.tower.q == 2:
            data["rows_hex"] = [row_to_hex(r) for r in self.rows]
        return data

    @classmethod
    def from_json(cls, data: dict, tower: FieldTower | None = None) -> "Subspace":
        if tower is None:
            t = data["tower"]
            from .tower import build_tower

            tower = build_tower(t["p"], t["m"], t["k"], t["r"], t.get("poly_seed", 0))
        if "rows" in data:
            rows = data["rows"]
        else:
            rows = [row_from_hex(h, tower.n) for h in data["rows_hex"]]
        return cls.from_rows(tower, rows)


def row_to_hex(row) -> str:
    """Pack a GF(2) row little-endian into hex (bit j = column j)."""
    v = 0
    for j, b in enumerate(row):
        if b:
            v |= 1 << j
    width = (len(row) + 3) // 4
    return f"{v:0{width}x}"


def row_from_hex(h: str, ncols: int) -> tuple[int, ...]:
    v = int(h, 16)
    return tuple((v >> j) & 1 for j in range(ncols))


# -- lattice and metric operations -----------------------------------------


def span(tower: FieldTower, gens) -> Subspace:
    """Subspace generated by level-qn elements (or raw encodings)."""
    rows = []
    for g in gens:
        value = g.value if isinstance(g, FieldElement) else int(g)
        rows.append(tower.coords_of_value(value))
    return Subspace.from_rows(tower, rows)


def sum_spaces(u: Subspace, v: Subspace) -> Subspace:
    _check_same_tower(u, v)
    return Subspace.from_rows(u.tower, list(u.rows) + list(v.rows))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection basis via the Zassenhaus double-block reduction."""
    _check_same_tower(u, v)
    tower = u.tower
    n = tower.n
    zeros = (0,) * n
    block = [tuple(r) + tuple(r) for r in u.rows] + [tuple(r) + zeros for r in v.rows]
    reduced, _ = linalg.rref(block, 2 * n, tower.gf_tables())
    inter_rows = [r[n:] for r in reduced if not any(r[:n])]
    return Subspace.from_rows(tower, inter_rows)


def product_space(u: Subspace, v: Subspace) -> Subspace:
    """Span of pairwise products; basis products suffice by bilinearity."""
    _check_same_tower(u, v)
    tower = u.tower
    lv = tower.level("qn")
    rows = [
        tower.coords_of_value(lv.mul(a, b))
        for a in u.basis_values()
        for b in v.basis_values()
    ]
    return Subspace.from_rows(tower, rows)


def cyclic_shift(alpha, u: Subspace) -> Subspace:
    """The subspace alpha*U for nonzero alpha."""
    tower = u.tower
    value = alpha.value if isinstance(alpha, FieldElement) else int(alpha)
    if value == 0:
        raise ValueError("cyclic shift by zero is not defined")
    lv = tower.level("qn")
    rows = [tower.coords_of_value(lv.mul(value, b)) for b in u.basis_values()]
    return Subspace.from_rows(tower, rows)


def distance(u: Subspace, v: Subspace) -> int:
    """Subspace metric: dim U + dim V - 2 dim(U n V)."""
    _check_same_tower(u, v)
    tower = u.tower
    rk = linalg.rank(list(u.rows) + list(v.rows), tower.n, tower.gf_tables())
    return 2 * rk - u.dim - v.dim


def is_direct_sum(parts) -> bool:
    """True when the sum of the parts has dimension equal to the dim sum."""
    parts = list(parts)
    if len(parts) < 2:
        raise ValueError("need at least two parts")
    tower = parts[0].tower
    for p in parts[1:]:
        _check_same_tower(parts[0], p)
    rows = [r for p in parts for r in p.rows]
    return linalg.rank(rows, tower.n, tower.gf_tables()) == sum(p.dim for p in parts)


def orbit(u: Subspace, guard_override: bool = False) -> list[Subspace]:
    """All distinct cyclic shifts of u, deduplicated, first-seen order."""
    tower = u.tower
    if u.dim == 0:
        return [u]
    lv = tower.level("qn")
    gf = tower.gf_tables()
    n = tower.n
    basis = u.basis_values()
    seen: set[tuple[tuple[int, ...], ...]] = set()
    members: list[Subspace] = []
    for alpha in tower.projective_units(guard_override):
        rows = [tower.coords_of_value(lv.mul(alpha, b)) for b in basis]
        canonical, _ = linalg.rref(rows, n, gf)
        if canonical not in seen:
            seen.add(canonical)
            members.append(Subspace(tower, canonical))
    return members


def orbit_matrices(members: list[Subspace]):
    """Prepared stack of the members' matrices for batch rank kernels."""
    tower = members[0].tower
    return linalg.prepare([m.rows for m in members], tower.n, tower.gf_tables())


def random_subspace(tower: FieldTower, dim: int, rng) -> Subspace:
    """Random dim-dimensional subspace by rank-rejection sampling."""
    rows: list[tuple[int, ...]] = []
    gf = tower.gf_tables()
    current = 0
    while current < dim:
        cand = tower.coords_of_value(rng.randrange(1, tower.qn_card))
        new_rank = linalg.rank(rows + [cand], tower.n, gf)
        if new_rank > current:
            rows.append(cand)
            current = new_rank
    return Subspace.from_rows(tower, rows)
