"""Exact arithmetic in the field chain F_p < F_q < F_q^k < F_q^n.

Every element is canonically encoded as an integer: the coefficients of
its polynomial representation over the level below, packed as digits in
base (cardinality of that lower level), least significant digit first.
Because the defining polynomial of F_q^k is chosen primitive, the
distinguished element xi is the residue class of the indeterminate and
the n-dimensional coordinate basis {xi^i * gamma^j} coincides with plain
base-q digit extraction of the encoding.

Defining polynomials are found by a deterministic lexicographic scan
starting from a caller-supplied seed, so identical parameters always
rebuild the identical tower.

Levels with at most TABLE_LIMIT elements precompute exp/log tables;
larger levels (only reachable far beyond the enumeration guard) fall
back to digit-wise polynomial arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import polys
from .errors import LevelMismatchError, SizeGuardError, TowerMismatchError

# Exhaustive operations (orbit enumeration, distance scans, element scans)
# refuse to run on towers larger than this unless explicitly overridden.
ENUMERATION_GUARD = 1 << 24

# exp/log tables are built only for levels up to this cardinality.
TABLE_LIMIT = 1 << 14

LEVELS = ("base", "q", "qk", "qn")


class PrimeField:
    """F_p with integer encodings 0..p-1."""

    def __init__(self, p: int):
        self.p = p
        self.card = p
        self.char = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def generator(self) -> int:
        return _find_generator(self)


class ExtField:
    """Degree-d extension of a lower level, modulo a monic irreducible."""

    def __init__(self, sub, irr: tuple[int, ...], generator_hint: int | None = None):
        assert irr[-1] == 1 and len(irr) >= 2
        self.sub = sub
        self.irr = irr
        self.degree = len(irr) - 1
        self.card = sub.card**self.degree
        self.char = sub.char
        self._xor_add = self.char == 2
        # reduction row: x^degree = -(irr minus leading term)
        self._red = tuple(sub.neg(c) for c in irr[:-1])
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._gen: int | None = None
        if self.card <= TABLE_LIMIT:
            self._build_tables(generator_hint)
        elif generator_hint is not None:
            self._gen = generator_hint

    # -- digit packing -------------------------------------------------
    def digits(self, a: int) -> list[int]:
        base = self.sub.card
        out = []
        for _ in range(self.degree):
            out.append(a % base)
            a //= base
        return out

    def undigits(self, ds) -> int:
        base = self.sub.card
        val = 0
        for d in reversed(list(ds)):
            val = val * base + d
        return val

    # -- arithmetic ----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self._xor_add:
            return a ^ b
        sub = self.sub
        return self.undigits(sub.add(x, y) for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self._xor_add:
            return a
        sub = self.sub
        return self.undigits(sub.neg(x) for x in self.digits(a))

    def _mul_raw(self, a: int, b: int) -> int:
        sub = self.sub
        da, db = self.digits(a), self.digits(b)
        out = [0] * (2 * self.degree - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y:
                    out[i + j] = sub.add(out[i + j], sub.mul(x, y))
        for i in range(len(out) - 1, self.degree - 1, -1):
            c = out[i]
            if c == 0:
                continue
            out[i] = 0
            for j, rj in enumerate(self._red):
                if rj:
                    out[i - self.degree + j] = sub.add(out[i - self.degree + j], sub.mul(c, rj))
        return self.undigits(out[: self.degree])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.card - 1)]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(-self._log[a]) % (self.card - 1)]
        return self.pow(a, self.card - 2)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0 if e else 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.card - 1)]
        e %= self.card - 1
        result, acc = 1, a
        while e:
            if e & 1:
                result = self._mul_raw(result, acc)
            acc = self._mul_raw(acc, acc)
            e >>= 1
        return result

    # -- structure -----------------------------------------------------
    def generator(self) -> int:
        if self._gen is None:
            self._gen = _find_generator(self)
        return self._gen

    def _build_tables(self, generator_hint: int | None) -> None:
        gen = generator_hint if generator_hint is not None else _find_generator(self)
        self._gen = gen
        exp = [1] * (self.card - 1)
        log = [0] * self.card
        val = 1
        for i in range(self.card - 1):
            exp[i] = val
            log[val] = i
            val = self._mul_raw(val, gen)
        if val != 1:
            raise ValueError("generator hint does not have full multiplicative order")
        self._exp, self._log = exp, log

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        order = self.card - 1
        for ell, mult in polys.factorize(order).items():
            for _ in range(mult):
                if self.pow(a, order // ell) == 1:
                    order //= ell
                else:
                    break
        return order


def _find_generator(field) -> int:
    group = field.card - 1
    if group == 1:
        return 1
    prime_factors = list(polys.factorize(group))
    for cand in range(2, field.card):
        if all(field.pow(cand, group // ell) != 1 for ell in prime_factors):
            return cand
    raise ValueError("no multiplicative generator found")


@dataclass(frozen=True)
class FieldElement:
    """An element of one tower level, as a canonical integer encoding."""

    tower: "FieldTower"
    level: str
    value: int

    def _lv(self):
        return self.tower.level(self.level)

    def _same(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.tower is not other.tower and self.tower.params != other.tower.params:
            raise TowerMismatchError("elements belong to different towers")
        if self.level != other.level:
            raise LevelMismatchError(f"level mismatch: {self.level} vs {other.level}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.tower, self.level, self._lv().add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        lv = self._lv()
        return FieldElement(self.tower, self.level, lv.add(self.value, lv.neg(other.value)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.tower, self.level, self._lv().neg(self.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.tower, self.level, self._lv().mul(self.value, other.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        lv = self._lv()
        return FieldElement(self.tower, self.level, lv.mul(self.value, lv.inv(other.value)))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.tower, self.level, self._lv().pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.tower, self.level, self._lv().inv(self.value))

    def frobenius(self) -> "FieldElement":
        return self.tower.frobenius(self)

    def multiplicative_order(self) -> int:
        lv = self._lv()
        if isinstance(lv, PrimeField):
            order = lv.card - 1
            for ell, mult in polys.factorize(order).items():
                for _ in range(mult):
                    if lv.pow(self.value, order // ell) == 1:
                        order //= ell
                    else:
                        break
            return order
        return lv.element_order(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.level}, {self.value})"


@dataclass(frozen=True)
class CosetReps:
    """Representatives of the unit-group quotient of F_q^k by <xi^(q-1)>.

    Exactly q-1 entries, one per coset: the powers xi^0 .. xi^(q-2).
    """

    reps: tuple[FieldElement, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __getitem__(self, i: int) -> FieldElement:
        return self.reps[i]


class GFTables:
    """Dense operation tables for F_q, consumed by the linalg kernels."""

    def __init__(self, level):
        q = level.card
        self.q = q
        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        neg = np.zeros(q, dtype=np.uint8)
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(q):
            neg[a] = level.neg(a)
            if a:
                inv[a] = level.inv(a)
            for b in range(q):
                add[a, b] = level.add(a, b)
                mul[a, b] = level.mul(a, b)
        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv
        # plain nested tuples for the pure-Python kernels
        self.add_py = tuple(tuple(int(x) for x in row) for row in add)
        self.mul_py = tuple(tuple(int(x) for x in row) for row in mul)
        self.neg_py = tuple(int(x) for x in neg)
        self.inv_py = tuple(int(x) for x in inv)


class FieldTower:
    """The chain F_p < F_q < F_q^k < F_q^n with its distinguished elements."""

    def __init__(self, p: int, m: int, k: int, r: int, poly_seed: int = 0):
        if p < 2 or any(p % d == 0 for d in range(2, min(p, 46341)) if d * d <= p):
            raise ValueError(f"p must be prime, got {p}")
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        if r < 3:
            raise ValueError(f"r must be >= 3, got {r}")
        self.p, self.m, self.k, self.r = p, m, k, r
        self.poly_seed = poly_seed
        self.q = p**m
        self.n = r * k
        self.qk_card = self.q**k
        self.qn_card = self.q**self.n

        base = PrimeField(p)
        if m == 1:
            self.irr_q: tuple[int, ...] = (0, 1)
            level_q = base
        else:
            self.irr_q = polys.find_irreducible(base, m, seed=poly_seed)
            level_q = ExtField(base, self.irr_q)
        # primitive defining polynomial: xi is the residue class of the
        # indeterminate, so coordinates are raw digit extraction
        self.irr_k = polys.find_irreducible(level_q, k, seed=poly_seed, primitive=True)
        level_qk = ExtField(level_q, self.irr_k, generator_hint=self.q)
        self.irr_n = polys.find_irreducible(level_qk, r, seed=poly_seed)
        level_qn = ExtField(level_qk, self.irr_n)
        self._levels = {"base": base, "q": level_q, "qk": level_qk, "qn": level_qn}

        self.xi = FieldElement(self, "qk", self.q)
        self.gamma = FieldElement(self, "qn", self.qk_card)
        self._gf: GFTables | None = None
        self._proj_units: list[int] | None = None

    # -- identity ------------------------------------------------------
    @property
    def params(self) -> tuple[int, int, int, int, int]:
        return (self.p, self.m, self.k, self.r, self.poly_seed)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldTower) and self.params == other.params

    def __hash__(self) -> int:
        return hash(self.params)

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m={self.m}, k={self.k}, r={self.r}, seed={self.poly_seed})"

    # -- levels and elements --------------------------------------------
    def level(self, name: str):
        return self._levels[name]

    def element(self, level: str, value: int) -> FieldElement:
        if level not in LEVELS:
            raise ValueError(f"unknown level {level!r}")
        card = self._levels[level].card
        if not 0 <= value < card:
            raise ValueError(f"encoding {value} out of range for level {level} (card {card})")
        return FieldElement(self, level, value)

    def zero(self, level: str = "qn") -> FieldElement:
        return FieldElement(self, level, 0)

    def one(self, level: str = "qn") -> FieldElement:
        return FieldElement(self, level, 1)

    def elements(self, level: str):
        """All elements of a level, ascending by encoding (guard applies)."""
        lv = self._levels[level]
        if lv.card > ENUMERATION_GUARD:
            raise SizeGuardError(f"level {level} has {lv.card} elements, beyond the guard")
        return (FieldElement(self, level, v) for v in range(lv.card))

    # -- distinguished maps ----------------------------------------------
    def frobenius(self, x: FieldElement) -> FieldElement:
        if x.level not in ("qk", "qn"):
            raise LevelMismatchError("frobenius is defined at levels qk and qn")
        lv = self._levels[x.level]
        return FieldElement(self, x.level, lv.pow(x.value, self.q))

    def embed(self, x: FieldElement) -> FieldElement:
        """Inclusion F_q^k -> F_q^n (constant polynomial in gamma)."""
        if x.level != "qk":
            raise LevelMismatchError("embed expects a level-qk element")
        return FieldElement(self, "qn", x.value)

    def to_coordinates(self, x: FieldElement) -> tuple[int, ...]:
        """F_q coordinates of x in the basis {xi^i gamma^j}, gamma-major.

        With the primitive defining polynomial for F_q^k this is exactly
        the base-q digit expansion of the canonical encoding.
        """
        if x.level != "qn":
            raise LevelMismatchError("to_coordinates expects a level-qn element")
        return self.coords_of_value(x.value)

    def coords_of_value(self, value: int) -> tuple[int, ...]:
        q = self.q
        out = []
        for _ in range(self.n):
            out.append(value % q)
            value //= q
        return tuple(out)

    def from_coordinates(self, coords) -> FieldElement:
        coords = list(coords)
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(coords)}")
        return FieldElement(self, "qn", self.value_of_coords(coords))

    def value_of_coords(self, coords) -> int:
        q = self.q
        val = 0
        for c in reversed(list(coords)):
            if not 0 <= c < q:
                raise ValueError(f"coordinate {c} out of range for F_{q}")
            val = val * q + c
        return val

    def coset_representatives(self) -> CosetReps:
        """xi^0 .. xi^(q-2): one unit per coset of <xi^(q-1)> in F_q^k*."""
        lv = self._levels["qk"]
        reps = tuple(
            FieldElement(self, "qk", lv.pow(self.xi.value, i)) for i in range(self.q - 1)
        )
        return CosetReps(reps)

    # -- enumeration support ----------------------------------------------
    @property
    def enumerable(self) -> bool:
        return self.qn_card <= ENUMERATION_GUARD

    def ensure_enumerable(self, guard_override: bool = False) -> None:
        if not self.enumerable and not guard_override:
            raise SizeGuardError(
                f"q^n = {self.qn_card} exceeds the enumeration guard {ENUMERATION_GUARD}; "
                "pass guard_override=True (CLI: --guard-override) to force"
            )

    def projective_units(self, guard_override: bool = False) -> list[int]:
        """One unit encoding per F_q*-class of F_q^n*, generator-power order.

        The first entry is 1; multiplying a subspace by these values
        walks its whole orbit without F_q*-duplicates.
        """
        if self._proj_units is None:
            self.ensure_enumerable(guard_override)
            lv = self._levels["qn"]
            count = (self.qn_card - 1) // (self.q - 1)
            g = lv.generator()
            units = [1] * count
            val = 1
            for i in range(count):
                units[i] = val
                val = lv.mul(val, g)
            self._proj_units = units
        return self._proj_units

    def scalar_units(self) -> list[int]:
        """Encodings of F_q* inside F_q^n (subfield encodings coincide)."""
        return list(range(1, self.q))

    def projective_rep(self, value: int) -> int:
        """Smallest encoding in the F_q*-class of a nonzero level-qn value."""
        lv = self._levels["qn"]
        return min(lv.mul(c, value) for c in range(1, self.q))

    def gf_tables(self) -> GFTables:
        if self._gf is None:
            self._gf = GFTables(self._levels["q"])
        return self._gf

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "k": self.k,
            "r": self.r,
            "poly_seed": self.poly_seed,
            "irr_q": list(self.irr_q),
            "irr_k": list(self.irr_k),
            "irr_n": list(self.irr_n),
            "xi": self.xi.value,
        }

    @classmethod
    def from_json(cls, data: dict) -> "FieldTower":
        tower = build_tower(
            data["p"], data["m"], data["k"], data["r"], data.get("poly_seed", 0)
        )
        for key in ("irr_q", "irr_k", "irr_n"):
            if key in data and list(getattr(tower, key)) != list(data[key]):
                raise ValueError(f"tower rebuild mismatch on {key}; incompatible artifact")
        if "xi" in data and tower.xi.value != data["xi"]:
            raise ValueError("tower rebuild mismatch on xi; incompatible artifact")
        return tower

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@lru_cache(maxsize=32)
def build_tower(p: int, m: int, k: int, r: int, poly_seed: int = 0) -> FieldTower:
    """Deterministically build (and cache) the tower for these parameters."""
    return FieldTower(p, m, k, r, poly_seed)
