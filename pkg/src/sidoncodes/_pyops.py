"""Pure-Python row-reduction kernels over GF(q).

Rows are sequences of F_q digit encodings, one per column.  GF(2) rows
are packed into int bitsets (bit j = column j); other fields use plain
lists driven by the dense add/mul tables.  Selected as a fallback when
the compiled extension is unavailable (see :mod:`sidoncodes.linalg`).
"""

from __future__ import annotations

NAME = "pure"


# -- GF(2): int bitsets ------------------------------------------------


def _to_bits(row) -> int:
    v = 0
    for j, b in enumerate(row):
        if b:
            v |= 1 << j
    return v


def _from_bits(v: int, ncols: int) -> tuple[int, ...]:
    return tuple((v >> j) & 1 for j in range(ncols))


def _rref_bits(brows) -> list[int]:
    pivots: dict[int, int] = {}
    for r in brows:
        for c, p in pivots.items():
            if (r >> c) & 1:
                r ^= p
        if r:
            c = (r & -r).bit_length() - 1
            for cc, pp in pivots.items():
                if (pp >> c) & 1:
                    pivots[cc] = pp ^ r
            pivots[c] = r
    return [pivots[c] for c in sorted(pivots)]


def _pivots_bits(brows) -> dict[int, int]:
    pivots: dict[int, int] = {}
    for r in brows:
        while r:
            c = (r & -r).bit_length() - 1
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            r ^= p
    return pivots


# -- generic GF(q): digit lists + tables -------------------------------


def _rref_generic(rows, ncols: int, gf) -> list[list[int]]:
    add, mul, neg, inv = gf.add_py, gf.mul_py, gf.neg_py, gf.inv_py
    pivots: dict[int, list[int]] = {}
    for row in rows:
        row = list(row)
        for c, prow in pivots.items():
            v = row[c]
            if v:
                nf = neg[v]
                mnf = mul[nf]
                row = [add[x][mnf[y]] for x, y in zip(row, prow)]
        lead = next((j for j in range(ncols) if row[j]), None)
        if lead is None:
            continue
        miv = mul[inv[row[lead]]]
        row = [miv[x] for x in row]
        for c, prow in list(pivots.items()):
            v = prow[lead]
            if v:
                mnf = mul[neg[v]]
                pivots[c] = [add[x][mnf[y]] for x, y in zip(prow, row)]
        pivots[lead] = row
    return [pivots[c] for c in sorted(pivots)]


def _pivots_generic(rows, ncols: int, gf) -> dict[int, list[int]]:
    add, mul, neg, inv = gf.add_py, gf.mul_py, gf.neg_py, gf.inv_py
    pivots: dict[int, list[int]] = {}
    for row in rows:
        row = list(row)
        while True:
            lead = next((j for j in range(ncols) if row[j]), None)
            if lead is None:
                break
            p = pivots.get(lead)
            if p is None:
                miv = mul[inv[row[lead]]]
                pivots[lead] = [miv[x] for x in row]
                break
            mnf = mul[neg[row[lead]]]
            row = [add[x][mnf[y]] for x, y in zip(row, p)]
    return pivots


def _add_rows_generic(pivots: dict, rows, ncols: int, gf) -> int:
    add, mul, neg, inv = gf.add_py, gf.mul_py, gf.neg_py, gf.inv_py
    gained = 0
    for row in rows:
        row = list(row)
        while True:
            lead = next((j for j in range(ncols) if row[j]), None)
            if lead is None:
                break
            p = pivots.get(lead)
            if p is None:
                miv = mul[inv[row[lead]]]
                pivots[lead] = [miv[x] for x in row]
                gained += 1
                break
            mnf = mul[neg[row[lead]]]
            row = [add[x][mnf[y]] for x, y in zip(row, p)]
    return gained


# -- public kernel API ---------------------------------------------------


def rref(rows, ncols: int, gf):
    """Canonical reduced-row-echelon rows (zero rows dropped) and rank."""
    if gf.q == 2:
        reduced = _rref_bits(_to_bits(r) for r in rows)
        return tuple(_from_bits(v, ncols) for v in reduced), len(reduced)
    reduced = _rref_generic(rows, ncols, gf)
    return tuple(tuple(r) for r in reduced), len(reduced)


def rank(rows, ncols: int, gf) -> int:
    if gf.q == 2:
        return len(_pivots_bits(_to_bits(r) for r in rows))
    return len(_pivots_generic(rows, ncols, gf))


def prepare(mats, ncols: int, gf):
    """Precompute a backend-friendly form of many same-shape matrices."""
    if gf.q == 2:
        return [tuple(_to_bits(r) for r in mat) for mat in mats]
    return [[list(r) for r in mat] for mat in mats]


def stack_ranks(top_rows, prepared, ncols: int, gf) -> list[int]:
    """Rank of top_rows stacked over each prepared matrix."""
    out = []
    if gf.q == 2:
        base = _pivots_bits(_to_bits(r) for r in top_rows)
        base_rank = len(base)
        for mat in prepared:
            pivots = dict(base)
            rk = base_rank
            for r in mat:
                while r:
                    c = (r & -r).bit_length() - 1
                    p = pivots.get(c)
                    if p is None:
                        pivots[c] = r
                        rk += 1
                        break
                    r ^= p
            out.append(rk)
        return out
    base = _pivots_generic(top_rows, ncols, gf)
    base_rank = len(base)
    for mat in prepared:
        pivots = dict(base)
        out.append(base_rank + _add_rows_generic(pivots, mat, ncols, gf))
    return out
