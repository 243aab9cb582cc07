"""Polynomial arithmetic over an abstract coefficient field.

Polynomials are tuples of field-element encodings, index = degree, with
no trailing zeros; the zero polynomial is the empty tuple.  The
coefficient field is any object exposing ``card``, ``add``, ``neg``,
``mul`` and ``inv`` on integer encodings (see :mod:`sidoncodes.tower`).

This is deliberately minimal: enough for deterministic irreducible /
primitive polynomial search and for the Rabin irreducibility test, not a
general factorization toolkit.
"""

from __future__ import annotations

from functools import lru_cache

Poly = tuple[int, ...]


def normalize(coeffs) -> Poly:
    """Strip trailing zero coefficients."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(f: Poly) -> int:
    return len(f) - 1


def pmul(field, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return normalize(out)


def pmod(field, f: Poly, g: Poly) -> Poly:
    """Remainder of f modulo g (g nonzero)."""
    if not g:
        raise ZeroDivisionError("polynomial modulus is zero")
    rem = list(f)
    dg = degree(g)
    lead_inv = field.inv(g[-1])
    while len(rem) - 1 >= dg and rem:
        if rem[-1] == 0:
            rem.pop()
            continue
        factor = field.mul(rem[-1], lead_inv)
        shift = len(rem) - 1 - dg
        for j, c in enumerate(g):
            if c:
                rem[shift + j] = field.add(rem[shift + j], field.neg(field.mul(factor, c)))
        rem.pop()
    return normalize(rem)


def pmulmod(field, f: Poly, g: Poly, mod: Poly) -> Poly:
    return pmod(field, pmul(field, f, g), mod)


def ppowmod(field, base: Poly, exp: int, mod: Poly) -> Poly:
    """base**exp modulo mod, by square and multiply."""
    result: Poly = (1,)
    acc = pmod(field, base, mod)
    while exp > 0:
        if exp & 1:
            result = pmulmod(field, result, acc, mod)
        acc = pmulmod(field, acc, acc, mod)
        exp >>= 1
    return result


def pgcd(field, f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, pmod(field, f, g)
    if f:
        # make monic so that gcd == (1,) is a clean unit test
        li = field.inv(f[-1])
        f = normalize(field.mul(c, li) for c in f)
    return f


@lru_cache(maxsize=None)
def factorize(n: int) -> dict[int, int]:
    """Prime factorization; trial division first, sympy for big leftovers."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n and d < 65536:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if n < 65536 ** 2:
            factors[n] = factors.get(n, 0) + 1
        else:
            from sympy import factorint

            for prm, mult in factorint(n).items():
                factors[int(prm)] = factors.get(int(prm), 0) + int(mult)
    return factors


X: Poly = (0, 1)


def is_irreducible(field, f: Poly) -> bool:
    """Rabin test over the given coefficient field."""
    d = degree(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    card = field.card
    # x^(card^d) must equal x mod f
    t = X
    for _ in range(d):
        t = ppowmod(field, t, card, f)
    if t != pmod(field, X, f):
        return False
    for ell in factorize(d):
        t = X
        for _ in range(d // ell):
            t = ppowmod(field, t, card, f)
        diff = normalize(
            [field.add(a, field.neg(b)) for a, b in _zip_pad(t, pmod(field, X, f))]
        )
        if degree(pgcd(field, diff, f)) != 0:
            return False
    return True


def _zip_pad(f: Poly, g: Poly):
    n = max(len(f), len(g))
    fp = list(f) + [0] * (n - len(f))
    gp = list(g) + [0] * (n - len(g))
    return zip(fp, gp)


def root_has_full_order(field, f: Poly) -> bool:
    """True when the residue class of x generates the quotient's unit group.

    Assumes f irreducible of degree d, so the quotient is a field with
    card**d elements.
    """
    d = degree(f)
    group = field.card**d - 1
    for ell in factorize(group):
        if ppowmod(field, X, group // ell, f) == (1,):
            return False
    return True


def monic_candidate(field, deg: int, index: int) -> Poly:
    """index-th monic polynomial of given degree, low coefficients first."""
    coeffs = []
    for _ in range(deg):
        coeffs.append(index % field.card)
        index //= field.card
    coeffs.append(1)
    return tuple(coeffs)


def find_irreducible(field, deg: int, seed: int = 0, primitive: bool = False) -> Poly:
    """First monic irreducible of the given degree, scanning from seed.

    The scan walks candidate indices seed, seed+1, ... card**deg - 1 and
    wraps to 0 ... seed-1, so any seed yields a well-defined polynomial.
    With primitive=True the root must additionally generate the unit
    group of the quotient field.
    """
    total = field.card**deg
    seed %= total
    for offset in range(total):
        idx = (seed + offset) % total
        cand = monic_candidate(field, deg, idx)
        if is_irreducible(field, cand):
            if not primitive or root_has_full_order(field, cand):
                return cand
    raise ValueError(f"no irreducible polynomial of degree {deg} found")
