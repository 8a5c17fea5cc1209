"""Structural subsets of a finite ring: units, idempotents, Nil(R), J(R), J#(R), R^qnil.

Sets are returned as frozensets of element indices; mappings are keyed by index.
Everything is computed once per ring and memoized on it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ring import Element, FiniteRing, RingError


@dataclass(frozen=True, eq=False)
class StructureCache:
    units: dict[int, int]
    idempotents: frozenset[int]
    nilpotents: dict[int, int]
    jacobson: frozenset[int]
    j_sharp: dict[int, int]
    qnil: frozenset[int]
    # boolean masks over the carrier, same content as the sets above
    unit_mask: np.ndarray
    idempotent_mask: np.ndarray
    nil_mask: np.ndarray
    jacobson_mask: np.ndarray
    j_sharp_mask: np.ndarray
    qnil_mask: np.ndarray
    # commutes[x, y] is True iff xy = yx
    commutes: np.ndarray


def _mask(n: int, members) -> np.ndarray:
    m = np.zeros(n, dtype=bool)
    m[list(members)] = True
    m.setflags(write=False)
    return m


def _unit_map(r: FiniteRing) -> dict[int, int]:
    M = r.mul_table
    both = (M == r.one) & (M.T == r.one)
    out = {}
    for x in np.flatnonzero(both.any(axis=1)):
        inv = np.flatnonzero(both[x])
        if len(inv) != 1:
            raise RingError(f"element {r.labels[x]} has {len(inv)} two-sided inverses")
        out[int(x)] = int(inv[0])
    return out


def _first_power_in(r: FiniteRing, target: np.ndarray) -> dict[int, int]:
    """For every x, the least m >= 1 with x^m in ``target``, scanning at most order powers."""
    n = r.order
    x = np.arange(n)
    power = x.copy()
    found = np.zeros(n, dtype=np.int64)
    for m in range(1, n + 1):
        hit = (found == 0) & target[power]
        found[hit] = m
        if (found > 0).all():
            break
        power = r.mul_table[power, x]
    return {int(i): int(found[i]) for i in np.flatnonzero(found)}


def _compute(r: FiniteRing) -> StructureCache:
    n = r.order
    M, A = r.mul_table, r.add_table
    ar = np.arange(n)

    units = _unit_map(r)
    unit_mask = _mask(n, units)
    idem_mask = np.diagonal(M) == ar
    nil = _first_power_in(r, ar == r.zero)

    # x in J iff 1 - r x is a unit for every r
    one_minus = A[r.one, r.neg_table[M]]
    jac_mask = unit_mask[one_minus].all(axis=0)
    jac = frozenset(int(i) for i in np.flatnonzero(jac_mask))
    jsharp = _first_power_in(r, jac_mask)

    commutes = M == M.T
    # a in qnil iff 1 + a x is a unit for every x commuting with a
    qnil_mask = (unit_mask[A[r.one, M]] | ~commutes).all(axis=1)
    qnil = frozenset(int(i) for i in np.flatnonzero(qnil_mask))

    idem_mask.setflags(write=False)
    jac_mask.setflags(write=False)
    qnil_mask.setflags(write=False)
    commutes.setflags(write=False)
    return StructureCache(
        units=units,
        idempotents=frozenset(int(i) for i in np.flatnonzero(idem_mask)),
        nilpotents=nil,
        jacobson=jac,
        j_sharp=jsharp,
        qnil=qnil,
        unit_mask=unit_mask,
        idempotent_mask=idem_mask,
        nil_mask=_mask(n, nil),
        jacobson_mask=jac_mask,
        j_sharp_mask=_mask(n, jsharp),
        qnil_mask=qnil_mask,
        commutes=commutes,
    )


def structure(r: FiniteRing) -> StructureCache:
    cache = r._memo.get("structure")
    if cache is None:
        cache = r._memo["structure"] = _compute(r)
    return cache


def units(r: FiniteRing) -> dict[int, int]:
    return structure(r).units


def idempotents(r: FiniteRing) -> frozenset[int]:
    return structure(r).idempotents


def nilpotents(r: FiniteRing) -> dict[int, int]:
    return structure(r).nilpotents


def jacobson_radical(r: FiniteRing) -> frozenset[int]:
    return structure(r).jacobson


def j_sharp(r: FiniteRing) -> dict[int, int]:
    return structure(r).j_sharp


def qnil(r: FiniteRing) -> frozenset[int]:
    return structure(r).qnil


def commutant_mask(a: Element, order: int = 1) -> np.ndarray:
    C = structure(a.ring).commutes
    if order == 1:
        return C[a.index]
    if order == 2:
        return C[:, C[a.index]].all(axis=1)
    raise ValueError("commutant order must be 1 or 2")


def commutant(a: Element, order: int = 1) -> frozenset[int]:
    """comm(a) for order 1, the double commutant comm²(a) for order 2."""
    return frozenset(int(i) for i in np.flatnonzero(commutant_mask(a, order)))


def in_double_commutant(x: Element, a: Element) -> bool:
    return bool(commutant_mask(a, 2)[x.index])


def is_central(a: Element) -> bool:
    return bool(structure(a.ring).commutes[a.index].all())


def center(r: FiniteRing) -> frozenset[int]:
    return frozenset(int(i) for i in np.flatnonzero(structure(r).commutes.all(axis=1)))


def inverse(u: Element) -> Element:
    """Two-sided inverse of a unit."""
    inv = structure(u.ring).units.get(u.index)
    if inv is None:
        raise RingError(f"{u} is not a unit")
    return Element(u.ring, inv)


def is_unit(x: Element) -> bool:
    return bool(structure(x.ring).unit_mask[x.index])
