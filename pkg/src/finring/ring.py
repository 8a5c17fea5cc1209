"""Finite unital rings stored as full Cayley tables.

Elements are dense indices into the carrier. Every ring keeps its addition
and multiplication tables as read-only numpy arrays, so arithmetic is a table
lookup and the brute-force loops elsewhere in the package stay cheap.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 4096


class RingError(ValueError):
    """Base class for ring construction and element errors."""


class CapExceeded(RingError):
    pass


class RingMismatch(RingError):
    pass


class ElementParseError(RingError):
    pass


class NotIdempotent(RingError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteRing:
    add_table: np.ndarray
    mul_table: np.ndarray
    zero: int
    one: int
    labels: tuple[str, ...]
    provenance: str = ""
    # set only for corner rings: parent ring and corner index -> parent index
    parent: FiniteRing | None = None
    injection: tuple[int, ...] | None = None
    _memo: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise RingError("a ring needs at least one element")
        for name in ("add_table", "mul_table"):
            table = np.array(getattr(self, name), dtype=np.int64)
            if table.shape != (n, n):
                raise RingError(f"{name} has shape {table.shape}, expected {(n, n)}")
            table.setflags(write=False)
            object.__setattr__(self, name, table)
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise RingError("zero/one index out of range")

    def __repr__(self) -> str:
        return f"FiniteRing({self.provenance or '?'}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def neg_table(self) -> np.ndarray:
        rows, cols = np.nonzero(self.add_table == self.zero)
        neg = np.full(self.order, -1, dtype=np.int64)
        neg[rows] = cols
        if (neg < 0).any():
            raise RingError("additive inverses missing")
        neg.setflags(write=False)
        return neg

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {_normalize(label): i for i, label in enumerate(self.labels)}

    # index-level arithmetic; Element wraps these

    def add(self, x: int, y: int) -> int:
        return int(self.add_table[x, y])

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def neg(self, x: int) -> int:
        return int(self.neg_table[x])

    def sub(self, x: int, y: int) -> int:
        return int(self.add_table[x, self.neg_table[y]])

    def pow(self, x: int, k: int) -> int:
        if k < 0:
            raise RingError("negative exponent")
        acc = self.one
        for _ in range(k):
            acc = int(self.mul_table[acc, x])
        return acc

    def element(self, index: int) -> Element:
        return Element(self, int(index))

    def elements(self) -> Iterator[Element]:
        for i in range(self.order):
            yield Element(self, i)

    @property
    def zero_element(self) -> Element:
        return Element(self, self.zero)

    @property
    def one_element(self) -> Element:
        return Element(self, self.one)

    def parse(self, text: str) -> Element:
        return parse_element(self, text)


@dataclass(frozen=True)
class Element:
    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.order:
            raise RingError(f"index {self.index} outside ring of order {self.ring.order}")

    def _other(self, other: Element | int) -> int:
        if isinstance(other, Element):
            if other.ring is not self.ring:
                raise RingMismatch("operands live in different rings")
            return other.index
        # integer literals are read as n·1, which is what expressions like 1 - e mean
        return _integer_multiple(self.ring, other)

    def __add__(self, other):
        return Element(self.ring, self.ring.add(self.index, self._other(other)))

    def __radd__(self, other):
        return Element(self.ring, self.ring.add(self._other(other), self.index))

    def __sub__(self, other):
        return Element(self.ring, self.ring.sub(self.index, self._other(other)))

    def __rsub__(self, other):
        return Element(self.ring, self.ring.sub(self._other(other), self.index))

    def __mul__(self, other):
        return Element(self.ring, self.ring.mul(self.index, self._other(other)))

    def __rmul__(self, other):
        return Element(self.ring, self.ring.mul(self._other(other), self.index))

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int):
        return Element(self.ring, self.ring.pow(self.index, k))

    def __str__(self) -> str:
        return self.ring.labels[self.index]

    def __repr__(self) -> str:
        return f"Element({self.ring.labels[self.index]})"


def _integer_multiple(r: FiniteRing, n: int) -> int:
    acc = r.zero
    step = r.one if n >= 0 else r.neg(r.one)
    for _ in range(abs(n)):
        acc = r.add(acc, step)
    return acc


def arithmetic(op: str, *operands) -> Element:
    """Evaluate one of add, mul, neg, sub, pow on elements of a single ring."""
    if op == "neg":
        (x,) = operands
        return -x
    if op == "pow":
        x, k = operands
        if k < 0:
            raise RingError("negative exponent")
        return x**k
    x, y = operands
    if x.ring is not y.ring:
        raise RingMismatch("operands live in different rings")
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "sub":
        return x - y
    raise RingError(f"unknown operation {op!r}")


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise CapExceeded(f"ring order {order} exceeds cap {cap}")


def build_zmod(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    if n < 1:
        raise RingError("zmod needs n >= 1")
    _check_cap(n, cap)
    x = np.arange(n)
    return FiniteRing(
        add_table=(x[:, None] + x[None, :]) % n,
        mul_table=(x[:, None] * x[None, :]) % n,
        zero=0,
        one=1 % n,
        labels=tuple(str(i) for i in range(n)),
        provenance=f"zmod:{n}",
    )


def _entries_to_index(entries: np.ndarray, radix: int) -> np.ndarray:
    idx = np.zeros(entries.shape[:-1], dtype=np.int64)
    for pos in range(entries.shape[-1]):
        idx = idx * radix + entries[..., pos]
    return idx


def _all_entry_vectors(radix: int, length: int) -> np.ndarray:
    # row i is the mixed-radix digits of i, most significant first
    n = radix**length
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack(np.unravel_index(np.arange(n), (radix,) * length), axis=1).astype(np.int64)


def _matrix_tables(base: FiniteRing, k: int, positions: Sequence[tuple[int, int]]):
    """Add/mul tables for the matrices over ``base`` whose free entries sit at ``positions``."""
    m = base.order
    free = _all_entry_vectors(m, len(positions))
    n = len(free)
    full = np.full((n, k, k), base.zero, dtype=np.int64)
    for p, (i, j) in enumerate(positions):
        full[:, i, j] = free[:, p]
    badd, bmul = base.add_table, base.mul_table

    add_entries = badd[free[:, None, :], free[None, :, :]]
    add_table = _entries_to_index(add_entries, m)

    prod_entries = np.empty((n, n, len(positions)), dtype=np.int64)
    for p, (i, j) in enumerate(positions):
        acc = np.full((n, n), base.zero, dtype=np.int64)
        for l in range(k):
            acc = badd[acc, bmul[full[:, None, i, l], full[None, :, l, j]]]
        prod_entries[:, :, p] = acc
    mul_table = _entries_to_index(prod_entries, m)

    def index_of(matrix) -> int:
        return int(_entries_to_index(np.array([matrix[i][j] for i, j in positions]), m))

    zero = index_of([[base.zero] * k for _ in range(k)])
    one = index_of([[base.one if i == j else base.zero for j in range(k)] for i in range(k)])
    labels = tuple(
        "[" + ",".join("[" + ",".join(base.labels[v] for v in row) + "]" for row in mat) + "]"
        for mat in full
    )
    return add_table, mul_table, zero, one, labels


def build_matrix_ring(base: FiniteRing, k: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    if k < 1:
        raise RingError("matrix size must be >= 1")
    _check_cap(base.order ** (k * k), cap)
    positions = [(i, j) for i in range(k) for j in range(k)]
    add, mul, zero, one, labels = _matrix_tables(base, k, positions)
    return FiniteRing(add, mul, zero, one, labels, provenance=f"mat:{k}:{base.provenance}")


def build_upper_triangular(base: FiniteRing, k: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    if k < 1:
        raise RingError("matrix size must be >= 1")
    _check_cap(base.order ** (k * (k + 1) // 2), cap)
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    add, mul, zero, one, labels = _matrix_tables(base, k, positions)
    return FiniteRing(add, mul, zero, one, labels, provenance=f"tri:{k}:{base.provenance}")


def build_product(r1: FiniteRing, r2: FiniteRing, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    n1, n2 = r1.order, r2.order
    _check_cap(n1 * n2, cap)
    first = np.repeat(np.arange(n1), n2)
    second = np.tile(np.arange(n2), n1)

    def combine(t1, t2):
        return t1[first[:, None], first[None, :]] * n2 + t2[second[:, None], second[None, :]]

    return FiniteRing(
        add_table=combine(r1.add_table, r2.add_table),
        mul_table=combine(r1.mul_table, r2.mul_table),
        zero=r1.zero * n2 + r2.zero,
        one=r1.one * n2 + r2.one,
        labels=tuple(f"({r1.labels[i]},{r2.labels[j]})" for i, j in zip(first, second)),
        provenance=f"prod:{r1.provenance},{r2.provenance}",
    )


def build_corner(r: FiniteRing, e: Element | int, validate: bool = True) -> FiniteRing:
    """The corner ring eRe, with identity e and an injection back into ``r``.

    Corner elements are ordered by their parent index.
    """
    e_idx = e.index if isinstance(e, Element) else int(e)
    if isinstance(e, Element) and e.ring is not r:
        raise RingMismatch("idempotent does not belong to the ring")
    if r.mul(e_idx, e_idx) != e_idx:
        raise NotIdempotent(f"{r.labels[e_idx]} is not idempotent")
    M = r.mul_table
    carrier = np.unique(M[M[e_idx, :], e_idx])
    pos = {int(x): i for i, x in enumerate(carrier)}
    lookup = np.full(r.order, -1, dtype=np.int64)
    lookup[carrier] = np.arange(len(carrier))
    sub_add = lookup[r.add_table[np.ix_(carrier, carrier)]]
    sub_mul = lookup[M[np.ix_(carrier, carrier)]]
    ring = FiniteRing(
        add_table=sub_add,
        mul_table=sub_mul,
        zero=pos[r.zero],
        one=pos[e_idx],
        labels=tuple(r.labels[int(x)] for x in carrier),
        provenance=f"corner:{r.provenance}:{r.labels[e_idx]}",
        parent=r,
        injection=tuple(int(x) for x in carrier),
    )
    if validate:
        report = validate_ring(ring)
        if not report.valid:
            raise RingError(f"corner ring failed validation: {report}")
    return ring


def to_parent(x: Element) -> Element:
    r = x.ring
    if r.parent is None:
        raise RingError("not a corner ring")
    return Element(r.parent, r.injection[x.index])


def from_parent(corner: FiniteRing, x: Element) -> Element:
    """Corner element represented by the parent element ``x`` (which must lie in eRe)."""
    if corner.parent is None or x.ring is not corner.parent:
        raise RingMismatch("element is not from this corner's parent")
    try:
        return Element(corner, corner.injection.index(x.index))
    except ValueError:
        raise RingError(f"{x} is not in the corner carrier") from None


def build_table_ring(order: int, add: Sequence[int], mul: Sequence[int], one: int,
                     provenance: str = "table", validate: bool = True) -> FiniteRing:
    if len(add) != order * order or len(mul) != order * order:
        raise RingError("table sizes must be order^2")
    add_t = np.asarray(add, dtype=np.int64).reshape(order, order)
    mul_t = np.asarray(mul, dtype=np.int64).reshape(order, order)
    for t in (add_t, mul_t):
        if t.size and (t.min() < 0 or t.max() >= order):
            raise RingError("table entry out of range")
    ring = FiniteRing(add_t, mul_t, zero=0, one=one,
                      labels=tuple(str(i) for i in range(order)), provenance=provenance)
    if validate:
        report = validate_ring(ring)
        if not report.valid:
            raise RingError(f"table ring is not a ring: {report}")
    return ring


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    law: str | None = None
    witness: tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return f"invalid: {self.law} fails at {self.witness}"


def _first_violation(mask: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(~mask)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def validate_ring(r: FiniteRing) -> ValidationReport:
    """Check every ring axiom exhaustively; the first failing law and tuple is reported."""
    n = r.order
    A, M = r.add_table, r.mul_table
    x = np.arange(n)
    if A.min() < 0 or A.max() >= n or M.min() < 0 or M.max() >= n:
        return ValidationReport(False, "table entries in range", None)

    checks = [
        ("additive identity", lambda: np.stack([A[r.zero, :] == x, A[:, r.zero] == x])),
        ("addition rows are permutations",
         lambda: np.sort(A, axis=1) == x[None, :]),
        ("additive commutativity", lambda: A == A.T),
        ("multiplicative identity", lambda: np.stack([M[r.one, :] == x, M[:, r.one] == x])),
    ]
    for law, check in checks:
        witness = _first_violation(check())
        if witness is not None:
            return ValidationReport(False, law, witness)

    # triple laws, one slice per first argument to keep memory at O(n^2)
    triple_laws = [
        ("additive associativity", lambda i: A[A[i, :], :] == A[i, A]),
        ("multiplicative associativity", lambda i: M[M[i, :], :] == M[i, M]),
        ("left distributivity", lambda i: M[i, A] == A[M[i, :][:, None], M[i, :][None, :]]),
        ("right distributivity", lambda i: M[A, i] == A[M[:, i][:, None], M[:, i][None, :]]),
    ]
    for law, check in triple_laws:
        for i in range(n):
            witness = _first_violation(check(i))
            if witness is not None:
                return ValidationReport(False, law, (i, *witness))

    if n > 1 and r.zero == r.one:
        return ValidationReport(False, "zero differs from one", (r.zero,))
    return ValidationReport(True)


_WS = re.compile(r"\s+")


def _normalize(text: str) -> str:
    return _WS.sub("", text)


def parse_element(r: FiniteRing, text: str) -> Element:
    """Read an element literal written in the ring's label grammar."""
    key = _normalize(str(text))
    idx = r._label_index.get(key)
    if idx is not None:
        return Element(r, idx)
    if re.fullmatch(r"-?\d+", key) and r.labels[0].lstrip("-").isdigit():
        raise ElementParseError(f"literal {text!r} out of range for ring of order {r.order}")
    raise ElementParseError(f"cannot parse {text!r} as an element of {r.provenance or 'ring'}")


def format_element(x: Element) -> str:
    return str(x)


def matrix_unit(r: FiniteRing, i: int, j: int) -> Element:
    """E_ij in a matrix or triangular ring over a base whose labels are "0"/"1"-style."""
    k = r.labels[0].count("[") - 1
    rows = [["0"] * k for _ in range(k)]
    rows[i][j] = "1"
    return parse_element(r, "[" + ",".join("[" + ",".join(row) + "]" for row in rows) + "]")


def all_pairs(r: FiniteRing) -> Iterator[tuple[int, int]]:
    return itertools.product(range(r.order), repeat=2)
