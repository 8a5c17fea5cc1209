"""RingSpec expressions: ``zmod:6``, ``mat:2:zmod:2``, ``prod:zmod:2,zmod:4`` ...

Grammar::

    spec    := zmod:<n> | mat:<k>:<spec> | tri:<k>:<spec>
             | prod:<spec>,<spec> | corner:<spec>:<literal> | table:<path>

A literal runs to the first comma or closing bracket at nesting depth zero,
so matrix and pair literals may contain commas.
"""

from __future__ import annotations

import json
from pathlib import Path

from .ring import (
    DEFAULT_ORDER_CAP,
    FiniteRing,
    RingError,
    build_corner,
    build_matrix_ring,
    build_product,
    build_table_ring,
    build_upper_triangular,
    build_zmod,
    parse_element,
)


class SpecError(RingError):
    pass


class _Parser:
    def __init__(self, text: str, cap: int):
        self.text = text.strip()
        self.pos = 0
        self.cap = cap

    def fail(self, msg: str):
        raise SpecError(f"{msg} at position {self.pos} in {self.text!r}")

    def expect(self, s: str):
        if not self.text.startswith(s, self.pos):
            self.fail(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected integer")
        return int(self.text[start:self.pos])

    def token(self) -> str:
        depth = 0
        start = self.pos
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c in "[(":
                depth += 1
            elif c in "])":
                if depth == 0:
                    break
                depth -= 1
            elif c == "," and depth == 0:
                break
            self.pos += 1
        if start == self.pos:
            self.fail("expected literal")
        return self.text[start:self.pos]

    def spec(self) -> FiniteRing:
        head_end = self.text.find(":", self.pos)
        if head_end < 0:
            self.fail("expected constructor")
        head = self.text[self.pos:head_end]
        self.pos = head_end + 1
        if head == "zmod":
            return build_zmod(self.integer(), cap=self.cap)
        if head in ("mat", "tri"):
            k = self.integer()
            self.expect(":")
            base = self.spec()
            build = build_matrix_ring if head == "mat" else build_upper_triangular
            return build(base, k, cap=self.cap)
        if head == "prod":
            r1 = self.spec()
            self.expect(",")
            r2 = self.spec()
            return build_product(r1, r2, cap=self.cap)
        if head == "corner":
            r = self.spec()
            self.expect(":")
            lit = self.token()
            return build_corner(r, parse_element(r, lit))
        if head == "table":
            return load_table(self.token(), cap=self.cap)
        self.fail(f"unknown constructor {head!r}")

    def parse(self) -> FiniteRing:
        ring = self.spec()
        if self.pos != len(self.text):
            self.fail("trailing input")
        return ring


def build_ring(spec: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Build the ring described by ``spec``; the result's provenance is the normalized spec."""
    ring = _Parser(spec, cap).parse()
    if ring.order > cap:
        raise SpecError(f"ring order {ring.order} exceeds cap {cap}")
    return ring


def load_table(path: str | Path, cap: int = DEFAULT_ORDER_CAP, validate: bool = True) -> FiniteRing:
    """Load a JSON table file with keys ``order``, ``add``, ``mul``, ``one``; zero is index 0."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read table file {path}: {exc}") from exc
    missing = {"order", "add", "mul", "one"} - set(doc)
    if missing:
        raise SpecError(f"table file {path} missing fields {sorted(missing)}")
    order = int(doc["order"])
    if order > cap:
        raise SpecError(f"ring order {order} exceeds cap {cap}")
    return build_table_ring(order, doc["add"], doc["mul"], int(doc["one"]),
                            provenance=f"table:{path}", validate=validate)


def dump_table(ring: FiniteRing) -> dict:
    """Table-file document for ``ring``, relabelled so that zero is index 0."""
    n = ring.order
    perm = [ring.zero] + [i for i in range(n) if i != ring.zero]
    inv = {old: new for new, old in enumerate(perm)}
    add = [inv[ring.add(perm[i], perm[j])] for i in range(n) for j in range(n)]
    mul = [inv[ring.mul(perm[i], perm[j])] for i in range(n) for j in range(n)]
    return {"order": n, "add": add, "mul": mul, "one": inv[ring.one]}


def load_registry(path: str | Path) -> list[str]:
    """RingSpecs from a registry file: one per line, ``#`` starts a comment."""
    specs = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            build_ring(line)
            specs.append(line)
    return specs
