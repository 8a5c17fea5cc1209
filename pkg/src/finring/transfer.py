"""Constructive transfer formulas between ab and ba, 1-ab and 1-ba, and corner rings.

Each function builds the certificate its formula prescribes and then checks it
against the definition and the brute-force scans in ``inverses``; a mismatch
raises :class:`TransferFailure` carrying the offending inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .inverses import (
    DRAZIN_VARIANTS,
    CleanDecomposition,
    DrazinResult,
    check_clean,
    drazin,
    drazin_index,
    has_property,
    satisfies_drazin,
)
from .ring import Element, FiniteRing, NotIdempotent, RingMismatch, build_corner, from_parent
from .structure import commutant_mask, inverse, is_central, is_unit, structure


class TransferFailure(AssertionError):
    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


@dataclass(frozen=True)
class TransferWitness:
    formula_id: str
    inputs: dict
    outputs: dict

    def to_dict(self) -> dict:
        return {"formula_id": self.formula_id, "inputs": self.inputs, "outputs": self.outputs}


def _same_ring(a: Element, b: Element) -> None:
    if a.ring is not b.ring:
        raise RingMismatch("a and b live in different rings")


def _fail(msg: str, **witness) -> TransferFailure:
    return TransferFailure(msg, {k: str(v) for k, v in witness.items()})


def jacobson_inverse(a: Element, b: Element) -> Element | None:
    """(1 + ba)^-1 computed as 1 - b (1 + ab)^-1 a; None when 1 + ab is not a unit."""
    _same_ring(a, b)
    one = a.ring.one_element
    if not is_unit(one + a * b):
        return None
    x = one - b * inverse(one + a * b) * a
    target = one + b * a
    if x * target != one or target * x != one:
        raise _fail("Jacobson inverse is not a two-sided inverse of 1+ba", a=a, b=b, candidate=x)
    return x


def cline(a: Element, b: Element, variant: str = "drazin") -> DrazinResult | None:
    """Variant inverse of ba from that of ab: b ((ab)^inv)^2 a."""
    _same_ring(a, b)
    if variant not in DRAZIN_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    ab_res = drazin(a * b, variant)
    if ab_res is None:
        return None
    c = ab_res.inverse
    ba = b * a
    candidate = b * c * c * a
    if not satisfies_drazin(ba, candidate, variant):
        raise _fail(f"Cline candidate fails the {variant} definition for ba", a=a, b=b, candidate=candidate)
    oracle = drazin(ba, variant)
    if oracle is None or oracle.inverse != candidate:
        raise _fail("Cline candidate differs from the scanned inverse of ba",
                    a=a, b=b, candidate=candidate, oracle=oracle.inverse if oracle else None)
    return DrazinResult(variant, candidate, drazin_index(ba, candidate), ba.ring.one_element - ba * candidate)


def strongly_clean_transfer(a: Element, b: Element, d: CleanDecomposition) -> CleanDecomposition:
    """Push a strongly clean decomposition ab = e + u to one of ba.

    With f = b u^-1 (1 - e) a the new idempotent is g = 1 - f and the unit is v = ba - g.
    """
    _same_ring(a, b)
    ab, ba = a * b, b * a
    problems = check_clean(ab, d)
    if problems:
        raise ValueError(f"({d.idempotent}, {d.unit}) is not a strongly clean decomposition of ab: {problems}")
    one = a.ring.one_element
    e, u = d.idempotent, d.unit
    f = b * inverse(u) * (one - e) * a
    g = one - f
    v = ba - g
    out = CleanDecomposition(g, v)
    problems = check_clean(ba, out)
    if problems:
        raise _fail(f"transferred decomposition invalid for ba: {problems}", a=a, b=b, e=e, u=u, g=g, v=v)
    return out


def one_minus_clean_transfer(a: Element, b: Element, d: CleanDecomposition) -> CleanDecomposition:
    """Strongly clean decomposition of 1 - ba from one of 1 - ab (via x <-> 1 - x)."""
    _same_ring(a, b)
    one = a.ring.one_element
    if check_clean(one - a * b, d):
        raise ValueError(f"({d.idempotent}, {d.unit}) is not a strongly clean decomposition of 1-ab")
    # 1 - ab = e + u  <=>  ab = (1 - e) + (-u)
    for_ab = CleanDecomposition(one - d.idempotent, -d.unit)
    for_ba = strongly_clean_transfer(a, b, for_ab)
    out = CleanDecomposition(one - for_ba.idempotent, -for_ba.unit)
    problems = check_clean(one - b * a, out)
    if problems:
        raise _fail(f"decomposition invalid for 1-ba: {problems}", a=a, b=b,
                    g=out.idempotent, v=out.unit)
    return out


def pseudo_one_minus_transfer(a: Element, b: Element) -> TransferWitness | None:
    """Pseudo Drazin inverse of 1 - ba built from that of 1 - ab.

    None when 1 - ab has no pseudo Drazin inverse.
    """
    _same_ring(a, b)
    r = a.ring
    one = r.one_element
    alpha = one - a * b
    beta = one - b * a
    res = drazin(alpha, "pseudo")
    if res is None:
        return None
    alpha_pd, k = res.inverse, res.index
    e = one - alpha_pd * alpha
    u = one - alpha * e
    witness = dict(a=a, b=b, alpha=alpha, alpha_pD=alpha_pd, e=e, u=u)
    if not is_unit(u):
        raise _fail("u = 1 - alpha e is not a unit", **witness)
    f = b * e * inverse(u) * a
    beta_pd = (one - f) + b * alpha_pd * a
    witness.update(f=f, beta_pD=beta_pd)

    s = structure(r)
    if f * f != f:
        raise _fail("f is not idempotent", **witness)
    if not commutant_mask(beta, 2)[f.index]:
        raise _fail("f is not in comm^2(beta)", **witness)
    if not s.jacobson_mask[(beta**k * f).index]:
        raise _fail("beta^k f is not in J(R)", **witness)
    if not is_unit(beta + f):
        raise _fail("beta + f is not a unit", **witness)
    oracle = drazin(beta, "pseudo")
    if oracle is None or oracle.inverse != beta_pd:
        raise _fail("formula disagrees with the scanned pseudo Drazin inverse of 1-ba",
                    oracle=oracle.inverse if oracle else None, **witness)
    if oracle.spectral_idempotent != f:
        raise _fail("spectral idempotent of 1-ba is not b e u^-1 a", **witness)
    if oracle.index != k:
        raise _fail(f"index of 1-ba is {oracle.index}, expected {k}", **witness)
    return TransferWitness(
        formula_id="pseudo-one-minus",
        inputs={"a": str(a), "b": str(b), "alpha": str(alpha), "alpha_pD": str(alpha_pd), "index": k},
        outputs={"e": str(e), "u": str(u), "f": str(f), "beta": str(beta),
                 "beta_pD": str(beta_pd), "spectral_idempotent": str(f), "index": oracle.index},
    )


CORNER_PROPERTIES = ("strongly_clean", "strongly_pi_regular", "quasipolar", "pseudopolar")
_FULL_EQUIVALENCE = ("strongly_clean", "strongly_pi_regular")


@dataclass
class CornerReport:
    property: str
    e: str
    a: str
    p1: bool
    p2: bool
    p3: bool
    central: bool
    checked: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    converse_not_claimed: bool = False

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "property": self.property, "e": self.e, "a": self.a,
            "P1": self.p1, "P2": self.p2, "P3": self.p3, "central": self.central,
            "checked": self.checked, "failures": self.failures,
            "converse_not_claimed": self.converse_not_claimed,
        }


def corner_ring(r: FiniteRing, e: Element) -> FiniteRing:
    memo = r._memo.setdefault("corners", {})
    if e.index not in memo:
        memo[e.index] = build_corner(r, e)
    return memo[e.index]


def corner_equivalence(r: FiniteRing, e: Element, a: Element, prop: str,
                       assume_central: bool = False) -> CornerReport:
    """Compare ``prop`` for ae + 1 - e (P1), ea + 1 - e (P2) in R and eae in eRe (P3).

    ``assume_central`` checks P3 => P1 even when e is not central; the theorems do
    not claim that direction, so a failure there is a probe result, not a bug.
    """
    if prop not in CORNER_PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    if e.ring is not r or a.ring is not r:
        raise RingMismatch("e and a must belong to r")
    if e * e != e:
        raise NotIdempotent(f"{e} is not idempotent")
    one = r.one_element
    corner = corner_ring(r, e)
    p1 = has_property(a * e + one - e, prop)
    p2 = has_property(e * a + one - e, prop)
    p3 = has_property(from_parent(corner, e * a * e), prop)
    central = is_central(e)
    rep = CornerReport(prop, str(e), str(a), p1, p2, p3, central)

    def check(name: str, holds: bool):
        rep.checked.append(name)
        if not holds:
            rep.failures.append(name)

    check("P1<=>P2", p1 == p2)
    if prop in _FULL_EQUIVALENCE:
        check("P1<=>P3", p1 == p3)
    else:
        check("P1=>P3", (not p1) or p3)
        if central or assume_central:
            check("P3=>P1", (not p3) or p1)
        elif p3 and not p1:
            rep.converse_not_claimed = True
    return rep
