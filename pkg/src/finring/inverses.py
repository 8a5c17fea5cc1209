"""Generalized inverses and polar/clean decompositions by definition-level scans.

Every scan walks the whole carrier in ascending index order and keeps going
after a hit, so a second solution (which the theory rules out) is noticed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .ring import Element, FiniteRing
from .structure import commutant_mask, is_unit, structure

DRAZIN_VARIANTS = ("drazin", "pseudo", "generalized")
VARIANTS = ("group",) + DRAZIN_VARIANTS
POLAR_VARIANTS = ("pi_regular", "quasipolar", "pseudopolar")
POLAR_TO_DRAZIN = {"pi_regular": "drazin", "quasipolar": "generalized", "pseudopolar": "pseudo"}
DRAZIN_TO_POLAR = {v: k for k, v in POLAR_TO_DRAZIN.items()}


class UniquenessViolation(AssertionError):
    """A scan found two distinct solutions where the theory allows one."""


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class DrazinResult:
    variant: str
    inverse: Element
    index: int
    spectral_idempotent: Element

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "inverse": str(self.inverse),
            "index": self.index,
            "spectral_idempotent": str(self.spectral_idempotent),
        }


@dataclass(frozen=True)
class CleanDecomposition:
    idempotent: Element
    unit: Element

    def to_dict(self) -> dict:
        return {"idempotent": str(self.idempotent), "unit": str(self.unit)}


@dataclass(frozen=True)
class PolarDecomposition:
    regular_part: Element
    radical_part: Element
    variant: str

    def to_dict(self) -> dict:
        return {
            "regular_part": str(self.regular_part),
            "radical_part": str(self.radical_part),
            "variant": self.variant,
        }


def radical_mask(r: FiniteRing, variant: str) -> np.ndarray:
    """Nil(R), J#(R) or R^qnil, the set a²b - a must land in for ``variant``."""
    s = structure(r)
    if variant in ("drazin", "pi_regular"):
        return s.nil_mask
    if variant in ("pseudo", "pseudopolar"):
        return s.j_sharp_mask
    if variant in ("generalized", "quasipolar"):
        return s.qnil_mask
    raise ValueError(f"unknown variant {variant!r}")


def drazin_index(a: Element, b: Element) -> int:
    """Least k >= 0 with a^k = a^(k+1) b."""
    r = a.ring
    ak = r.one
    for k in range(r.order + 2):
        if ak == r.mul(r.mul(ak, a.index), b.index):
            return k
        ak = r.mul(ak, a.index)
    raise InvariantViolation(f"no index found for {a} with inverse {b}")


def _result(a: Element, b: int, variant: str) -> DrazinResult:
    r = a.ring
    b_el = Element(r, b)
    return DrazinResult(
        variant=variant,
        inverse=b_el,
        index=drazin_index(a, b_el),
        spectral_idempotent=Element(r, r.sub(r.one, r.mul(a.index, b))),
    )


def group_inverse_solutions(a: Element) -> list[int]:
    r, x = a.ring, a.index
    M = r.mul_table
    b = np.arange(r.order)
    ok = (M[x, b] == M[b, x]) & (M[x, M[b, b]] == b) & (M[M[x, x], b] == x)
    return [int(i) for i in np.flatnonzero(ok)]


def drazin_solutions(a: Element, variant: str, commutant_order: int = 2) -> list[int]:
    """Every b with ab² = b, b in comm^k(a) and a²b - a in the variant's radical set."""
    r, x = a.ring, a.index
    M = r.mul_table
    b = np.arange(r.order)
    rad = radical_mask(r, variant)
    ok = (M[x, M[b, b]] == b) & commutant_mask(a, commutant_order)
    ok &= rad[r.add_table[M[M[x, x], b], r.neg_table[x]]]
    return [int(i) for i in np.flatnonzero(ok)]


def _unique(a: Element, sols: list[int], variant: str) -> int | None:
    if len(sols) > 1:
        raise UniquenessViolation(
            f"{variant} inverse of {a} is not unique: {[a.ring.labels[s] for s in sols]}"
        )
    return sols[0] if sols else None


def group_inverse(a: Element) -> DrazinResult | None:
    b = _unique(a, group_inverse_solutions(a), "group")
    return None if b is None else _result(a, b, "group")


def drazin(a: Element, variant: str = "drazin") -> DrazinResult | None:
    """The (pseudo, generalized) Drazin inverse of ``a``, or None if there is none."""
    if variant == "group":
        return group_inverse(a)
    if variant not in DRAZIN_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    memo = a.ring._memo.setdefault(("drazin", variant), {})
    if a.index not in memo:
        b = _unique(a, drazin_solutions(a, variant), variant)
        memo[a.index] = None if b is None else _result(a, b, variant)
    return memo[a.index]


def satisfies_drazin(a: Element, b: Element, variant: str) -> bool:
    """Check b against the full definition of the ``variant`` inverse of a."""
    r = a.ring
    if variant == "group":
        return a * b == b * a and a * b * b == b and a * a * b == a
    return (
        a * b * b == b
        and bool(commutant_mask(a, 2)[b.index])
        and bool(radical_mask(r, variant)[(a * a * b - a).index])
    )


def strongly_clean_decompositions(a: Element) -> list[CleanDecomposition]:
    r = a.ring
    memo = r._memo.setdefault("clean", {})
    if a.index not in memo:
        s = structure(r)
        out = []
        for e in sorted(s.idempotents):
            if s.commutes[a.index, e] and s.unit_mask[r.sub(a.index, e)]:
                out.append(CleanDecomposition(Element(r, e), Element(r, r.sub(a.index, e))))
        memo[a.index] = out
    return list(memo[a.index])


def check_clean(a: Element, d: CleanDecomposition) -> list[str]:
    """Names of the strongly clean conditions that ``d`` violates for ``a``."""
    e, u = d.idempotent, d.unit
    problems = []
    if e * e != e:
        problems.append("idempotent")
    if e * a != a * e:
        problems.append("commutes")
    if a != e + u:
        problems.append("sum")
    if not is_unit(u):
        problems.append("unit")
    return problems


def check_polar(a: Element, d: PolarDecomposition) -> list[str]:
    """Names of the polar-decomposition conditions that ``d`` violates for ``a``."""
    s, q = d.regular_part, d.radical_part
    problems = []
    if a != s + q:
        problems.append("sum")
    if s * q != a.ring.zero_element or q * s != a.ring.zero_element:
        problems.append("orthogonal")
    if not group_inverse_solutions(s):
        problems.append("strongly_regular")
    if not radical_mask(a.ring, d.variant)[q.index]:
        problems.append("radical")
    if d.variant != "pi_regular" and not commutant_mask(a, 2)[s.index]:
        problems.append("double_commutant")
    return problems


def polar_decomposition(a: Element, variant: str = "pi_regular") -> PolarDecomposition | None:
    """s + q decomposition of ``a`` built from its Drazin-type inverse b as s = a²b."""
    res = drazin(a, POLAR_TO_DRAZIN[variant])
    if res is None:
        return None
    s = a * a * res.inverse
    d = PolarDecomposition(s, a - s, variant)
    problems = check_polar(a, d)
    if problems:
        raise InvariantViolation(f"polar decomposition of {a} violates {problems}")
    return d


def polar_decompositions_bruteforce(a: Element, variant: str) -> list[PolarDecomposition]:
    """All (s, a - s) meeting the decomposition definition, found by scanning s over R."""
    r = a.ring
    M = r.mul_table
    s = np.arange(r.order)
    q = r.add_table[a.index, r.neg_table[s]]
    ok = (M[s, q] == r.zero) & (M[q, s] == r.zero) & radical_mask(r, variant)[q]
    if variant != "pi_regular":
        ok &= commutant_mask(a, 2)
    out = []
    for si in np.flatnonzero(ok):
        s_el = Element(r, int(si))
        if group_inverse_solutions(s_el):
            out.append(PolarDecomposition(s_el, a - s_el, variant))
    return out


def decomposition_to_inverse(a: Element, d: PolarDecomposition) -> DrazinResult:
    """The Drazin-type inverse of ``a`` read off a polar decomposition as the group inverse of s."""
    problems = check_polar(a, d)
    if problems:
        raise InvariantViolation(f"decomposition {d.to_dict()} of {a} violates {problems}")
    g = group_inverse(d.regular_part)
    variant = POLAR_TO_DRAZIN[d.variant]
    result = _result(a, g.inverse.index, variant)
    oracle = drazin(a, variant)
    if oracle is None or oracle.inverse != result.inverse:
        raise InvariantViolation(f"s-sharp {g.inverse} disagrees with scanned {variant} inverse of {a}")
    return result


def is_strongly_pi_regular(a: Element) -> bool:
    """a^n in a^(n+1)R ∩ Ra^(n+1) for some n >= 1, each membership by enumeration."""
    r = a.ring
    M = r.mul_table
    an = a.index
    for _ in range(r.order + 1):
        an1 = int(M[an, a.index])
        if (M[an1, :] == an).any() and (M[:, an1] == an).any():
            return True
        an = an1
    return False


def _has_spectral_idempotent(a: Element, target: np.ndarray) -> bool:
    r = a.ring
    s = structure(r)
    comm2 = commutant_mask(a, 2)
    for p in sorted(s.idempotents):
        if comm2[p] and s.unit_mask[r.add(a.index, p)] and target[r.mul(a.index, p)]:
            return True
    return False


def is_quasipolar(a: Element) -> bool:
    return _has_spectral_idempotent(a, structure(a.ring).qnil_mask)


def is_pseudopolar(a: Element) -> bool:
    return _has_spectral_idempotent(a, structure(a.ring).j_sharp_mask)


def is_strongly_clean(a: Element) -> bool:
    return bool(strongly_clean_decompositions(a))


PROPERTIES = {
    "strongly_clean": is_strongly_clean,
    "strongly_pi_regular": is_strongly_pi_regular,
    "quasipolar": is_quasipolar,
    "pseudopolar": is_pseudopolar,
}


def has_property(a: Element, prop: str) -> bool:
    memo = a.ring._memo.setdefault(("property", prop), {})
    if a.index not in memo:
        memo[a.index] = PROPERTIES[prop](a)
    return memo[a.index]


@dataclass(frozen=True)
class Profile:
    unit: bool
    idempotent: bool
    nilpotent: bool
    in_jacobson: bool
    in_j_sharp: bool
    quasinilpotent: bool
    group_invertible: bool
    drazin_invertible: bool
    pseudo_drazin_invertible: bool
    generalized_drazin_invertible: bool
    strongly_clean: bool
    strongly_pi_regular: bool
    quasipolar: bool
    pseudopolar: bool

    def to_dict(self) -> dict:
        return asdict(self)


def classify(a: Element) -> Profile:
    """Every property flag of ``a``, each one evaluated from its own definition."""
    s = structure(a.ring)
    i = a.index
    return Profile(
        unit=bool(s.unit_mask[i]),
        idempotent=bool(s.idempotent_mask[i]),
        nilpotent=bool(s.nil_mask[i]),
        in_jacobson=bool(s.jacobson_mask[i]),
        in_j_sharp=bool(s.j_sharp_mask[i]),
        quasinilpotent=bool(s.qnil_mask[i]),
        group_invertible=bool(group_inverse_solutions(a)),
        drazin_invertible=bool(drazin_solutions(a, "drazin")),
        pseudo_drazin_invertible=bool(drazin_solutions(a, "pseudo")),
        generalized_drazin_invertible=bool(drazin_solutions(a, "generalized")),
        strongly_clean=is_strongly_clean(a),
        strongly_pi_regular=is_strongly_pi_regular(a),
        quasipolar=is_quasipolar(a),
        pseudopolar=is_pseudopolar(a),
    )
