"""Exhaustive (or seeded-sample) theorem checks over concrete rings.

Each theorem id maps to one routine that walks its quantifier domain, applies
the theorem's precondition and checks the conclusion with the scanning oracles.
Cases whose precondition fails are counted as not applicable.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .inverses import (
    DRAZIN_VARIANTS,
    POLAR_TO_DRAZIN,
    POLAR_VARIANTS,
    UniquenessViolation,
    InvariantViolation,
    classify,
    decomposition_to_inverse,
    drazin,
    drazin_solutions,
    group_inverse_solutions,
    polar_decomposition,
    polar_decompositions_bruteforce,
    strongly_clean_decompositions,
)
from .ring import Element, FiniteRing, RingError
from .ringspec import build_ring
from .structure import commutant_mask, is_unit, structure
from .transfer import (
    TransferFailure,
    cline,
    corner_equivalence,
    jacobson_inverse,
    one_minus_clean_transfer,
    pseudo_one_minus_transfer,
    strongly_clean_transfer,
)

DEFAULT_REGISTRY = [f"zmod:{n}" for n in range(1, 13)] + [
    "prod:zmod:2,zmod:4",
    "tri:2:zmod:2",
    "tri:2:zmod:3",
    "mat:2:zmod:2",
    "corner:mat:2:zmod:2:[[1,0],[0,0]]",
]

PAIR_CAP = 256
CORNER_CAP = 64


class ConfigError(ValueError):
    pass


@dataclass
class VerificationReport:
    theorem_id: str
    ring: str
    mode: str = "exhaustive"
    cases_total: int = 0
    cases_checked: int = 0
    cases_not_applicable: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "theorem_id": self.theorem_id,
            "ring": self.ring,
            "mode": self.mode,
            "cases_total": self.cases_total,
            "cases_checked": self.cases_checked,
            "cases_not_applicable": self.cases_not_applicable,
            "failures": self.failures,
            "passed": self.passed,
        }
        if timings:
            d["wall_time"] = round(self.wall_time, 6)
        return d

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)})"
        return (f"{self.theorem_id:<24} {self.ring:<36} {status:<10} "
                f"total={self.cases_total} checked={self.cases_checked} "
                f"n/a={self.cases_not_applicable} time={self.wall_time:.2f}s")


# A case check returns True (checked), False (not applicable) or raises
# CaseFailure / TransferFailure / AssertionError with a witness.
class CaseFailure(AssertionError):
    def __init__(self, message: str, **witness):
        super().__init__(message)
        self.witness = {k: str(v) for k, v in witness.items()}


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    domain: str  # "elements", "pairs" or "corner"
    check: Callable[..., bool]


def _elements(r: FiniteRing) -> list[tuple[Element]]:
    return [(x,) for x in r.elements()]


def _pairs(r: FiniteRing) -> list[tuple[Element, Element]]:
    els = list(r.elements())
    return list(itertools.product(els, els))


def _corner_cases(r: FiniteRing) -> list[tuple[Element, Element]]:
    idem = sorted(structure(r).idempotents)
    return [(Element(r, e), a) for e in idem for a in r.elements()]


_DOMAINS = {"elements": _elements, "pairs": _pairs, "corner": _corner_cases}


def _check_jacobson(a: Element, b: Element) -> bool:
    one = a.ring.one_element
    x = jacobson_inverse(a, b)
    if x is None:
        if is_unit(one + b * a):
            raise CaseFailure("1+ba is a unit but 1+ab is not", a=a, b=b)
        return False
    target = one + b * a
    if not (x * target == one and target * x == one):
        raise CaseFailure("not a two-sided inverse", a=a, b=b, x=x)
    return True


def _make_cline_check(variant: str):
    def check(a: Element, b: Element) -> bool:
        if drazin(a * b, variant) is None:
            return False
        res = cline(a, b, variant)
        oracle = drazin(b * a, variant)
        if oracle is None or res.inverse != oracle.inverse:
            raise CaseFailure("Cline formula disagrees with scan", a=a, b=b, formula=res.inverse,
                              oracle=oracle.inverse if oracle else None)
        return True
    return check


def _check_clean_transfer(a: Element, b: Element) -> bool:
    decomps = strongly_clean_decompositions(a * b)
    if not decomps:
        return False
    for d in decomps:
        out = strongly_clean_transfer(a, b, d)
        if out not in strongly_clean_decompositions(b * a):
            raise CaseFailure("transferred decomposition not found by scan of ba", a=a, b=b,
                              e=d.idempotent, u=d.unit)
    return True


def _check_one_minus_clean(a: Element, b: Element) -> bool:
    one = a.ring.one_element
    decomps = strongly_clean_decompositions(one - a * b)
    if not decomps:
        if strongly_clean_decompositions(one - b * a):
            raise CaseFailure("1-ba strongly clean but 1-ab is not", a=a, b=b)
        return False
    for d in decomps:
        out = one_minus_clean_transfer(a, b, d)
        if out not in strongly_clean_decompositions(one - b * a):
            raise CaseFailure("transferred decomposition not found by scan of 1-ba", a=a, b=b,
                              e=d.idempotent, u=d.unit)
    return True


def _check_pseudo_one_minus(a: Element, b: Element) -> bool:
    one = a.ring.one_element
    w = pseudo_one_minus_transfer(a, b)
    if w is None:
        if drazin(one - b * a, "pseudo") is not None:
            raise CaseFailure("1-ba pseudo Drazin invertible but 1-ab is not", a=a, b=b)
        return False
    return True


def _make_corner_check(prop: str, assume_central: bool = False):
    def check(e: Element, a: Element) -> bool:
        rep = corner_equivalence(e.ring, e, a, prop, assume_central=assume_central)
        if not rep.ok:
            raise CaseFailure(f"corner implication failed: {rep.failures}", e=e, a=a,
                              P1=rep.p1, P2=rep.p2, P3=rep.p3)
        return True
    return check


def _make_decomp_check(polar: str):
    variant = POLAR_TO_DRAZIN[polar]
    flag = {"pi_regular": "strongly_pi_regular", "quasipolar": "quasipolar",
            "pseudopolar": "pseudopolar"}[polar]

    def check(a: Element) -> bool:
        has_inverse = drazin(a, variant) is not None
        constructed = polar_decomposition(a, polar) is not None
        scanned = bool(polar_decompositions_bruteforce(a, polar))
        defined = getattr(classify(a), flag)
        if not (has_inverse == constructed == scanned == defined):
            raise CaseFailure("decomposition existence disagrees with inverse existence", a=a,
                              inverse=has_inverse, constructed=constructed, scanned=scanned,
                              definition=defined)
        return True
    return check


def _check_s_sharp(a: Element) -> bool:
    any_case = False
    for polar in POLAR_VARIANTS:
        for d in polar_decompositions_bruteforce(a, polar):
            any_case = True
            res = decomposition_to_inverse(a, d)
            oracle = drazin(a, POLAR_TO_DRAZIN[polar])
            if res.inverse != oracle.inverse:
                raise CaseFailure("s-sharp differs from the inverse", a=a, s=d.regular_part)
    return any_case


def _check_uniqueness(a: Element) -> bool:
    counts = {v: len(drazin_solutions(a, v)) for v in DRAZIN_VARIANTS}
    counts["group"] = len(group_inverse_solutions(a))
    bad = {v: c for v, c in counts.items() if c > 1}
    if bad:
        raise CaseFailure("multiple solutions", a=a, **bad)
    return True


def _check_radical_chain(x: Element) -> bool:
    s = structure(x.ring)
    i = x.index
    if s.jacobson_mask[i] and not s.j_sharp_mask[i]:
        raise CaseFailure("J not inside J#", x=x)
    if s.j_sharp_mask[i] and not s.qnil_mask[i]:
        raise CaseFailure("J# not inside qnil", x=x)
    if s.nil_mask[i] and not s.qnil_mask[i]:
        raise CaseFailure("Nil not inside qnil", x=x)
    return True


def _check_koliha(a: Element) -> bool:
    p = classify(a)
    pairs = {
        "strongly_pi_regular/drazin": (p.strongly_pi_regular, p.drazin_invertible),
        "quasipolar/generalized": (p.quasipolar, p.generalized_drazin_invertible),
        "pseudopolar/pseudo": (p.pseudopolar, p.pseudo_drazin_invertible),
    }
    bad = {k: v for k, v in pairs.items() if v[0] != v[1]}
    if bad:
        raise CaseFailure("definition and inverse existence disagree", a=a, **bad)
    # group inverse lies in the double commutant
    g = group_inverse_solutions(a)
    if g and not commutant_mask(a, 2)[g[0]]:
        raise CaseFailure("group inverse outside comm^2(a)", a=a)
    return True


def _check_finite_coincidence(a: Element) -> bool:
    # only valid for finite rings: qnil = Nil and all Drazin variants coincide
    s = structure(a.ring)
    if s.qnil_mask[a.index] != s.nil_mask[a.index]:
        raise CaseFailure("qnil and Nil differ", a=a)
    results = {v: drazin(a, v) for v in DRAZIN_VARIANTS}
    inverses = {v: (r.inverse.index if r else None) for v, r in results.items()}
    if len(set(inverses.values())) != 1:
        raise CaseFailure("Drazin variants disagree", a=a, **inverses)
    return True


THEOREMS: dict[str, Theorem] = {t.theorem_id: t for t in [
    Theorem("JACOBSON_LEMMA", "pairs", _check_jacobson),
    Theorem("CLINE_D", "pairs", _make_cline_check("drazin")),
    Theorem("CLINE_GD", "pairs", _make_cline_check("generalized")),
    Theorem("CLINE_PD", "pairs", _make_cline_check("pseudo")),
    Theorem("STRONGLY_CLEAN_TRANSFER", "pairs", _check_clean_transfer),
    Theorem("ONE_MINUS_CLEAN", "pairs", _check_one_minus_clean),
    Theorem("PSEUDO_ONE_MINUS", "pairs", _check_pseudo_one_minus),
    Theorem("CORNER_CLEAN", "corner", _make_corner_check("strongly_clean")),
    Theorem("CORNER_PI_REGULAR", "corner", _make_corner_check("strongly_pi_regular")),
    Theorem("CORNER_QUASIPOLAR", "corner", _make_corner_check("quasipolar")),
    Theorem("CORNER_PSEUDOPOLAR", "corner", _make_corner_check("pseudopolar")),
    Theorem("DECOMP_EQUIV_1_1", "elements", _make_decomp_check("pi_regular")),
    Theorem("DECOMP_EQUIV_1_2", "elements", _make_decomp_check("quasipolar")),
    Theorem("DECOMP_EQUIV_1_3", "elements", _make_decomp_check("pseudopolar")),
    Theorem("LEMMA_S_SHARP", "elements", _check_s_sharp),
    Theorem("UNIQUENESS", "elements", _check_uniqueness),
    Theorem("RADICAL_CHAIN", "elements", _check_radical_chain),
    Theorem("KOLIHA_EQUIV", "elements", _check_koliha),
    Theorem("FINITE_COINCIDENCE", "elements", _check_finite_coincidence),
]}

# Deliberately weakened statements, for counterexample probes only.
WEAKENED: dict[str, Theorem] = {
    "CORNER_QUASIPOLAR_ANY_E": Theorem("CORNER_QUASIPOLAR_ANY_E", "corner",
                                       _make_corner_check("quasipolar", assume_central=True)),
    "CORNER_PSEUDOPOLAR_ANY_E": Theorem("CORNER_PSEUDOPOLAR_ANY_E", "corner",
                                        _make_corner_check("pseudopolar", assume_central=True)),
}

CONSISTENCY_IDS = ("RADICAL_CHAIN", "UNIQUENESS", "DECOMP_EQUIV_1_1", "DECOMP_EQUIV_1_2",
                   "DECOMP_EQUIV_1_3", "KOLIHA_EQUIV", "FINITE_COINCIDENCE")


def _lookup(theorem_id: str) -> Theorem:
    t = THEOREMS.get(theorem_id) or WEAKENED.get(theorem_id)
    if t is None:
        raise ConfigError(f"unknown theorem id {theorem_id!r}")
    return t


def _cap_for(t: Theorem) -> int:
    return CORNER_CAP if t.domain == "corner" else PAIR_CAP


def _as_ring(ring: str | FiniteRing) -> tuple[FiniteRing, str]:
    if isinstance(ring, FiniteRing):
        return ring, ring.provenance
    try:
        return build_ring(ring), ring
    except RingError as exc:
        raise ConfigError(str(exc)) from exc


def _run_cases(t: Theorem, cases: Iterable[tuple], rep: VerificationReport, budget: int | None = None) -> None:
    for case in cases:
        if budget is not None and rep.cases_total >= budget:
            break
        rep.cases_total += 1
        try:
            applicable = t.check(*case)
        except CaseFailure as exc:
            rep.failures.append({"case": [str(x) for x in case], "reason": str(exc), **exc.witness})
            rep.cases_checked += 1
            continue
        except (TransferFailure, UniquenessViolation, InvariantViolation) as exc:
            witness = getattr(exc, "witness", {})
            rep.failures.append({"case": [str(x) for x in case], "reason": str(exc), **witness})
            rep.cases_checked += 1
            continue
        if applicable:
            rep.cases_checked += 1
        else:
            rep.cases_not_applicable += 1


def run_theorem(theorem_id: str, ring: str | FiniteRing, mode: str = "exhaustive",
                sample: int | None = None, seed: int = 0, force: bool = False,
                pair_cap: int = PAIR_CAP) -> VerificationReport:
    """Check one theorem over one ring.

    ``mode`` is "exhaustive" or "sample"; sampling draws ``sample`` cases uniformly
    with replacement from a generator seeded by ``seed``.
    """
    t = _lookup(theorem_id)
    r, spec = _as_ring(ring)
    cap = CORNER_CAP if t.domain == "corner" else pair_cap
    if r.order > cap and not force:
        raise ConfigError(f"{theorem_id} on {spec}: order {r.order} exceeds cap {cap} (use force)")
    start = time.perf_counter()
    cases = _DOMAINS[t.domain](r)
    if mode == "sample":
        if sample is None or sample < 0:
            raise ConfigError("sample mode needs a non-negative sample size")
        rng = random.Random(seed)
        cases = [cases[rng.randrange(len(cases))] for _ in range(sample)]
        mode_label = f"sample(n={sample},seed={seed})"
    elif mode == "exhaustive":
        mode_label = "exhaustive"
    else:
        raise ConfigError(f"unknown mode {mode!r}")
    rep = VerificationReport(theorem_id, spec, mode_label)
    _run_cases(t, cases, rep)
    rep.wall_time = time.perf_counter() - start
    return rep


def run_all(rings: Iterable[str], theorem_ids: Iterable[str] | None = None,
            **kwargs) -> list[VerificationReport]:
    ids = list(theorem_ids or THEOREMS)
    return [run_theorem(tid, spec, **kwargs) for spec in rings for tid in ids]


@dataclass
class SearchResult:
    theorem_id: str
    exhausted: bool
    cases_run: int
    failure: dict | None = None
    ring: str | None = None

    def to_dict(self) -> dict:
        return {"theorem_id": self.theorem_id, "exhausted": self.exhausted,
                "cases_run": self.cases_run, "ring": self.ring, "failure": self.failure}


def search_counterexample(theorem_id: str, rings: Iterable[str], budget: int | None = None,
                          force: bool = False) -> SearchResult:
    """Run rings in order until the first failure or until ``budget`` cases are used."""
    t = _lookup(theorem_id)
    used = 0
    for spec in rings:
        if budget is not None and used >= budget:
            break
        r, spec = _as_ring(spec)
        if r.order > _cap_for(t) and not force:
            raise ConfigError(f"{theorem_id} on {spec}: order {r.order} exceeds cap")
        rep = VerificationReport(theorem_id, spec)
        remaining = None if budget is None else budget - used
        _run_cases(t, _iter_until_failure(t, r, rep), rep, budget=remaining)
        used += rep.cases_total
        if rep.failures:
            return SearchResult(theorem_id, False, used, rep.failures[0], spec)
    return SearchResult(theorem_id, True, used)


def _iter_until_failure(t: Theorem, r: FiniteRing, rep: VerificationReport) -> Iterator[tuple]:
    for case in _DOMAINS[t.domain](r):
        if rep.failures:
            return
        yield case


def consistency_suite(ring: str | FiniteRing) -> VerificationReport:
    """Radical chain, uniqueness, decomposition and definition equivalences, merged."""
    r, spec = _as_ring(ring)
    if r.order > PAIR_CAP:
        raise ConfigError(f"order {r.order} exceeds cap {PAIR_CAP}")
    merged = VerificationReport("CONSISTENCY", spec)
    start = time.perf_counter()
    for tid in CONSISTENCY_IDS:
        rep = run_theorem(tid, r)
        merged.cases_total += rep.cases_total
        merged.cases_checked += rep.cases_checked
        merged.cases_not_applicable += rep.cases_not_applicable
        merged.failures.extend({"theorem_id": tid, **f} for f in rep.failures)
    merged.wall_time = time.perf_counter() - start
    return merged


def reports_json(reports: list[VerificationReport], timings: bool = False) -> str:
    return json.dumps([r.to_dict(timings=timings) for r in reports], indent=2, sort_keys=True) + "\n"
