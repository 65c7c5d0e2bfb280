"""Closed-form vs oracle agreement checks with saturation flags.

Each check compares a structural prediction (centralizer slice, filtration
slice, ideal exponent, nilpotent degree) against the brute-force value on a
box, and reports pass/fail plus whether the box was saturated for that
computation.  Unsaturated ideal boxes make a check inconclusive rather than
failed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .centralizer import ndeg, principal_basis
from .dixmier import ideal_I
from .gwa import GradedElement, HomogeneousElement, from_v_term
from .oracle import (
    Box,
    kernel_power,
    oracle_ideal,
    saturation_check,
    spans_equal,
)
from .polynomials import Poly

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class VerificationCheck:
    claim: str
    closed_form: str
    oracle: str
    box: tuple[int, int]
    saturated: bool
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "box": list(self.box),
            "saturated": self.saturated,
            "verdict": self.verdict,
        }


def closed_form_kernel(u: HomogeneousElement, k: int, box: Box) -> list[GradedElement]:
    """The predicted slice N(u, k, A1) meet box.

    Zero grading (non-scalar u in K[H]) gives the K[H] slice for every k;
    otherwise the slice is spanned by the principal-basis elements of
    nilpotent degree at most k.
    """
    if u.is_scalar:
        raise ValueError("scalar elements are excluded")
    if u.n == 0:
        return [from_v_term(Poly.monomial(e), 0) for e in range(box.hdegree_bound + 1)]
    basis = principal_basis(u, (box.grading_bound, box.hdegree_bound))
    return [el for el, nd in basis if nd <= k]


def _kernel_checks(u: HomogeneousElement, label: str, box: Box, k_max: int):
    for k in range(k_max + 1):
        closed = closed_form_kernel(u, k, box)
        oracle = kernel_power(u, k, box)
        agree = spans_equal(closed, oracle, box)
        saturated = saturation_check(u, k, box)
        name = "C(u,A1)" if k == 0 else f"N(u,{k},A1)"
        yield VerificationCheck(
            claim=f"{name} slice of {label}",
            closed_form=f"dim {len(closed)}",
            oracle=f"dim {len(oracle)}",
            box=(box.grading_bound, box.hdegree_bound),
            saturated=saturated,
            verdict=PASS if agree else FAIL,
        )


def _ideal_checks(u: HomogeneousElement, label: str, box: Box, k_max: int):
    for k in range(1, k_max + 1):
        closed = ideal_I(u, k).generator_exponent
        result = oracle_ideal(u, k, box)
        if not result.saturated:
            verdict = INCONCLUSIVE
        else:
            verdict = PASS if result.exponent == closed else FAIL
        yield VerificationCheck(
            claim=f"ideal I_{k} of {label}",
            closed_form=f"u^{closed}",
            oracle="(0)" if result.generator is None else f"u^{result.exponent}"
            if result.exponent is not None
            else str(result.generator),
            box=(box.grading_bound, box.hdegree_bound),
            saturated=result.saturated,
            verdict=verdict,
        )


def _ndeg_check(u: HomogeneousElement, label: str, box: Box):
    spot_box = (min(box.grading_bound, 4), min(box.hdegree_bound, 6))
    basis = principal_basis(u, spot_box)
    mismatches = 0
    for el, predicted in basis:
        if ndeg(el, u, max_iterations=predicted + 4) != predicted:
            mismatches += 1
    return VerificationCheck(
        claim=f"principal-basis ndeg of {label}",
        closed_form=f"{len(basis)} predictions",
        oracle=f"{mismatches} mismatches",
        box=spot_box,
        saturated=True,
        verdict=PASS if mismatches == 0 else FAIL,
    )


def verify_element(
    u: HomogeneousElement, label: str, box: Box, k_max: int
) -> list[VerificationCheck]:
    """Full agreement suite for one homogeneous non-scalar element of A1."""
    checks = list(_kernel_checks(u, label, box, k_max))
    if u.n != 0:
        checks.append(_ndeg_check(u, label, box))
    if u.n == 1 and u.degree >= 1:
        checks.extend(_ideal_checks(u, label, box, k_max))
    return checks


def worst_verdict(checks) -> str:
    verdicts = {c.verdict for c in checks}
    if FAIL in verdicts:
        return FAIL
    if INCONCLUSIVE in verdicts:
        return INCONCLUSIVE
    return PASS
