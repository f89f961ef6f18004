"""Acceptance gate: every verification criterion must pass exactly.

Run with -s to see one PASS/FAIL line per criterion; the fiber criterion
dominates the runtime (a couple of minutes of exact linear algebra).
"""

import pytest

from veronese_jets.acceptance import CRITERIA


@pytest.mark.parametrize(
    "name,fn", CRITERIA, ids=[name for name, _ in CRITERIA]
)
def test_acceptance_criterion(name, fn):
    ok, detail = fn()
    print("%s %s: %s" % ("PASS" if ok else "FAIL", name, detail))
    assert ok, "%s: %s" % (name, detail)


def test_all_criteria_present():
    names = [name for name, _ in CRITERIA]
    assert names == [
        "reduced_quotient_characters",
        "relation_kernel_membership",
        "fiber_dimensions_constant",
        "closure_matches_character",
        "supernomial_specialization",
        "hilbert_matches_character",
        "fusion_matches_character",
        "symmetric_identities",
        "derivation_laws",
    ]
    assert len(names) == len(set(names)) == 9
