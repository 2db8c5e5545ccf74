"""One test per acceptance criterion, each printing a single PASS/FAIL line."""
import pytest

from bestmoebius.verification import CHECKS, run_check

CRITERIA = [
    (1, "bma", "BMA contact and closed forms"),
    (2, "normalization", "coefficient normalization"),
    (3, "thm2.1", "trichotomy"),
    (4, "thm2.2", "convex / concave certification"),
    (5, "thm2.4", "duality"),
    (6, "curvature", "total curvature"),
    (7, "thm3.1", "interior locus"),
    (8, "thm3.2", "exterior locus"),
    (9, "thm3.3", "boundary profiles"),
    (10, "extremal", "extremal points"),
    (11, "thm3.6", "triangle balance"),
    (12, "similarity", "triangle similarity and constant C"),
    (13, "structure", "structural identities"),
    (14, "figure", "figure reproduction"),
]


def test_every_check_is_covered():
    assert sorted(c[1] for c in CRITERIA) == sorted(CHECKS)


@pytest.mark.parametrize("number,check_id,title", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, check_id, title, capsys):
    res = run_check(check_id)
    with capsys.disabled():
        print(f"\n[{number:2d}] {'PASS' if res.passed else 'FAIL'} {title}")
    detail = "\n".join(res.lines)
    assert res.passed, detail
