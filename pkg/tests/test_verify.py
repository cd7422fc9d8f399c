from fractions import Fraction

from matroidlimit.graph import normalized_rank
from matroidlimit.verify import EXIT_FAIL, EXIT_PASS, EXIT_SKIPPED, verify_suite


def test_suite_passes():
    res = verify_suite()
    assert res.exit_code == EXIT_PASS, res.table()


def test_mutated_rank_is_caught():
    res = verify_suite(10**4, rank_fn=lambda g, f: normalized_rank(g, f) + Fraction(1, 7))
    assert res.exit_code == EXIT_FAIL
    failed = {c.name for c in res.checks if c.status == "fail"}
    assert {"rank_identity", "rank_lattice"} <= failed


def test_zero_budget_skips_everything():
    res = verify_suite(0)
    assert res.exit_code == EXIT_SKIPPED
    assert "SKIP" in res.table()
