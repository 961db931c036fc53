"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import pytest

from gft import acceptance

CHECKS = [
    acceptance.check_table1,
    acceptance.check_named_radii,
    acceptance.check_sharpness,
    acceptance.check_examples,
    acceptance.check_roth,
    acceptance.check_operator_identities,
    acceptance.check_cs_equivalence,
    acceptance.check_monotone_and_conjecture,
]


@pytest.mark.parametrize("check", CHECKS, ids=lambda c: c.__name__.removeprefix("check_"))
def test_criterion(check):
    result = check()
    print(result.line())
    for label, ok, measured in result.items:
        print(f"    {'ok ' if ok else 'BAD'} {label}: {measured}")
    assert result.passed, result.line()
