import pytest

from congruence_workbench.backend import rational
from congruence_workbench.intexpr import ExpressionError, evaluate_int, evaluate_rational


def test_literals_and_signs():
    assert evaluate_int("42") == 42
    assert evaluate_int("-7") == -7
    assert evaluate_int("--7") == 7


def test_precedence():
    assert evaluate_int("2+3*4") == 14
    assert evaluate_int("(2+3)*4") == 20
    assert evaluate_int("2^3^2") == 512  # right-associative
    assert evaluate_int("-2^2") == -4


def test_rationals():
    assert evaluate_rational("1/3") == rational(1, 3)
    assert evaluate_rational("2/(13^13+1)") == rational(2, 13**13 + 1)
    assert evaluate_rational("(1/2+1/3)*6/5") == 1


def test_t3_residue_expression():
    assert evaluate_int("(13^12-1)/12") == (13**12 - 1) // 12


def test_non_integer_division_rejected_for_int_context():
    # 11*13^12 - 1 == 10 (mod 12), so this residue expression is not integral
    with pytest.raises(ExpressionError):
        evaluate_int("(11*13^12-1)/12")


def test_division_by_zero():
    with pytest.raises(ExpressionError):
        evaluate_rational("1/(2-2)")


def test_fractional_exponent_rejected():
    with pytest.raises(ExpressionError):
        evaluate_rational("2^(1/2)")


def test_negative_exponent_is_exact():
    assert evaluate_rational("2^-3") == rational(1, 8)


def test_malformed():
    for bad in ("", "1+", "(1", "1)", "1**2", "a+1", "1 2"):
        with pytest.raises(ExpressionError):
            evaluate_rational(bad)
