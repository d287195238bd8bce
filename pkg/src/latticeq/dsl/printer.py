"""Minimal-parenthesis printing of expression trees."""

from fractions import Fraction

from latticeq.dsl.ast import BinOp, Call, Expr, Neg, Num, Pow, Sym, Var
from latticeq.errors import NormalizationError


def number_text(value: Fraction) -> str:
    """Integers as digits, terminating fractions as decimals, others as (p/q)."""
    if value < 0:
        return f"(-{number_text(-value)})"
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"({value.numerator}/{value.denominator})"
    digits = max(twos, fives)
    whole, frac = divmod(value.numerator * 10**digits // value.denominator, 10**digits)
    return f"{whole}.{frac:0{digits}d}"


def _precedence(e: Expr) -> int:
    if isinstance(e, BinOp):
        return 1 if e.op in "+-" else 2
    if isinstance(e, Neg):
        return 3
    if isinstance(e, Pow):
        return 4
    return 5


def _wrap(e: Expr, minimum: int) -> str:
    text = print_expr(e)
    return text if _precedence(e) >= minimum else f"({text})"


def print_expr(e: Expr) -> str:
    """Text that parses back to exactly ``e``."""
    if isinstance(e, Num):
        return number_text(e.value)
    if isinstance(e, (Sym, Var)):
        return e.name
    if isinstance(e, Call):
        return f"{e.func}({print_expr(e.arg)})"
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, 3)
    if isinstance(e, Pow):
        exponent = str(e.exponent) if e.exponent >= 0 else f"(-{-e.exponent})"
        return f"{_wrap(e.base, 5)}^{exponent}"
    if e.op in "+-":
        return f"{_wrap(e.left, 1)} {e.op} {_wrap(e.right, 2)}"
    return f"{_wrap(e.left, 2)}{e.op}{_wrap(e.right, 3)}"


def print_canonical(e: Expr) -> str:
    """Canonical text of the normalized expression.

    Expressions outside the normal form (division by a variable, say) are
    printed as given.
    """
    from latticeq.dsl.normalize import normalize

    try:
        return print_expr(normalize(e))
    except NormalizationError:
        return print_expr(e)
