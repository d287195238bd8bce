"""Polynomial-exponential normal form.

An expression normalizes to a finite sum of terms c·m·exp(A) where c is an
exact complex rational, m a monomial in the variables and the symbols pi and
n, and A itself a normal form (or absent). ``i`` is folded into c with
i² = -1, like terms are collected and exp(A)·exp(B) merges into exp(A + B).
Negative powers are allowed only on terms free of variables.
"""

from fractions import Fraction
from typing import Optional

from latticeq.dsl.ast import BinOp, Call, Expr, Neg, Num, Pow, Sym, Var
from latticeq.dsl.parser import parse
from latticeq.errors import NormalizationError

CRat = tuple[Fraction, Fraction]
Mono = tuple[tuple[str, int], ...]
TermKey = tuple[Mono, Optional["Poly"]]

MAX_POWER = 64

_ZERO: CRat = (Fraction(0), Fraction(0))
_ONE: CRat = (Fraction(1), Fraction(0))


def rank(name: str) -> tuple[int, int]:
    """Ordering of names inside monomials: k, x, p1, p2, ..., pi, n."""
    if name == "k":
        return (0, 0)
    if name == "x":
        return (1, 0)
    if name == "pi":
        return (3, 0)
    if name == "n":
        return (4, 0)
    return (2, int(name[1:]))


def is_symbol(name: str) -> bool:
    return name in ("pi", "n")


def _cmul(a: CRat, b: CRat) -> CRat:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cinv(a: CRat) -> CRat:
    norm = a[0] * a[0] + a[1] * a[1]
    if norm == 0:
        raise NormalizationError("division by zero")
    return (a[0] / norm, -a[1] / norm)


def _mono_mul(a: Mono, b: Mono) -> Mono:
    powers = dict(a)
    for name, e in b:
        powers[name] = powers.get(name, 0) + e
    return tuple(sorted(((k, e) for k, e in powers.items() if e), key=lambda kv: rank(kv[0])))


def _term_order(key: TermKey) -> tuple:
    mono, arg = key
    var_part = tuple((rank(v), -e) for v, e in mono if not is_symbol(v))
    sym_part = tuple((rank(v), -e) for v, e in mono if is_symbol(v))
    degree = sum(e for v, e in mono if not is_symbol(v))
    return (arg is not None, degree, var_part, sym_part, arg.sort_key() if arg is not None else ())


class Poly:
    """Immutable normal form; equal polynomials compare and hash equal."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Optional[dict[TermKey, CRat]] = None) -> None:
        kept = {key: c for key, c in (terms or {}).items() if c != _ZERO}
        self.terms: dict[TermKey, CRat] = dict(sorted(kept.items(), key=lambda kv: _term_order(kv[0])))
        self._key = tuple(self.terms.items())

    @classmethod
    def const(cls, c: CRat) -> "Poly":
        return cls({((), None): c})

    @classmethod
    def name(cls, name: str) -> "Poly":
        return cls({(((name, 1),), None): _ONE})

    def sort_key(self) -> tuple:
        return tuple((_term_order(key), c) for key, c in self.terms.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[TermKey, CRat]]:
        return list(self.terms.items())

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            a = out.get(key, _ZERO)
            out[key] = (a[0] + c[0], a[1] + c[1])
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({key: (-c[0], -c[1]) for key, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[TermKey, CRat] = {}
        for (ma, ea), ca in self.terms.items():
            for (mb, eb), cb in other.terms.items():
                arg = _merge_exp(ea, eb)
                key = (_mono_mul(ma, mb), arg)
                prod = _cmul(ca, cb)
                acc = out.get(key, _ZERO)
                out[key] = (acc[0] + prod[0], acc[1] + prod[1])
        return Poly(out)

    def inverse(self) -> "Poly":
        if len(self.terms) != 1:
            raise NormalizationError("division only by nonzero literals or symbols")
        (mono, arg), c = next(iter(self.terms.items()))
        if any(not is_symbol(v) for v, _ in mono):
            raise NormalizationError("division only by nonzero literals or symbols")
        inv_mono = tuple((v, -e) for v, e in mono)
        return Poly({(inv_mono, -arg if arg is not None else None): _cinv(c)})

    def power(self, exponent: int) -> "Poly":
        if abs(exponent) > MAX_POWER:
            raise NormalizationError(f"exponent {exponent} exceeds {MAX_POWER} in normal form")
        base = self if exponent >= 0 else self.inverse()
        out = Poly.const(_ONE)
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def exp(self) -> "Poly":
        if self.is_zero():
            return Poly.const(_ONE)
        return Poly({((), self): _ONE})

    def constant(self) -> Optional[CRat]:
        """The value when the polynomial is a bare complex rational."""
        if not self.terms:
            return _ZERO
        if len(self.terms) == 1:
            (mono, arg), c = next(iter(self.terms.items()))
            if not mono and arg is None:
                return c
        return None


def _merge_exp(a: Optional[Poly], b: Optional[Poly]) -> Optional[Poly]:
    if a is None:
        return b
    if b is None:
        return a
    total = a + b
    return None if total.is_zero() else total


def to_poly(e: Expr) -> Poly:
    """Normal form of an expression tree."""
    if isinstance(e, Num):
        return Poly.const((e.value, Fraction(0)))
    if isinstance(e, Sym):
        if e.name == "i":
            return Poly.const((Fraction(0), Fraction(1)))
        return Poly.name(e.name)
    if isinstance(e, Var):
        return Poly.name(e.name)
    if isinstance(e, Neg):
        return -to_poly(e.operand)
    if isinstance(e, Pow):
        return to_poly(e.base).power(e.exponent)
    if isinstance(e, Call):
        return to_poly(e.arg).exp()
    left, right = to_poly(e.left), to_poly(e.right)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    return left * right.inverse()


# rendering


def _factor(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _render_term(key: TermKey, c: CRat) -> tuple[bool, str]:
    mono, arg = key
    numer: list[str] = []
    denom: list[str] = []
    re, im = c
    if re != 0 and im != 0:
        negative = False
        numer.append(f"({_complex_text(c)})")
        magnitude = None
    else:
        value = re if im == 0 else im
        negative = value < 0
        magnitude = abs(value)
        if magnitude.denominator != 1:
            denom.append(str(magnitude.denominator))
    rest: list[str] = []
    if im != 0 and re == 0:
        rest.append("i")
    ordered = sorted(mono, key=lambda kv: (0 if kv[0] == "pi" else 1, rank(kv[0])))
    for v, e in ordered:
        if e > 0:
            rest.append(_factor(v, e))
        else:
            denom.append(_factor(v, -e))
    if arg is not None:
        rest.append(f"exp({render(arg)})")
    if magnitude is not None and (magnitude.numerator != 1 or not rest):
        numer.append(str(magnitude.numerator))
    numer.extend(rest)
    return negative, "*".join(numer) + "".join("/" + d for d in denom)


def _complex_text(c: CRat) -> str:
    re_negative, re_body = _render_term(((), None), (c[0], Fraction(0)))
    im_negative, im_body = _render_term(((), None), (Fraction(0), c[1]))
    return ("-" if re_negative else "") + re_body + (" - " if im_negative else " + ") + im_body


def render(poly: Poly) -> str:
    """Canonical text of a normal form."""
    if poly.is_zero():
        return "0"
    pieces: list[str] = []
    for idx, (key, c) in enumerate(poly.items()):
        negative, body = _render_term(key, c)
        if idx == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def normalize(e: Expr) -> Expr:
    """The canonical tree: ``parse(render(to_poly(e)))``."""
    return parse(render(to_poly(e)))


__all__ = ["Poly", "normalize", "render", "to_poly"]
