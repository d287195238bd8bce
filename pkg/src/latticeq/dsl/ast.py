"""Expression tree nodes. Nodes are immutable and compare structurally."""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

SYMBOLS = ("pi", "i", "n")
FUNCTIONS = ("exp",)

_PARAM = re.compile(r"p[1-9][0-9]*")


def is_variable(name: str) -> bool:
    return name in ("k", "x") or _PARAM.fullmatch(name) is not None


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


Expr = Union[Num, Sym, Var, Neg, BinOp, Pow, Call]


def walk(e: Expr) -> Iterator[Expr]:
    """Pre-order traversal."""
    yield e
    if isinstance(e, Neg):
        yield from walk(e.operand)
    elif isinstance(e, BinOp):
        yield from walk(e.left)
        yield from walk(e.right)
    elif isinstance(e, Pow):
        yield from walk(e.base)
    elif isinstance(e, Call):
        yield from walk(e.arg)


def variables(e: Expr) -> set[str]:
    return {node.name for node in walk(e) if isinstance(node, Var)}


def parameter_count(e: Expr) -> int:
    """Highest j among the parameter variables p_j (0 when there are none)."""
    indices = [int(name[1:]) for name in variables(e) if name.startswith("p")]
    return max(indices, default=0)
