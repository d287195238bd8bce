"""Predicate expression language: parse, normalize, print, classify, evaluate."""

from latticeq.dsl.ast import BinOp, Call, Expr, Neg, Num, Pow, Sym, Var
from latticeq.dsl.classify import ClassifiedPredicate, classify
from latticeq.dsl.evaluate import ExprPredicate, evaluate
from latticeq.dsl.normalize import Poly, normalize, to_poly
from latticeq.dsl.parser import parse
from latticeq.dsl.printer import print_canonical, print_expr

__all__ = [
    "BinOp",
    "Call",
    "ClassifiedPredicate",
    "Expr",
    "ExprPredicate",
    "Neg",
    "Num",
    "Poly",
    "Pow",
    "Sym",
    "Var",
    "classify",
    "evaluate",
    "normalize",
    "parse",
    "print_canonical",
    "print_expr",
    "to_poly",
]
