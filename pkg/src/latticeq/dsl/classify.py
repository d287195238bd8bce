"""Classification of expressions into Gaussian, perturbed-Gaussian or sampled."""

import logging
from fractions import Fraction
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field

from latticeq.core.forms import QuadraticForm
from latticeq.core.predicates import GaussianPredicate, PerturbedGaussianPredicate
from latticeq.core.universe import Interval
from latticeq.dsl.ast import Expr
from latticeq.dsl.evaluate import ExprPredicate
from latticeq.dsl.normalize import Mono, Poly, is_symbol, to_poly
from latticeq.errors import NormalizationError

logger = logging.getLogger(__name__)

Tag = Literal["gaussian", "perturbed_gaussian", "sampled"]

_SCAFFOLD = (("pi", 1), ("n", -1))


class ClassifiedPredicate(BaseModel):
    tag: Tag = Field(..., description="Shape recognized in the expression")
    source: Any = Field(..., description="The parsed expression")
    eta: complex = Field(default=1.0 + 0j, description="Amplitude outside exp (Gaussian)")
    form: Optional[QuadraticForm] = Field(default=None, description="Q in exp(-pi*i*Q/n)")
    H: Optional[int] = Field(default=None, description="Perturbed Gaussian H")
    L: Optional[int] = Field(default=None, description="Perturbed Gaussian L")

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    def predicate(
        self, domain: Optional[Interval] = None
    ) -> Union[GaussianPredicate, PerturbedGaussianPredicate, ExprPredicate]:
        if self.tag == "gaussian":
            assert self.form is not None
            return GaussianPredicate(eta=self.eta, form=self.form)
        if self.tag == "perturbed_gaussian":
            assert self.H is not None
            return PerturbedGaussianPredicate(H=self.H, L=self.L)
        return ExprPredicate(expr=self.source, domain=domain)

    def describe(self) -> dict[str, Any]:
        out: dict[str, Any] = {"tag": self.tag}
        if self.tag == "gaussian":
            assert self.form is not None
            out["eta"] = [self.eta.real, self.eta.imag]
            out["form"] = self.form.to_json()
            out["positive_definite"] = self.form.positive_definite
        elif self.tag == "perturbed_gaussian":
            out["H"] = self.H
            out["L"] = self.L
        return out


def _phase_terms(arg: Poly) -> Optional[dict[Mono, Fraction]]:
    """Q's monomials when ``arg`` reads -pi*i*Q/n with rational Q, else None."""
    out: dict[Mono, Fraction] = {}
    for (mono, nested), c in arg.items():
        if nested is not None or c[0] != 0:
            return None
        symbols = tuple((v, e) for v, e in mono if is_symbol(v))
        if symbols != _SCAFFOLD:
            return None
        out[tuple((v, e) for v, e in mono if not is_symbol(v))] = -c[1]
    return out


def _variable_index(name: str) -> Optional[int]:
    if name == "k":
        return 0
    if name.startswith("p"):
        return int(name[1:])
    return None


def _gaussian_form(q: dict[Mono, Fraction]) -> Optional[QuadraticForm]:
    terms: dict[tuple[int, int], Fraction] = {}
    for mono, c in q.items():
        indices: list[int] = []
        for v, e in mono:
            idx = _variable_index(v)
            if idx is None:
                return None
            indices.extend([idx] * e)
        if len(indices) != 2:
            return None
        i, j = sorted(indices)
        terms[(i, j)] = c
    m = 1 + max(j for _, j in terms)
    form = QuadraticForm.from_terms(m, terms)
    if form.is_positive_definite():
        form = QuadraticForm.from_terms(m, terms, positive_definite=True)
    return form


def _perturbed(q: dict[Mono, Fraction]) -> Optional[tuple[int, int]]:
    quadratic = q.get((("k", 2),))
    quartic = q.get((("k", 4),))
    if len(q) != 2 or quadratic is None or quartic is None:
        return None
    if quadratic.denominator != 1 or quadratic <= 0 or quartic <= 0:
        return None
    L = quadratic / quartic
    if L.denominator != 1:
        return None
    return int(quadratic), int(L)


def classify(e: Expr) -> ClassifiedPredicate:
    """Normalize and match the Gaussian and perturbed-Gaussian shapes."""
    sampled = ClassifiedPredicate(tag="sampled", source=e)
    try:
        poly = to_poly(e)
    except NormalizationError as exc:
        logger.debug("Expression kept as sampled: %s", exc)
        return sampled
    items = poly.items()
    if len(items) != 1:
        return sampled
    (mono, arg), eta = items[0]
    if mono or arg is None:
        return sampled
    q = _phase_terms(arg)
    if q is None:
        return sampled
    form = _gaussian_form(q)
    if form is not None:
        return ClassifiedPredicate(
            tag="gaussian", source=e, eta=complex(float(eta[0]), float(eta[1])), form=form
        )
    if eta == (1, 0):
        hl = _perturbed(q)
        if hl is not None:
            return ClassifiedPredicate(tag="perturbed_gaussian", source=e, H=hl[0], L=hl[1])
    return sampled
