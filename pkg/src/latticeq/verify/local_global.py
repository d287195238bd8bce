"""Local quantifier against the global one for Gaussian predicates."""

import logging
import math
import statistics
from typing import Any, Sequence

from latticeq.core.forms import dense_domain_membership, single_out_variable
from latticeq.core.predicates import GaussianPredicate
from latticeq.core.universe import FiniteUniverse
from latticeq.errors import PreconditionError
from latticeq.quantifier.quantifiers import global_quantify, local_quantify
from latticeq.schemas.report import VerificationReport, complex_pair

logger = logging.getLogger(__name__)

# windows narrower than this are reported but not held to the tail bound
CHECK_FROM_M = 5


def local_global_check(
    pred: GaussianPredicate,
    params: Sequence[int],
    u: FiniteUniverse,
    c_tail: float = 3.0,
) -> VerificationReport:
    """Tail gaps g(m) = |sqrt(2π)·E^glob - E^(-m,m)| against c_tail/(a·m).

    E^glob carries the 1/sqrt(n) normalization and the windowed quantifier
    sqrt(2π/n), hence the sqrt(2π) between them.
    """
    params = tuple(int(p) for p in params)
    a, b, _ = single_out_variable(pred.form, pred.var)
    if a <= 0:
        raise PreconditionError(f"Local = global needs a > 0, got a={a}")
    if b.arity and not dense_domain_membership(params, a, b):
        raise PreconditionError(
            f"p={params} lies outside the d-dense set of a={a}, b={tuple(str(c) for c in b.coeffs)}"
        )
    glob = global_quantify(pred, u, params)
    target = math.sqrt(2 * math.pi) * glob.complex_value
    sequence = local_quantify(pred, u, params, mode="sequence")
    assert isinstance(sequence, list)

    rows: list[dict[str, Any]] = []
    scaled: list[float] = []
    for m, result in enumerate(sequence, start=1):
        gap = abs(target - result.complex_value)
        bound = c_tail / (float(a) * m)
        checked = m >= CHECK_FROM_M
        rows.append(
            {
                "m": m,
                "value": complex_pair(result.complex_value),
                "tail_gap": gap,
                "bound": bound,
                "checked": checked,
                "pass": gap <= bound or not checked,
            }
        )
        if checked:
            scaled.append(gap * m)
    median_scaled = statistics.median(scaled) if scaled else 0.0
    logger.info(
        "Local=global a=%s n=%d: m_max=%d, median g(m)*m=%.4g", a, u.n, len(sequence), median_scaled
    )
    return VerificationReport(
        kind="local-global",
        params={
            "a": str(a),
            "p": list(params),
            "n": u.n,
            "h_n": u.h_n,
            "m_max": len(sequence),
            "global": complex_pair(glob.complex_value),
            "median_gap_times_m": median_scaled,
            "c_tail": c_tail,
        },
        rows=rows,
        passed=all(r["pass"] for r in rows),
        tolerances={"c_tail": c_tail},
    )
