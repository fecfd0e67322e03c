"""Graded decompositions of fusion products read off the S-polytopes.

The multiplicity of V(nu) in degree r of V(lam)*V(mu) is the number of
lattice points s with ``wt(s) = lam + mu - nu`` and ``deg(s) = r``.
"""
import sys
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Tuple

try:
    from .errors import HypothesisViolation, InvariantViolation
    from .fusion_polytope import degree, lattice_points_S, require_g2_admissible, weight_statistic
    from .logger import get_logger, pair_context
    from .lr_oracle import klimyk_multiplicities
    from .root_system import (
        TypeLike,
        Weight,
        coroot_pairing,
        lie_type,
        require_dominant,
        summand_order_key,
        weyl_dim,
    )
except ImportError:
    from errors import HypothesisViolation, InvariantViolation
    from fusion_polytope import degree, lattice_points_S, require_g2_admissible, weight_statistic
    from logger import get_logger, pair_context
    from lr_oracle import klimyk_multiplicities
    from root_system import (
        TypeLike,
        Weight,
        coroot_pairing,
        lie_type,
        require_dominant,
        summand_order_key,
        weyl_dim,
    )

try:
    from schemas.fusion_models import DecompositionEntry, GradedDecomposition, SchurReport, SchurRow
except ImportError:
    sys.path.append(str(Path(__file__).resolve().parents[2]))
    from schemas.fusion_models import DecompositionEntry, GradedDecomposition, SchurReport, SchurRow

logger = get_logger(__name__)


@dataclass(frozen=True)
class QPolynomial:
    """Non-negative integer polynomial in q; ``coeffs[r]`` is the coefficient of q^r."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if any(c < 0 for c in coeffs):
            raise InvariantViolation(f"negative coefficient in graded multiplicity {coeffs}")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def coefficient(self, r: int) -> int:
        return self.coeffs[r] if 0 <= r < len(self.coeffs) else 0

    def dominated_by(self, other: "QPolynomial") -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coefficient(r) <= other.coefficient(r) for r in range(n))

    def __str__(self) -> str:
        terms = []
        for r, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if r == 0:
                terms.append(str(c))
            else:
                power = "q" if r == 1 else f"q^{r}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms) or "0"


ONE = QPolynomial((1,))


# --- Graded decomposition ---

@lru_cache(maxsize=4096)
def _graded(tag: str, lam: Weight, mu: Weight) -> Tuple[Tuple[Weight, QPolynomial], ...]:
    lt = lie_type(tag)
    top = lam + mu
    counts: Dict[Weight, List[int]] = {}
    for s in lattice_points_S(lt, lam, mu):
        nu = top - weight_statistic(lt, s)
        if not nu.is_dominant:
            raise InvariantViolation(f"{tag}: point {s} of S{lam}{mu} gives nondominant summand {nu}")
        r = degree(s)
        poly = counts.setdefault(nu, [])
        if len(poly) <= r:
            poly.extend([0] * (r + 1 - len(poly)))
        poly[r] += 1

    entries = {nu: QPolynomial(tuple(poly)) for nu, poly in counts.items()}
    if entries.get(top) != ONE:
        raise InvariantViolation(f"{tag}: Cartan component {top} of {lam} x {mu} is {entries.get(top)}, expected 1")
    if any(not poly for poly in entries.values()):
        raise InvariantViolation(f"{tag}: empty graded multiplicity in {lam} x {mu}")
    logger.debug(
        "Graded decomposition assembled",
        extra=pair_context(tag, lam, mu, summands=len(entries)),
    )
    return tuple(sorted(entries.items(), key=lambda item: summand_order_key(lt, top, item[0])))


def graded_multiplicities(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> Dict[Weight, QPolynomial]:
    """Map nu -> graded multiplicity, Cartan component first."""
    lt = lie_type(lt)
    lam, mu = require_dominant("graded_decompose", lam=lam, mu=mu)
    if lt.tag == "G2":
        require_g2_admissible(lam, mu)
    return dict(_graded(lt.tag, lam, mu))


def graded_decompose(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> GradedDecomposition:
    lt = lie_type(lt)
    lam, mu = require_dominant("graded_decompose", lam=lam, mu=mu)
    entries = [
        DecompositionEntry(nu=tuple(nu), poly=list(poly.coeffs))
        for nu, poly in graded_multiplicities(lt, lam, mu).items()
    ]
    return GradedDecomposition(type=lt.tag, lam=tuple(lam), mu=tuple(mu), entries=entries)


def as_polynomials(d: GradedDecomposition) -> Dict[Weight, QPolynomial]:
    return {Weight(*e.nu): QPolynomial(tuple(e.poly)) for e in d.entries}


def at_q_equals_one(d: GradedDecomposition) -> Dict[Weight, int]:
    return {Weight(*e.nu): sum(e.poly) for e in d.entries}


def dimension_check(d: GradedDecomposition) -> bool:
    """Sum of mult(nu) * dim V(nu) against dim V(lam) * dim V(mu)."""
    lt = lie_type(d.lie_type)
    total = sum(m * weyl_dim(lt, nu) for nu, m in at_q_equals_one(d).items())
    return total == weyl_dim(lt, d.lam) * weyl_dim(lt, d.mu)


# --- Schur positivity ---

def check_schur_hypothesis(
    lt: TypeLike,
    lambda1: Iterable[int],
    lambda2: Iterable[int],
    mu1: Iterable[int],
    mu2: Iterable[int],
) -> Tuple[Weight, Weight, Weight, Weight]:
    """Validates the hypotheses of the positivity comparison and returns the coerced weights."""
    lt = lie_type(lt)
    l1, l2, u1, u2 = require_dominant("schur_positivity_check", lambda1=lambda1, lambda2=lambda2, mu1=mu1, mu2=mu2)
    if l1 + l2 != u1 + u2:
        raise HypothesisViolation(f"schur: lambda1+lambda2={l1 + l2} differs from mu1+mu2={u1 + u2}")
    for alpha in lt.positive_roots:
        left = min(coroot_pairing(lt, l1, alpha), coroot_pairing(lt, l2, alpha))
        right = min(coroot_pairing(lt, u1, alpha), coroot_pairing(lt, u2, alpha))
        if left > right:
            raise HypothesisViolation(
                f"schur: min{{lambda1(h_a), lambda2(h_a)}}={left} exceeds min{{mu1(h_a), mu2(h_a)}}={right} "
                f"at positive root a={tuple(alpha)}"
            )
    if lt.tag == "G2" and (l2.w2 != 0 or u2.w2 != 0):
        raise HypothesisViolation(
            f"schur: G2 requires lambda2 and mu2 to be multiples of omega_1; got lambda2={l2}, mu2={u2}"
        )
    return l1, l2, u1, u2


def graded_dominates(lt: TypeLike, l1: Weight, l2: Weight, u1: Weight, u2: Weight) -> bool:
    """Coefficientwise comparison of the two graded decompositions; exploratory only."""
    left = graded_multiplicities(lt, l1, l2)
    right = graded_multiplicities(lt, u1, u2)
    return all(poly.dominated_by(right.get(nu, QPolynomial())) for nu, poly in left.items())


def schur_compare(
    lt: TypeLike,
    lambda1: Iterable[int],
    lambda2: Iterable[int],
    mu1: Iterable[int],
    mu2: Iterable[int],
    graded: bool = True,
) -> SchurReport:
    lt = lie_type(lt)
    l1, l2, u1, u2 = check_schur_hypothesis(lt, lambda1, lambda2, mu1, mu2)
    left = klimyk_multiplicities(lt, l1, l2)
    right = klimyk_multiplicities(lt, u1, u2)
    top = l1 + l2
    support = sorted(set(left) | set(right), key=lambda nu: summand_order_key(lt, top, nu))
    rows = [SchurRow(nu=tuple(nu), left=left.get(nu, 0), right=right.get(nu, 0)) for nu in support]
    return SchurReport(
        type=lt.tag,
        lambda1=tuple(l1),
        lambda2=tuple(l2),
        mu1=tuple(u1),
        mu2=tuple(u2),
        rows=rows,
        verdict=all(row.left <= row.right for row in rows),
        graded_dominates=graded_dominates(lt, l1, l2, u1, u2) if graded else None,
    )


def schur_positivity_check(
    lt: TypeLike,
    lambda1: Iterable[int],
    lambda2: Iterable[int],
    mu1: Iterable[int],
    mu2: Iterable[int],
) -> bool:
    return schur_compare(lt, lambda1, lambda2, mu1, mu2, graded=False).verdict
