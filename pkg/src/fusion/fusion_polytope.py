"""Inequality systems, their lattice points, and the fusion polytopes S^A, S^C, S^G.

Every polytope in the toolkit, the S-polytopes below as well as the T-models
and the intermediate recursion sets, is carried as an :class:`IneqSystem` and
enumerated by the same pruning loop.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

try:
    from .errors import HypothesisViolation, UnboundedSystemError
    from .logger import get_logger
    from .root_system import RootVector, TypeLike, Weight, lie_type, require_dominant, root_to_weight
except ImportError:
    from errors import HypothesisViolation, UnboundedSystemError
    from logger import get_logger
    from root_system import RootVector, TypeLike, Weight, lie_type, require_dominant, root_to_weight

logger = get_logger(__name__)

LatticePoint = Tuple[int, ...]

ARITY = {"A2": 3, "C2": 4, "G2": 6}
VARIABLES = {"A2": ("a", "b", "c"), "C2": ("a", "b", "c", "d"), "G2": ("a", "b", "c", "d", "e", "f")}


@dataclass(frozen=True)
class Constraint:
    """``coeffs . x <= bound`` (or ``<`` when strict)."""

    coeffs: Tuple[int, ...]
    bound: int
    strict: bool = False
    label: str = ""

    @property
    def effective_bound(self) -> int:
        return self.bound - 1 if self.strict else self.bound

    def holds(self, point: Sequence[int]) -> bool:
        return sum(c * x for c, x in zip(self.coeffs, point)) <= self.effective_bound


@dataclass(frozen=True)
class IneqSystem:
    name: str
    variables: Tuple[str, ...]
    constraints: Tuple[Constraint, ...] = field(default_factory=tuple)

    @property
    def arity(self) -> int:
        return len(self.variables)

    def contains(self, point: Sequence[int]) -> bool:
        return len(point) == self.arity and all(x >= 0 for x in point) and all(
            c.holds(point) for c in self.constraints
        )

    def describe(self) -> List[str]:
        return [c.label for c in self.constraints]


def _render(variables: Sequence[str], coeffs: Sequence[int]) -> str:
    parts = []
    for name, c in zip(variables, coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}{name}")
    text = "".join(parts) or "0"
    return text[1:] if text.startswith("+") else text


class SystemBuilder:
    """Fluent construction of an :class:`IneqSystem`.

    ``SystemBuilder("T_A", "abc").le(n1, a=1, b=1, c=-1)`` reads as ``a+b-c <= n1``.
    """

    def __init__(self, name: str, variables: Iterable[str]):
        self.name = name
        self.variables = tuple(variables)
        self._constraints: List[Constraint] = []

    def _coeffs(self, terms: Dict[str, int]) -> Tuple[int, ...]:
        unknown = set(terms) - set(self.variables)
        if unknown:
            raise ValueError(f"{self.name}: unknown variables {sorted(unknown)}")
        return tuple(terms.get(v, 0) for v in self.variables)

    def _add(self, coeffs: Tuple[int, ...], bound: int, strict: bool, op: str, shown: int) -> "SystemBuilder":
        label = f"{_render(self.variables, coeffs)} {op} {shown}"
        self._constraints.append(Constraint(coeffs, bound, strict, label))
        return self

    def le(self, bound: int, **terms: int) -> "SystemBuilder":
        return self._add(self._coeffs(terms), bound, False, "<=", bound)

    def lt(self, bound: int, **terms: int) -> "SystemBuilder":
        return self._add(self._coeffs(terms), bound, True, "<", bound)

    def ge(self, bound: int, **terms: int) -> "SystemBuilder":
        coeffs = tuple(-c for c in self._coeffs(terms))
        self._constraints.append(
            Constraint(coeffs, -bound, False, f"{_render(self.variables, self._coeffs(terms))} >= {bound}")
        )
        return self

    def gt(self, bound: int, **terms: int) -> "SystemBuilder":
        coeffs = tuple(-c for c in self._coeffs(terms))
        self._constraints.append(
            Constraint(coeffs, -bound, True, f"{_render(self.variables, self._coeffs(terms))} > {bound}")
        )
        return self

    def eq(self, value: int, **terms: int) -> "SystemBuilder":
        return self.le(value, **terms).ge(value, **terms)

    def le_min(self, bounds: Iterable[int], **terms: int) -> "SystemBuilder":
        """``expr <= min{bounds}``, expanded into one constraint per bound."""
        for bound in bounds:
            self.le(bound, **terms)
        return self

    def lt_min(self, bounds: Iterable[int], **terms: int) -> "SystemBuilder":
        for bound in bounds:
            self.lt(bound, **terms)
        return self

    def build(self) -> IneqSystem:
        return IneqSystem(self.name, self.variables, tuple(self._constraints))


def enumerate_lattice_points(system: IneqSystem) -> List[LatticePoint]:
    """Non-negative integer solutions of ``system`` in lexicographic order.

    Coordinate k is capped by every constraint with a positive coefficient on
    x_k and no negative coefficient on a later coordinate. A coordinate bounded
    only through such a later negative term (``a - b <= 0, b <= 2`` with ``a``
    first) raises ``UnboundedSystemError``; list the bounding coordinate first.
    """
    n = system.arity
    rows = [(c.coeffs, c.effective_bound) for c in system.constraints]

    cappers: List[List[int]] = []
    monotone: List[List[int]] = []
    for k in range(n):
        tail_nonneg = [r for r, (coeffs, _) in enumerate(rows) if all(x >= 0 for x in coeffs[k + 1:])]
        monotone.append(tail_nonneg)
        cappers.append([r for r in tail_nonneg if rows[r][0][k] > 0])
        if not cappers[k]:
            raise UnboundedSystemError(system.name, system.variables[k])

    points: List[LatticePoint] = []
    partial = [0] * len(rows)
    prefix = [0] * n

    def descend(k: int) -> None:
        if k == n:
            if all(partial[r] <= rows[r][1] for r in range(len(rows))):
                points.append(tuple(prefix))
            return
        upper = min((rows[r][1] - partial[r]) // rows[r][0][k] for r in cappers[k])
        for x in range(upper + 1):
            prefix[k] = x
            for r in range(len(rows)):
                partial[r] += rows[r][0][k] * x
            if all(partial[r] <= rows[r][1] for r in monotone[k]):
                descend(k + 1)
            for r in range(len(rows)):
                partial[r] -= rows[r][0][k] * x
        prefix[k] = 0

    descend(0)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(
            "Enumerated system",
            extra={"context": {"system": system.name, "points": len(points), "constraints": system.describe()}},
        )
    return points


# --- Fusion polytopes ---

def require_g2_admissible(lam: Weight, mu: Weight) -> None:
    if min(lam.w2, mu.w2) > 0:
        raise HypothesisViolation(
            f"G2 requires min{{m2,n2}}=0 (lambda or mu must be a multiple of a minuscule "
            f"fundamental weight in the case of G2); got m2={lam.w2}, n2={mu.w2}"
        )


def build_S_system(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> IneqSystem:
    lt = lie_type(lt)
    lam, mu = require_dominant("build_S_system", lam=lam, mu=mu)
    m1, m2 = lam
    n1, n2 = mu
    name = f"S_{lt.tag}{lam}{mu}"
    sb = SystemBuilder(name, VARIABLES[lt.tag])

    if lt.tag == "A2":
        sb.le_min([m1, n1], a=1)
        sb.le_min([m2, n2], c=1)
        sb.le_min([m1 + m2, n1 + n2], a=1, b=1, c=1)
        sb.le(m1 + n1, a=2, b=1)
        sb.le(m2 + n2, c=2, b=1)
    elif lt.tag == "C2":
        sb.le_min([m1, n1], a=1)
        sb.le_min([m2, n2], d=1)
        sb.le_min([m1 + m2, n1 + n2], a=1, b=1, c=1)
        sb.le_min([m1 + m2, n1 + n2], a=1, b=1, d=1)
        sb.le(m1 + n1, a=2, b=1)
        sb.le(m2 + n2, d=2, b=1)
        sb.le(m1 + n1, a=2, b=1, c=2, d=-2)
    else:
        require_g2_admissible(lam, mu)
        sb.le_min([m1, n1], a=1)
        sb.le(m2 + n2, b=1)
        sb.le_min([m2, n2], f=1)
        sb.le(m2 + n2, b=1, e=1, a=-1)
        sb.le_min([m1 + m2, n1 + n2], a=1, c=1, d=1)
        sb.le_min([m1 + m2, n1 + n2], a=1, b=1, c=1)
        sb.le_min([m1 + 2 * m2, n1 + 2 * n2], a=1, b=1, c=1, d=1)
        sb.le_min([m1 + 2 * m2, n1 + 2 * n2], b=1, c=1, d=1, e=1)
        sb.le(m1 + n1, a=2, c=2, d=3, b=-1)
        sb.le(m1 + n1, a=2, c=2, b=1, d=1)
    return sb.build()


def lattice_points_S(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> List[LatticePoint]:
    """S^g_{lam,mu}; empty when either weight is nondominant."""
    lam, mu = Weight(*lam), Weight(*mu)
    if not (lam.is_dominant and mu.is_dominant):
        return []
    return enumerate_lattice_points(build_S_system(lt, lam, mu))


def degree(s: Sequence[int]) -> int:
    return sum(s)


def _root_coordinates(tag: str, s: Sequence[int]) -> RootVector:
    if tag == "A2":
        a, b, c = s
        return RootVector(a + b, b + c)
    if tag == "C2":
        a, b, c, d = s
        return RootVector(a + b + 2 * c, b + c + d)
    a, b, c, d, e, f = s
    return RootVector(a + b + 2 * c + 3 * d + 3 * e, b + c + d + 2 * e)


def weight_statistic(lt: TypeLike, s: Sequence[int]) -> Weight:
    lt = lie_type(lt)
    if len(s) != ARITY[lt.tag]:
        raise HypothesisViolation(f"weight_statistic: {lt} expects arity {ARITY[lt.tag]}, got {len(s)}")
    return root_to_weight(lt, _root_coordinates(lt.tag, s))
