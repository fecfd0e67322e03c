"""Ungraded tensor-product multiplicities by two unrelated routes.

* ``klimyk_decompose`` works purely from weight multiplicities and signed
  dominant conjugation in :mod:`root_system`.
* ``enumerate_T_A`` / ``enumerate_T_C`` / ``enumerate_T_G`` count the classical
  lattice-point models, and ``littelmann_tableau_count`` counts standard
  dominant G2 column tableaux directly.
"""
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Tuple

try:
    from .errors import HypothesisViolation, InvariantViolation
    from .fusion_polytope import (
        IneqSystem,
        LatticePoint,
        SystemBuilder,
        enumerate_lattice_points,
        require_g2_admissible,
    )
    from .logger import get_logger
    from .root_system import (
        RHO,
        TypeLike,
        Weight,
        dominant_conjugate_signed,
        lie_type,
        require_dominant,
        summand_order_key,
        weight_multiplicities,
        weyl_dim,
    )
except ImportError:
    from errors import HypothesisViolation, InvariantViolation
    from fusion_polytope import (
        IneqSystem,
        LatticePoint,
        SystemBuilder,
        enumerate_lattice_points,
        require_g2_admissible,
    )
    from logger import get_logger
    from root_system import (
        RHO,
        TypeLike,
        Weight,
        dominant_conjugate_signed,
        lie_type,
        require_dominant,
        summand_order_key,
        weight_multiplicities,
        weyl_dim,
    )

try:
    from schemas.fusion_models import TensorDecomposition, TensorEntry
except ImportError:
    sys.path.append(str(Path(__file__).resolve().parents[2]))
    from schemas.fusion_models import TensorDecomposition, TensorEntry

logger = get_logger(__name__)


# --- Klimyk ---

@lru_cache(maxsize=4096)
def _klimyk(tag: str, lam: Weight, mu: Weight) -> Tuple[Tuple[Weight, int], ...]:
    lt = lie_type(tag)
    acc: Dict[Weight, int] = {}
    for eta, m in weight_multiplicities(lt, mu).items():
        xi, sign = dominant_conjugate_signed(lt, lam + eta + RHO)
        if sign:
            nu = xi - RHO
            acc[nu] = acc.get(nu, 0) + sign * m

    negative = {nu: m for nu, m in acc.items() if m < 0}
    if negative:
        raise InvariantViolation(f"{tag}: Klimyk produced negative multiplicities {negative} for {lam} x {mu}")
    result = {nu: m for nu, m in acc.items() if m > 0}

    total_dim = sum(m * weyl_dim(lt, nu) for nu, m in result.items())
    if total_dim != weyl_dim(lt, lam) * weyl_dim(lt, mu):
        raise InvariantViolation(f"{tag}: Klimyk dimension identity fails for {lam} x {mu}")

    top = lam + mu
    return tuple(sorted(result.items(), key=lambda item: summand_order_key(lt, top, item[0])))


def klimyk_multiplicities(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> Dict[Weight, int]:
    lt = lie_type(lt)
    lam, mu = require_dominant("klimyk_decompose", lam=lam, mu=mu)
    return dict(_klimyk(lt.tag, lam, mu))


def klimyk_decompose(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> TensorDecomposition:
    lt = lie_type(lt)
    lam, mu = require_dominant("klimyk_decompose", lam=lam, mu=mu)
    entries = [TensorEntry(nu=tuple(nu), multiplicity=m) for nu, m in _klimyk(lt.tag, lam, mu)]
    return TensorDecomposition(type=lt.tag, lam=tuple(lam), mu=tuple(mu), entries=entries)


def klimyk_total(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> int:
    return sum(klimyk_multiplicities(lt, lam, mu).values())


# --- Classical lattice-point models ---

def t_system_A(lam: Weight, mu: Weight) -> IneqSystem:
    m1, m2 = lam
    n1, n2 = mu
    return (
        SystemBuilder(f"T_A{lam}{mu}", "abc")
        .le_min([m2, n1], b=1)
        .le(n1, a=1, b=1, c=-1)
        .le(m2, b=1, c=1, a=-1)
        .le(n2, c=1)
        .le(m1, a=1)
        .le(m1 + n1, a=2, b=1, c=-1)
        .le(m2 + n2, c=2, b=1, a=-1)
        .build()
    )


def t_system_C(lam: Weight, mu: Weight) -> IneqSystem:
    m1, m2 = lam
    n1, n2 = mu
    return (
        SystemBuilder(f"T_C{lam}{mu}", "abcd")
        .le(m1, a=1)
        .le(m2, c=1)
        .le(n2, d=1)
        .le(n1, b=1)
        .le(m2, c=1, b=1, a=-1)
        .le(m2, d=1, b=1, a=-1)
        .le(n1, a=1, c=2, d=-2)
        .le(n1, b=1, c=2, d=-2)
        .build()
    )


def t_system_G(lam: Weight, mu: Weight) -> IneqSystem:
    """The G2 model; assumes n2 = 0."""
    m1, m2 = lam
    n1, _ = mu
    return (
        SystemBuilder(f"T_G{lam}{mu}", "abcdef")
        .le(n1, a=1, b=1, c=1, d=1, e=1, f=1)
        .le(1, c=1)
        .le(m2, b=1, e=1, d=-1)
        .le(m1, f=1)
        .le(m2, e=1)
        .le(m1, a=1, b=-2, d=2, e=-1, f=1)
        .le(m1, c=1, f=1, d=2, e=-1)
        .build()
    )


_T_SYSTEMS = {"A2": t_system_A, "C2": t_system_C, "G2": t_system_G}


def orient_g2(lam: Weight, mu: Weight) -> Tuple[Weight, Weight]:
    """Returns (lam, mu) arranged so that n2 = 0, swapping when only m2 = 0."""
    require_g2_admissible(lam, mu)
    if mu.w2 == 0:
        return lam, mu
    return mu, lam


def enumerate_T_A(lam: Iterable[int], mu: Iterable[int]) -> List[LatticePoint]:
    lam, mu = require_dominant("enumerate_T_A", lam=lam, mu=mu)
    return enumerate_lattice_points(t_system_A(lam, mu))


def enumerate_T_C(lam: Iterable[int], mu: Iterable[int]) -> List[LatticePoint]:
    lam, mu = require_dominant("enumerate_T_C", lam=lam, mu=mu)
    return enumerate_lattice_points(t_system_C(lam, mu))


def enumerate_T_G(lam: Iterable[int], mu: Iterable[int]) -> List[LatticePoint]:
    lam, mu = require_dominant("enumerate_T_G", lam=lam, mu=mu)
    lam, mu = orient_g2(lam, mu)
    return enumerate_lattice_points(t_system_G(lam, mu))


def enumerate_T(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> List[LatticePoint]:
    lt = lie_type(lt)
    return {"A2": enumerate_T_A, "C2": enumerate_T_C, "G2": enumerate_T_G}[lt.tag](lam, mu)


def lattice_points_T(lt: TypeLike, lam: Iterable[int], mu: Iterable[int]) -> List[LatticePoint]:
    """T^g_{lam,mu} without reorientation; empty when either weight is nondominant."""
    lt = lie_type(lt)
    lam, mu = Weight(*lam), Weight(*mu)
    if not (lam.is_dominant and mu.is_dominant):
        return []
    return enumerate_lattice_points(_T_SYSTEMS[lt.tag](lam, mu))


# --- Littelmann column tableaux for G2 ---

# Admissible sixtuples of rows, top to bottom
ROWS = {
    "1": (1, 1, 1, 1, 1, 1),
    "2": (2, 2, 2, 2, 2, 2),
    "3": (3, 3, 3, 3, 3, 3),
    "34": (3, 3, 3, 4, 4, 4),
    "4": (4, 4, 4, 4, 4, 4),
    "5": (5, 5, 5, 5, 5, 5),
    "6": (6, 6, 6, 6, 6, 6),
}

# (y2, y3, y34, y4, y5, y6)
TableauShape = Tuple[int, int, int, int, int, int]


def build_column(n1: int, shape: TableauShape) -> List[int]:
    y2, y3, y34, y4, y5, y6 = shape
    y1 = n1 - sum(shape)
    if y1 < 0:
        raise HypothesisViolation(f"shape {shape} does not fit a column of {6 * n1} rows")
    column: List[int] = []
    for key, count in (("1", y1), ("2", y2), ("3", y3), ("34", y34), ("4", y4), ("5", y5), ("6", y6)):
        for _ in range(count):
            column.extend(ROWS[key])
    return column


def dominance_values(column: List[int], m1: int, m2: int) -> List[Tuple[int, int]]:
    """(d_1^i, d_2^i) for the suffixes T_i, i = 0..len(column)."""
    c = [0] * 7
    values = [(6 * m1, 6 * m2)]
    for entry in reversed(column):
        c[entry] += 1
        d1 = c[1] + 2 * c[3] + c[5] - c[2] - c[6] - 2 * c[4] + 6 * m1
        d2 = c[2] + c[4] - c[5] - c[3] + 6 * m2
        values.append((d1, d2))
    return values


def critical_indices(shape: TableauShape) -> List[Tuple[int, int]]:
    """(suffix length, functional) pairs where the dominance functionals reach their minima.

    These are the ends of the runs of 6s, 5s, 4s, 3s and 2s read from the bottom.
    """
    y2, y3, y34, y4, y5, y6 = shape
    return [
        (6 * y6, 1),
        (6 * (y6 + y5), 2),
        (6 * (y6 + y5 + y4) + 3 * y34, 1),
        (6 * (y6 + y5 + y4 + y34 + y3), 2),
        (6 * (y6 + y5 + y4 + y34 + y3 + y2), 1),
    ]


def textbook_indices(shape: TableauShape) -> List[Tuple[int, int]]:
    """The five indices of the usual tableau argument, paired with the functional they bound.

    They skip the 3|4 boundary when y34 = 1 and the end of the run of 2s, so they can accept
    shapes the full scan rejects.
    """
    y2, y3, y34, y4, y5, y6 = shape
    return [
        (6 * y6, 1),
        (6 * (y6 + y5), 2),
        (6 * (y6 + y5 + y4 + y3), 2),
        (6 * (y3 + y34 + y4 + y5 + y6), 1),
        (6 * (y34 + y4 + y5 + y6), 1),
    ]


def reduced_system(lam: Weight, mu: Weight) -> IneqSystem:
    m1, m2 = lam
    n1, _ = mu
    variables = ("y2", "y3", "y34", "y4", "y5", "y6")
    return (
        SystemBuilder(f"tableau_reduced{lam}{mu}", variables)
        .le(1, y34=1)
        .le(n1, y2=1, y3=1, y34=1, y4=1, y5=1, y6=1)
        .le(m1, y6=1)
        .le(m2, y5=1)
        .ge(-m2, y5=-1, y3=-1, y4=1)
        .ge(-m1, y34=-1, y4=-2, y6=-1, y5=1)
        .ge(-m1, y4=-2, y2=-1, y6=-1, y3=2, y5=1)
        .build()
    )


@dataclass
class TableauCount:
    reduced: List[TableauShape] = field(default_factory=list)
    scanned: List[TableauShape] = field(default_factory=list)
    critical: List[TableauShape] = field(default_factory=list)
    textbook_disagreements: List[TableauShape] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.reduced)


def littelmann_tableaux(lam: Iterable[int], mu: Iterable[int]) -> TableauCount:
    lam, mu = require_dominant("littelmann_tableau_count", lam=lam, mu=mu)
    if mu.w2 != 0:
        raise HypothesisViolation(f"littelmann_tableau_count requires n2 = 0, got mu={mu}")
    m1, m2 = lam
    n1 = mu.w1

    candidates = enumerate_lattice_points(
        SystemBuilder("tableau_shapes", ("y2", "y3", "y34", "y4", "y5", "y6"))
        .le(1, y34=1)
        .le(n1, y2=1, y3=1, y34=1, y4=1, y5=1, y6=1)
        .build()
    )
    result = TableauCount(reduced=enumerate_lattice_points(reduced_system(lam, mu)))
    for shape in candidates:
        values = dominance_values(build_column(n1, shape), m1, m2)
        if all(d1 >= 0 and d2 >= 0 for d1, d2 in values):
            result.scanned.append(shape)
        in_critical = all(values[i][f - 1] >= 0 for i, f in critical_indices(shape))
        if in_critical:
            result.critical.append(shape)
        in_textbook = all(values[i][f - 1] >= 0 for i, f in textbook_indices(shape))
        if in_textbook != in_critical:
            result.textbook_disagreements.append(shape)

    if result.scanned != result.reduced or result.critical != result.reduced:
        raise InvariantViolation(
            f"tableau count for {lam} x {mu}: reduced={len(result.reduced)} "
            f"scanned={len(result.scanned)} critical={len(result.critical)}"
        )
    if result.textbook_disagreements:
        logger.debug(
            "Textbook critical indices disagree with the run boundaries",
            extra={"context": {"lambda": list(lam), "mu": list(mu), "shapes": len(result.textbook_disagreements)}},
        )
    return result


def littelmann_tableau_count(lam: Iterable[int], mu: Iterable[int]) -> int:
    return littelmann_tableaux(lam, mu).count
