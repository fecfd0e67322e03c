"""Rank-two Cartan and Weyl machinery.

Weights live in fundamental-weight coordinates, roots in simple-root
coordinates; ``root_to_weight`` is the only bridge between the two. The
Cartan matrix follows ``a[i][j] = alpha_j(h_i)`` and alpha_1 is the short
root for C2 and G2.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, NamedTuple, Tuple, Union

try:
    from .errors import HypothesisViolation, InvariantViolation
    from .logger import get_logger
except ImportError:
    from errors import HypothesisViolation, InvariantViolation
    from logger import get_logger

logger = get_logger(__name__)


class Weight(NamedTuple):
    """Integral weight ``w1*omega_1 + w2*omega_2``."""

    w1: int
    w2: int

    def __add__(self, other) -> "Weight":
        return Weight(self.w1 + other[0], self.w2 + other[1])

    def __sub__(self, other) -> "Weight":
        return Weight(self.w1 - other[0], self.w2 - other[1])

    def __neg__(self) -> "Weight":
        return Weight(-self.w1, -self.w2)

    def scaled(self, k: int) -> "Weight":
        return Weight(k * self.w1, k * self.w2)

    @property
    def is_dominant(self) -> bool:
        return self.w1 >= 0 and self.w2 >= 0

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parses ``"2,1"`` into ``Weight(2, 1)``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"expected two comma-separated integers, got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    def __str__(self) -> str:
        return f"({self.w1},{self.w2})"


class RootVector(NamedTuple):
    """Element ``r1*alpha_1 + r2*alpha_2`` of the root lattice."""

    r1: int
    r2: int

    @property
    def height(self) -> int:
        return self.r1 + self.r2


RHO = Weight(1, 1)
OMEGA_1 = Weight(1, 0)
OMEGA_2 = Weight(0, 1)


@dataclass(frozen=True)
class LieType:
    tag: str
    cartan: Tuple[Tuple[int, int], Tuple[int, int]]
    symmetrizers: Tuple[int, int]
    positive_roots: Tuple[RootVector, ...]
    # alpha -> coordinates of the coroot h_alpha in the basis (h_1, h_2)
    coroots: Tuple[Tuple[RootVector, Tuple[int, int]], ...]
    weyl_order: int

    @property
    def simple_roots(self) -> Tuple[Weight, Weight]:
        return (root_to_weight(self, RootVector(1, 0)), root_to_weight(self, RootVector(0, 1)))

    def __str__(self) -> str:
        return self.tag


A2 = LieType(
    tag="A2",
    cartan=((2, -1), (-1, 2)),
    symmetrizers=(1, 1),
    positive_roots=(RootVector(1, 0), RootVector(0, 1), RootVector(1, 1)),
    coroots=(
        (RootVector(1, 0), (1, 0)),
        (RootVector(0, 1), (0, 1)),
        (RootVector(1, 1), (1, 1)),
    ),
    weyl_order=6,
)

C2 = LieType(
    tag="C2",
    cartan=((2, -2), (-1, 2)),
    symmetrizers=(1, 2),
    positive_roots=(RootVector(1, 0), RootVector(0, 1), RootVector(1, 1), RootVector(2, 1)),
    coroots=(
        (RootVector(1, 0), (1, 0)),
        (RootVector(0, 1), (0, 1)),
        (RootVector(1, 1), (1, 2)),
        (RootVector(2, 1), (1, 1)),
    ),
    weyl_order=8,
)

G2 = LieType(
    tag="G2",
    cartan=((2, -3), (-1, 2)),
    symmetrizers=(1, 3),
    positive_roots=(
        RootVector(1, 0),
        RootVector(0, 1),
        RootVector(1, 1),
        RootVector(2, 1),
        RootVector(3, 1),
        RootVector(3, 2),
    ),
    coroots=(
        (RootVector(1, 0), (1, 0)),
        (RootVector(0, 1), (0, 1)),
        (RootVector(1, 1), (1, 3)),
        (RootVector(2, 1), (2, 3)),
        (RootVector(3, 1), (1, 1)),
        (RootVector(3, 2), (1, 2)),
    ),
    weyl_order=12,
)

LIE_TYPES: Dict[str, LieType] = {"A2": A2, "C2": C2, "G2": G2}

TypeLike = Union[LieType, str]


def lie_type(value: TypeLike) -> LieType:
    if isinstance(value, LieType):
        return value
    try:
        return LIE_TYPES[value]
    except KeyError:
        raise HypothesisViolation(f"unknown Lie type {value!r}; expected one of A2, C2, G2") from None


# --- Coordinates and the invariant form ---

def root_to_weight(lt: LieType, v: Iterable[int]) -> Weight:
    r1, r2 = v
    a = lt.cartan
    return Weight(a[0][0] * r1 + a[0][1] * r2, a[1][0] * r1 + a[1][1] * r2)


def weight_to_root(lt: LieType, w: Iterable[int]) -> RootVector:
    """Inverse of ``root_to_weight``; ``w`` must lie in the root lattice."""
    x1, x2 = w
    (a11, a12), (a21, a22) = lt.cartan
    det = a11 * a22 - a12 * a21
    n1 = a22 * x1 - a12 * x2
    n2 = -a21 * x1 + a11 * x2
    if n1 % det or n2 % det:
        raise InvariantViolation(f"{lt}: weight {tuple(w)} is not in the root lattice")
    return RootVector(n1 // det, n2 // det)


def bilinear(lt: LieType, w: Iterable[int], v: Iterable[int]) -> int:
    """B(w, v) for a weight ``w`` and a root-lattice vector ``v``; B(omega_i, alpha_j) = d_j if i == j."""
    w1, w2 = w
    r1, r2 = v
    d1, d2 = lt.symmetrizers
    return w1 * r1 * d1 + w2 * r2 * d2


def bilinear_weights(lt: LieType, w: Iterable[int], x: Iterable[int]) -> int:
    """B(w, x) where the second weight is taken through its root coordinates."""
    return bilinear(lt, w, weight_to_root(lt, x))


def summand_order_key(lt: LieType, top: Iterable[int], nu: Iterable[int]) -> Tuple[int, int, int]:
    """Sort key for summands of a product with top weight ``top``: Cartan component first."""
    nu = Weight(*nu)
    return (weight_to_root(lt, Weight(*top) - nu).height, -nu.w1, -nu.w2)


def coroot_pairing(lt: LieType, w: Iterable[int], alpha: Iterable[int]) -> int:
    """The value ``w(h_alpha)`` read off the coroot table."""
    alpha = RootVector(*alpha)
    for root, (c1, c2) in lt.coroots:
        if root == alpha:
            w1, w2 = w
            return w1 * c1 + w2 * c2
    raise HypothesisViolation(f"{lt}: {tuple(alpha)} is not a positive root")


def require_dominant(operation: str, **weights: Iterable[int]) -> Tuple[Weight, ...]:
    """Coerces keyword weights to ``Weight`` and rejects nondominant ones."""
    result = []
    for name, value in weights.items():
        w = Weight(*value)
        if not w.is_dominant:
            raise HypothesisViolation(f"{operation}: {name}={w} is not dominant")
        result.append(w)
    return tuple(result)


def weyl_dim(lt: TypeLike, nu: Iterable[int]) -> int:
    lt = lie_type(lt)
    nu = Weight(*nu)
    if not nu.is_dominant:
        raise HypothesisViolation(f"weyl_dim: weight {nu} is not dominant")
    shifted = nu + RHO
    numerator = 1
    denominator = 1
    for alpha in lt.positive_roots:
        numerator *= bilinear(lt, shifted, alpha)
        denominator *= bilinear(lt, RHO, alpha)
    if numerator % denominator:
        raise InvariantViolation(f"{lt}: Weyl dimension of {nu} is not integral ({numerator}/{denominator})")
    return numerator // denominator


# --- Weyl group ---

def simple_reflection(lt: LieType, i: int, w: Iterable[int]) -> Weight:
    w = Weight(*w)
    if i not in (1, 2):
        raise ValueError(f"simple reflection index must be 1 or 2, got {i}")
    alpha = lt.simple_roots[i - 1]
    return w - alpha.scaled(w[i - 1])


def dominant_conjugate(lt: LieType, w: Iterable[int]) -> Tuple[Weight, int]:
    """Returns the dominant Weyl conjugate of ``w`` and the number of reflections used."""
    w = Weight(*w)
    steps = 0
    while not w.is_dominant:
        i = 1 if w.w1 < 0 else 2
        w = simple_reflection(lt, i, w)
        steps += 1
        if steps > lt.weyl_order:
            raise InvariantViolation(f"{lt}: dominant conjugation did not terminate")
    return w, steps


def dominant_conjugate_signed(lt: TypeLike, xi: Iterable[int]) -> Tuple[Weight, int]:
    """Signed dominant conjugation used by the Klimyk oracle.

    Returns ``(xi, 0)`` when the orbit of ``xi`` meets a wall, otherwise the
    strictly dominant conjugate with ``det(w)``.
    """
    lt = lie_type(lt)
    start = Weight(*xi)
    w = start
    sign = 1
    for _ in range(lt.weyl_order + 1):
        if w.w1 == 0 or w.w2 == 0:
            return start, 0
        if w.w1 > 0 and w.w2 > 0:
            return w, sign
        w = simple_reflection(lt, 1 if w.w1 < 0 else 2, w)
        sign = -sign
    raise InvariantViolation(f"{lt}: signed conjugation of {start} exceeded |W| = {lt.weyl_order} steps")


def weyl_orbit(lt: LieType, w: Iterable[int]) -> List[Weight]:
    """All Weyl images of ``w``, sorted."""
    seen = {Weight(*w)}
    frontier = [Weight(*w)]
    while frontier:
        nxt = []
        for x in frontier:
            for i in (1, 2):
                y = simple_reflection(lt, i, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def weyl_group_words(lt: TypeLike) -> List[Tuple[int, ...]]:
    """One reduced word per Weyl group element, found by walking the regular orbit of rho."""
    lt = lie_type(lt)
    words = {RHO: ()}
    frontier = [RHO]
    while frontier:
        nxt = []
        for x in frontier:
            for i in (1, 2):
                y = simple_reflection(lt, i, x)
                if y not in words:
                    words[y] = (i,) + words[x]
                    nxt.append(y)
        frontier = nxt
    return sorted(words.values(), key=lambda word: (len(word), word))


def apply_word(lt: LieType, word: Tuple[int, ...], w: Iterable[int]) -> Weight:
    """Applies ``s_{i1} ... s_{ik}`` to ``w`` (rightmost reflection first)."""
    w = Weight(*w)
    for i in reversed(word):
        w = simple_reflection(lt, i, w)
    return w


# --- Freudenthal ---

def _dominant_weights_below(lt: LieType, lam: Weight) -> List[Weight]:
    found = {lam}
    frontier = [lam]
    root_weights = [root_to_weight(lt, alpha) for alpha in lt.positive_roots]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in root_weights:
                nu = mu - alpha
                if nu.is_dominant and nu not in found:
                    found.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return sorted(found, key=lambda mu: (weight_to_root(lt, lam - mu).height, tuple(-x for x in mu)))


@lru_cache(maxsize=4096)
def _dominant_multiplicities(tag: str, lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    lt = LIE_TYPES[tag]
    ordered = _dominant_weights_below(lt, lam)
    mult: Dict[Weight, int] = {lam: 1}
    top = lam + RHO.scaled(2)  # B(lam+rho,lam+rho) - B(mu+rho,mu+rho) = B(lam+mu+2rho, lam-mu)
    for mu in ordered[1:]:
        total = 0
        for alpha in lt.positive_roots:
            alpha_w = root_to_weight(lt, alpha)
            k = 1
            while True:
                nu = mu + alpha_w.scaled(k)
                m = mult.get(dominant_conjugate(lt, nu)[0], 0)
                if m == 0:
                    break
                total += m * bilinear(lt, nu, alpha)
                k += 1
        denominator = bilinear_weights(lt, top + mu, lam - mu)
        numerator = 2 * total
        if denominator <= 0 or numerator % denominator or numerator == 0:
            raise InvariantViolation(
                f"{lt}: Freudenthal step for V{lam} at {mu} gives {numerator}/{denominator}"
            )
        mult[mu] = numerator // denominator
    logger.debug(
        "Freudenthal recursion complete",
        extra={"context": {"type": tag, "lambda": list(lam), "dominant_weights": len(ordered)}},
    )
    return tuple((mu, mult[mu]) for mu in ordered)


def dominant_weight_multiplicities(lt: TypeLike, lam: Iterable[int]) -> Dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam), highest first."""
    lt = lie_type(lt)
    lam = Weight(*lam)
    if not lam.is_dominant:
        raise HypothesisViolation(f"weight_multiplicities: weight {lam} is not dominant")
    return dict(_dominant_multiplicities(lt.tag, lam))


def weight_multiplicities(lt: TypeLike, lam: Iterable[int]) -> Dict[Weight, int]:
    lt = lie_type(lt)
    result: Dict[Weight, int] = {}
    for mu, m in dominant_weight_multiplicities(lt, lam).items():
        for w in weyl_orbit(lt, mu):
            result[w] = m
    return result


def freudenthal_dim(lt: TypeLike, lam: Iterable[int]) -> int:
    """dim V(lam) as the sum of its weight multiplicities."""
    return sum(weight_multiplicities(lt, lam).values())


# --- Startup validation ---

def _validate(lt: LieType) -> None:
    a = lt.cartan
    d = lt.symmetrizers
    if a[0][0] != 2 or a[1][1] != 2:
        raise InvariantViolation(f"{lt}: Cartan diagonal must be 2")
    if d[0] * a[0][1] != d[1] * a[1][0]:
        raise InvariantViolation(f"{lt}: symmetrizers {d} do not symmetrize {a}")

    roots = {root_to_weight(lt, alpha) for alpha in lt.positive_roots}
    roots |= {-r for r in roots}
    for r in list(roots):
        for i in (1, 2):
            if simple_reflection(lt, i, r) not in roots:
                raise InvariantViolation(f"{lt}: root system not closed under s_{i} at {r}")
    if len(weyl_group_words(lt)) != lt.weyl_order:
        raise InvariantViolation(f"{lt}: Weyl group order mismatch")

    for alpha, (c1, c2) in lt.coroots:
        norm = bilinear(lt, root_to_weight(lt, alpha), alpha)
        for r, dj, cj in ((alpha.r1, d[0], c1), (alpha.r2, d[1], c2)):
            if 2 * r * dj != cj * norm:
                raise InvariantViolation(f"{lt}: coroot table entry for {tuple(alpha)} is wrong")


for _lt in LIE_TYPES.values():
    _validate(_lt)
