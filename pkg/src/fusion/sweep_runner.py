import itertools
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from time import perf_counter
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

from tqdm import tqdm

try:
    from .errors import FusionError, HypothesisViolation
    from .fusion_polytope import lattice_points_S
    from .graded_fusion import (
        as_polynomials,
        at_q_equals_one,
        check_schur_hypothesis,
        dimension_check,
        graded_decompose,
        schur_compare,
    )
    from .lemma_verifier import check_lemmas
    from .logger import get_logger, pair_context
    from .lr_oracle import enumerate_T, klimyk_multiplicities, littelmann_tableau_count, orient_g2
    from .root_system import Weight, freudenthal_dim, lie_type, weyl_dim
except ImportError:
    from errors import FusionError, HypothesisViolation
    from fusion_polytope import lattice_points_S
    from graded_fusion import (
        as_polynomials,
        at_q_equals_one,
        check_schur_hypothesis,
        dimension_check,
        graded_decompose,
        schur_compare,
    )
    from lemma_verifier import check_lemmas
    from logger import get_logger, pair_context
    from lr_oracle import enumerate_T, klimyk_multiplicities, littelmann_tableau_count, orient_g2
    from root_system import Weight, freudenthal_dim, lie_type, weyl_dim

try:
    from schemas.fusion_models import LemmaCheck, PairVerification, RunConfig, SchurReport, SweepSummary
except ImportError:
    sys.path.append(str(Path(__file__).resolve().parents[2]))
    from schemas.fusion_models import LemmaCheck, PairVerification, RunConfig, SchurReport, SweepSummary

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# Pairs with every coordinate at most this bound also get the Freudenthal dimension cross-check.
FREUDENTHAL_BOUND = 3

Quadruple = Tuple[Weight, Weight, Weight, Weight]


def _check(name: str, passed: bool, closed_form: Optional[int] = None, enumerated: Optional[int] = None, detail: str = "") -> LemmaCheck:
    return LemmaCheck(name=name, closed_form=closed_form, enumerated=enumerated, passed=passed, detail=detail)


def _pair_checks(tag: str, lam: Weight, mu: Weight) -> List[LemmaCheck]:
    lt = lie_type(tag)
    checks: List[LemmaCheck] = []

    decomposition = graded_decompose(lt, lam, mu)
    graded = at_q_equals_one(decomposition)
    klimyk = klimyk_multiplicities(lt, lam, mu)
    klimyk_total = sum(klimyk.values())
    agree = graded == klimyk
    checks.append(_check("graded at q=1 = Klimyk", agree, detail="" if agree else f"graded={graded} klimyk={klimyk}"))

    s_count = len(lattice_points_S(lt, lam, mu))
    t_count = len(enumerate_T(lt, lam, mu))
    checks.append(_check("|S| = Klimyk total", s_count == klimyk_total, klimyk_total, s_count))
    checks.append(_check("|T| = Klimyk total", t_count == klimyk_total, klimyk_total, t_count))

    product = weyl_dim(lt, lam) * weyl_dim(lt, mu)
    checks.append(_check("dimension identity", dimension_check(decomposition), closed_form=product))

    degree_zero = sum(poly.coefficient(0) for poly in as_polynomials(decomposition).values())
    checks.append(_check("degree 0 is V(lambda+mu) once", degree_zero == 1, 1, degree_zero))

    swapped_s = len(lattice_points_S(lt, mu, lam))
    checks.append(_check("|S| symmetric in lambda, mu", swapped_s == s_count, s_count, swapped_s))
    swapped_graded = graded_decompose(lt, mu, lam).entries
    checks.append(_check("graded decomposition symmetric", swapped_graded == decomposition.entries))
    checks.append(_check("Klimyk symmetric", klimyk_multiplicities(lt, mu, lam) == klimyk))

    if tag == "G2":
        tableaux = littelmann_tableau_count(*orient_g2(lam, mu))
        checks.append(_check("tableau count = |T^G|", tableaux == t_count, t_count, tableaux))

    if max(*lam, *mu) <= FREUDENTHAL_BOUND:
        mismatched = [
            (tuple(weight), weyl_dim(lt, weight), freudenthal_dim(lt, weight))
            for weight in [lam, mu, *graded]
            if weyl_dim(lt, weight) != freudenthal_dim(lt, weight)
        ]
        checks.append(
            _check(
                "Weyl dimension = Freudenthal weight sum",
                not mismatched,
                detail="; ".join(f"V{w}: weyl={a} freudenthal={b}" for w, a, b in mismatched),
            )
        )
    return checks


def verify_pair(tag: str, lam: Sequence[int], mu: Sequence[int]) -> PairVerification:
    """Runs every oracle, cardinality, symmetry and lemma check on one (lambda, mu)."""
    lam, mu = Weight(*lam), Weight(*mu)
    result = PairVerification(type=tag, lam=tuple(lam), mu=tuple(mu))
    try:
        result.checks.extend(_pair_checks(tag, lam, mu))
        report = check_lemmas(tag, lam, mu)
        if report is not None:
            result.reports.append(report)
    except FusionError as e:
        logger.error(
            f"Verification raised for {tag} {tuple(lam)} x {tuple(mu)}: {e}",
            extra=pair_context(tag, lam, mu, error=type(e).__name__),
        )
        result.checks.append(_check(type(e).__name__, False, detail=str(e)))
    return result


def compare_quadruple(tag: str, quad: Quadruple) -> SchurReport:
    return schur_compare(tag, *quad, graded=True)


def _verify_task(args: Tuple[str, Tuple[int, int], Tuple[int, int]]) -> PairVerification:
    return verify_pair(*args)


def _schur_task(args: Tuple[str, Quadruple]) -> SchurReport:
    return compare_quadruple(*args)


def schur_quadruples(tag: str, max_coord: int) -> List[Quadruple]:
    """Every (l1, l2, u1, u2) with l1+l2 = u1+u2, sum coordinates <= max_coord, meeting the hypothesis."""
    lt = lie_type(tag)
    span = range(max_coord + 1)
    quadruples: List[Quadruple] = []
    for s1, s2 in itertools.product(span, span):
        splits = [
            (Weight(a1, a2), Weight(s1 - a1, s2 - a2))
            for a1, a2 in itertools.product(range(s1 + 1), range(s2 + 1))
        ]
        for (l1, l2), (u1, u2) in itertools.product(splits, splits):
            try:
                check_schur_hypothesis(lt, l1, l2, u1, u2)
            except HypothesisViolation:
                continue
            quadruples.append((l1, l2, u1, u2))
    return quadruples


class SweepRunner:
    """
    Drives the verification and Schur sweeps.

    Work items are dispatched to a process pool when ``jobs > 1``; results come
    back in parameter order either way, so output does not depend on scheduling.
    """

    def __init__(self, cfg: RunConfig, show_progress: bool = True):
        self.cfg = cfg
        self.show_progress = show_progress and sys.stderr.isatty()
        self.results: List[PairVerification] = []
        self.schur_reports: List[SchurReport] = []

    def _banner(self, text: str) -> None:
        if self.show_progress:
            print(text, file=sys.stderr)

    def _map(self, fn: Callable[[T], R], items: List[T], desc: str, unit: str) -> List[R]:
        bar = tqdm(total=len(items), desc=desc, unit=unit, file=sys.stderr, disable=not self.show_progress)
        results: List[R] = []
        try:
            if self.cfg.jobs == 1 or len(items) < 2:
                for item in items:
                    results.append(fn(item))
                    bar.update(1)
            else:
                chunksize = max(1, len(items) // (self.cfg.jobs * 8))
                with ProcessPoolExecutor(max_workers=self.cfg.jobs) as pool:
                    for result in pool.map(fn, items, chunksize=chunksize):
                        results.append(result)
                        bar.update(1)
        finally:
            bar.close()
        return results

    def run_verify(self) -> SweepSummary:
        tag = self.cfg.lie_type
        pairs = list(self.cfg.iter_pairs())
        self._banner(f"\n🔬 Verifying {len(pairs)} {tag} pairs (max coordinate {self.cfg.max_coord}, jobs {self.cfg.jobs})")
        self._banner("=" * 60)
        logger.info(
            f"Starting {tag} verification sweep",
            extra={"context": {"type": tag, "max_coord": self.cfg.max_coord, "pairs": len(pairs), "jobs": self.cfg.jobs}},
        )

        start = perf_counter()
        self.results = self._map(_verify_task, [(tag, lam, mu) for lam, mu in pairs], desc=f"verify {tag}", unit="pair")
        duration = perf_counter() - start

        failures = [r for r in self.results if not r.passed]
        for r in failures:
            logger.error(
                f"Pair {r.lam} x {r.mu} failed: {r.first_failure()}",
                extra=pair_context(tag, r.lam, r.mu),
            )
        flagged = sum(1 for r in self.results for report in r.reports for c in report.observations if not c.passed)
        if flagged:
            logger.warning(
                f"{flagged} non-gating observations did not hold",
                extra={"context": {"type": tag, "max_coord": self.cfg.max_coord, "observations_flagged": flagged}},
            )

        first_failure = None
        if failures:
            first = failures[0]
            first_failure = f"lambda={first.lam} mu={first.mu}: {first.first_failure()}"
        summary = SweepSummary(
            type=tag,
            max_coord=self.cfg.max_coord,
            pairs=len(self.results),
            failures=len(failures),
            first_failure=first_failure,
            observations_flagged=flagged,
        )
        logger.info(
            f"Completed {tag} verification in {duration:.2f}s",
            extra={"context": {"pairs": summary.pairs, "failures": summary.failures, "seconds": round(duration, 3)}},
        )

        self._banner("=" * 60)
        self._banner(f"{'✅' if summary.passed else '❌'} Passed: {summary.pairs - summary.failures}/{summary.pairs}")
        self._banner(f"⏱️  Total Time: {duration:.2f}s")
        self._banner("=" * 60)
        return summary

    def run_schur(self, quadruples: Optional[Iterable[Quadruple]] = None) -> SweepSummary:
        """Compares every quadruple; without an explicit list, sweeps sums with coordinates <= max_coord."""
        tag = self.cfg.lie_type
        items = list(quadruples) if quadruples is not None else schur_quadruples(tag, self.cfg.max_coord)
        self._banner(f"\n⚖️  Comparing {len(items)} {tag} quadruples")
        self._banner("=" * 60)
        logger.info(
            f"Starting {tag} Schur sweep",
            extra={"context": {"type": tag, "max_coord": self.cfg.max_coord, "quadruples": len(items)}},
        )

        start = perf_counter()
        self.schur_reports = self._map(_schur_task, [(tag, q) for q in items], desc=f"schur {tag}", unit="quad")
        duration = perf_counter() - start

        failing = [r for r in self.schur_reports if not r.verdict]
        first_failure = None
        for r in failing:
            logger.error(
                f"Multiplicity domination fails for {r.lambda1}+{r.lambda2} against {r.mu1}+{r.mu2}",
                extra={"context": {"type": tag, "lambda1": r.lambda1, "lambda2": r.lambda2, "mu1": r.mu1, "mu2": r.mu2}},
            )
        if failing:
            r = failing[0]
            bad = next(row for row in r.rows if row.left > row.right)
            first_failure = f"{r.lambda1}+{r.lambda2} vs {r.mu1}+{r.mu2}: nu={bad.nu} left={bad.left} right={bad.right}"
        flagged = sum(1 for r in self.schur_reports if r.graded_dominates is False)
        if flagged:
            logger.warning(
                f"{flagged} quadruples without coefficientwise graded domination",
                extra={"context": {"type": tag, "observations_flagged": flagged}},
            )
        summary = SweepSummary(
            type=tag,
            max_coord=self.cfg.max_coord,
            pairs=len(self.schur_reports),
            failures=len(failing),
            first_failure=first_failure,
            observations_flagged=flagged,
        )
        logger.info(
            f"Completed {tag} Schur sweep in {duration:.2f}s",
            extra={"context": {"quadruples": summary.pairs, "failures": summary.failures, "seconds": round(duration, 3)}},
        )
        self._banner("=" * 60)
        self._banner(f"{'✅' if summary.passed else '❌'} Dominated: {summary.pairs - summary.failures}/{summary.pairs}")
        self._banner(f"⏱️  Total Time: {duration:.2f}s")
        self._banner("=" * 60)
        return summary
