# File: schemas/fusion_models.py
import itertools
import os
from pathlib import Path
from typing import Iterator, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, conint

# --- Enums and Definitions ---

LieTypeTag = Literal["A2", "C2", "G2"]
OutputFormat = Literal["json", "csv", "text"]
WeightPair = Tuple[int, int]

# --- Decompositions ---


class DecompositionEntry(BaseModel):
    """One summand V(nu) with its graded multiplicity."""

    model_config = ConfigDict(frozen=True)

    nu: WeightPair = Field(description="Highest weight of the summand in fundamental coordinates.")
    poly: List[conint(ge=0)] = Field(description="coeffs[r] = multiplicity of V(nu) in degree r; trailing entry nonzero.")


class GradedDecomposition(BaseModel):
    """
    Graded decomposition of the fusion product V(lambda)*V(mu).
    Entries are ordered with the Cartan component first (see root_system.summand_order_key).
    """

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    lie_type: LieTypeTag = Field(alias="type")
    lam: WeightPair = Field(alias="lambda")
    mu: WeightPair
    entries: List[DecompositionEntry]


class TensorEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    nu: WeightPair
    multiplicity: conint(ge=1)


class TensorDecomposition(BaseModel):
    """Ungraded decomposition of V(lambda) (x) V(mu) as produced by the Klimyk oracle."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    lie_type: LieTypeTag = Field(alias="type")
    lam: WeightPair = Field(alias="lambda")
    mu: WeightPair
    entries: List[TensorEntry]


class CountReport(BaseModel):
    """Cardinalities of every lattice-point model for one pair."""

    model_config = ConfigDict(populate_by_name=True)

    lie_type: LieTypeTag = Field(alias="type")
    lam: WeightPair = Field(alias="lambda")
    mu: WeightPair
    s_count: conint(ge=0) = Field(description="|S^g| (fusion polytope).")
    t_count: conint(ge=0) = Field(description="|T^g| (classical lattice-point model).")
    klimyk_total: conint(ge=0) = Field(description="Sum of Klimyk multiplicities.")
    dim_product: conint(ge=1) = Field(description="dim V(lambda) * dim V(mu).")
    tableau_count: Optional[conint(ge=0)] = Field(default=None, description="Littelmann tableau count (G2 only).")
    textbook_index_disagreements: Optional[conint(ge=0)] = Field(
        default=None,
        description="Column shapes where the textbook critical indices and the run boundaries disagree (G2 only).",
    )


# --- Verification ---


class LemmaCheck(BaseModel):
    """A single compared quantity: closed form (if any) against enumeration."""

    name: str = Field(description="Which identity or inequality system is compared.")
    closed_form: Optional[int] = Field(default=None, description="Value predicted by the closed formula.")
    enumerated: Optional[int] = Field(default=None, description="Value obtained by enumerating lattice points.")
    passed: bool
    detail: str = ""


class LemmaReport(BaseModel):
    """Outcome of one lemma check for one (lambda, mu). Observations never affect `passed`."""

    model_config = ConfigDict(populate_by_name=True)

    lemma: str
    lie_type: LieTypeTag = Field(alias="type")
    lam: WeightPair = Field(alias="lambda")
    mu: WeightPair
    checks: List[LemmaCheck] = Field(default_factory=list)
    observations: List[LemmaCheck] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[LemmaCheck]:
        return [c for c in self.checks if not c.passed]


class PairVerification(BaseModel):
    """Every check run by `verify` on one (lambda, mu)."""

    model_config = ConfigDict(populate_by_name=True)

    lie_type: LieTypeTag = Field(alias="type")
    lam: WeightPair = Field(alias="lambda")
    mu: WeightPair
    checks: List[LemmaCheck] = Field(default_factory=list)
    reports: List[LemmaReport] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(r.passed for r in self.reports)

    def first_failure(self) -> Optional[str]:
        for c in self.checks:
            if not c.passed:
                return f"{c.name}: closed_form={c.closed_form} enumerated={c.enumerated} {c.detail}".rstrip()
        for r in self.reports:
            for c in r.failures():
                return f"{r.lemma} / {c.name}: closed_form={c.closed_form} enumerated={c.enumerated} {c.detail}".rstrip()
        return None


class SweepSummary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lie_type: LieTypeTag = Field(alias="type")
    max_coord: conint(ge=0)
    pairs: conint(ge=0)
    failures: conint(ge=0)
    first_failure: Optional[str] = None
    observations_flagged: conint(ge=0) = Field(default=0, description="Non-gating observations that did not hold.")

    @computed_field
    @property
    def passed(self) -> bool:
        return self.failures == 0


class SchurRow(BaseModel):
    nu: WeightPair
    left: conint(ge=0) = Field(description="Multiplicity in V(lambda1) (x) V(lambda2).")
    right: conint(ge=0) = Field(description="Multiplicity in V(mu1) (x) V(mu2).")


class SchurReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lie_type: LieTypeTag = Field(alias="type")
    lambda1: WeightPair
    lambda2: WeightPair
    mu1: WeightPair
    mu2: WeightPair
    rows: List[SchurRow]
    verdict: bool
    graded_dominates: Optional[bool] = Field(
        default=None, description="Exploratory: coefficientwise domination of the graded decompositions."
    )


# --- Configuration ---


class RunConfig(BaseModel):
    """Validated command-line configuration shared by every subcommand."""

    model_config = ConfigDict(populate_by_name=True)

    lie_type: LieTypeTag = Field(alias="type")
    lam: Optional[WeightPair] = Field(default=None, alias="lambda")
    mu: Optional[WeightPair] = None
    max_coord: conint(ge=0) = Field(default=0, description="Sweep bound on every weight coordinate.")
    output_format: OutputFormat = "text"
    jobs: conint(ge=1) = Field(default_factory=lambda: os.cpu_count() or 1)
    out: Optional[Path] = None

    def iter_pairs(self) -> Iterator[Tuple[WeightPair, WeightPair]]:
        """All (lambda, mu) with coordinates <= max_coord; G2 keeps only min{m2,n2} = 0."""
        span = range(self.max_coord + 1)
        for m1, m2, n1, n2 in itertools.product(span, span, span, span):
            if self.lie_type == "G2" and min(m2, n2) > 0:
                continue
            yield (m1, m2), (n1, n2)
