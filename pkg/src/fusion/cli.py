"""
Command-line surface of the fusion toolkit.

    python src/main.py decompose --type G2 --lambda 1,0 --mu 1,0 --format json
    python src/main.py verify --type A2 --max 5 --jobs 8
    python src/main.py schur --type C2 --lambda1 2,1 --lambda2 0,0 --mu1 1,1 --mu2 1,0

Exit codes: 0 success, 1 invariant or verification failure, 2 usage or hypothesis error.
"""
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, Tuple

import click
from pydantic import ValidationError

try:
    from .errors import FusionError, HypothesisViolation
    from .fusion_polytope import lattice_points_S
    from .graded_fusion import graded_decompose
    from .logger import get_logger, level_from_flags, setup_logging
    from .lr_oracle import enumerate_T, klimyk_decompose, littelmann_tableaux, orient_g2
    from .reporting import (
        emit,
        render_count,
        render_decomposition,
        render_oracle,
        render_schur,
        render_verify,
        use_color,
    )
    from .root_system import Weight, weyl_dim
    from .sweep_runner import SweepRunner, compare_quadruple
except ImportError:
    from errors import FusionError, HypothesisViolation
    from fusion_polytope import lattice_points_S
    from graded_fusion import graded_decompose
    from logger import get_logger, level_from_flags, setup_logging
    from lr_oracle import enumerate_T, klimyk_decompose, littelmann_tableaux, orient_g2
    from reporting import (
        emit,
        render_count,
        render_decomposition,
        render_oracle,
        render_schur,
        render_verify,
        use_color,
    )
    from root_system import Weight, weyl_dim
    from sweep_runner import SweepRunner, compare_quadruple

try:
    from schemas.fusion_models import CountReport, RunConfig
except ImportError:
    sys.path.append(str(Path(__file__).resolve().parents[2]))
    from schemas.fusion_models import CountReport, RunConfig

logger = get_logger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2


def parse_weight(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[Tuple[int, int]]:
    """Click callback for ``a,b`` weights in fundamental coordinates."""
    if value is None:
        return None
    try:
        return tuple(Weight.parse(value))
    except ValueError as e:
        raise click.BadParameter(str(e))


@contextmanager
def guarded(ctx: click.Context) -> Iterator[None]:
    """Maps library exceptions onto the exit-code contract."""
    try:
        yield
    except ValidationError as e:
        click.echo(f"Error: invalid configuration: {e}", err=True)
        ctx.exit(EXIT_USAGE)
    except HypothesisViolation as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_USAGE)
    except FusionError as e:
        logger.error(f"Internal invariant failed: {e}", extra={"context": {"error": type(e).__name__}})
        click.echo(f"Error: {e}", err=True)
        ctx.exit(EXIT_FAILURE)


def _config(**fields) -> RunConfig:
    return RunConfig(**{k: v for k, v in fields.items() if v is not None})


def _color(out: Optional[Path]) -> bool:
    return out is None and use_color(sys.stdout)


type_option = click.option(
    "--type", "lie_type", required=True, type=click.Choice(["A2", "C2", "G2"]), help="Rank-two Lie type."
)
format_option = click.option(
    "--format", "output_format", type=click.Choice(["json", "csv", "text"]), default="text", show_default=True
)
out_option = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Write here instead of stdout.")
jobs_option = click.option("--jobs", type=int, default=None, help="Worker processes (default: all cores).")


def _weight_option(name: str, required: bool):
    return click.option(name, callback=parse_weight, required=required, metavar="A,B")


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Debug logging.")
@click.option("-q", "--quiet", is_flag=True, help="Warnings only; no progress bar.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, quiet: bool):
    """Graded fusion decompositions in rank two (A2, C2, G2)."""
    setup_logging("fusion", level_from_flags(verbose, quiet))
    ctx.ensure_object(dict)
    ctx.obj["quiet"] = quiet


@cli.command()
@type_option
@_weight_option("--lambda", required=True)
@_weight_option("--mu", required=True)
@format_option
@out_option
@click.pass_context
def decompose(ctx, lie_type, output_format, out, **weights):
    """Graded decomposition of the fusion product V(lambda)*V(mu)."""
    with guarded(ctx):
        cfg = _config(type=lie_type, lam=weights["lambda"], mu=weights["mu"], output_format=output_format, out=out)
        d = graded_decompose(cfg.lie_type, cfg.lam, cfg.mu)
        emit(render_decomposition(d, cfg.output_format), cfg.out)


@cli.command()
@type_option
@_weight_option("--lambda", required=True)
@_weight_option("--mu", required=True)
@format_option
@out_option
@click.pass_context
def oracle(ctx, lie_type, output_format, out, **weights):
    """Klimyk decomposition of V(lambda) (x) V(mu) with the classical lattice-point count."""
    with guarded(ctx):
        cfg = _config(type=lie_type, lam=weights["lambda"], mu=weights["mu"], output_format=output_format, out=out)
        d = klimyk_decompose(cfg.lie_type, cfg.lam, cfg.mu)
        t_count = len(enumerate_T(cfg.lie_type, cfg.lam, cfg.mu))
        emit(render_oracle(d, t_count, cfg.output_format), cfg.out)


@cli.command()
@type_option
@_weight_option("--lambda", required=True)
@_weight_option("--mu", required=True)
@format_option
@out_option
@click.pass_context
def count(ctx, lie_type, output_format, out, **weights):
    """Cardinalities of every lattice-point model for one pair."""
    with guarded(ctx):
        cfg = _config(type=lie_type, lam=weights["lambda"], mu=weights["mu"], output_format=output_format, out=out)
        d = klimyk_decompose(cfg.lie_type, cfg.lam, cfg.mu)
        tableaux = littelmann_tableaux(*orient_g2(Weight(*cfg.lam), Weight(*cfg.mu))) if cfg.lie_type == "G2" else None
        report = CountReport(
            type=cfg.lie_type,
            lam=cfg.lam,
            mu=cfg.mu,
            s_count=len(lattice_points_S(cfg.lie_type, cfg.lam, cfg.mu)),
            t_count=len(enumerate_T(cfg.lie_type, cfg.lam, cfg.mu)),
            klimyk_total=sum(e.multiplicity for e in d.entries),
            dim_product=weyl_dim(cfg.lie_type, cfg.lam) * weyl_dim(cfg.lie_type, cfg.mu),
            tableau_count=None if tableaux is None else tableaux.count,
            textbook_index_disagreements=None if tableaux is None else len(tableaux.textbook_disagreements),
        )
        emit(render_count(report, cfg.output_format), cfg.out)


@cli.command()
@type_option
@click.option("--max", "max_coord", type=int, required=True, help="Bound on every weight coordinate.")
@jobs_option
@format_option
@out_option
@click.pass_context
def verify(ctx, lie_type, max_coord, jobs, output_format, out):
    """Runs every check over all pairs with coordinates <= --max."""
    with guarded(ctx):
        cfg = _config(type=lie_type, max_coord=max_coord, jobs=jobs, output_format=output_format, out=out)
        runner = SweepRunner(cfg, show_progress=not ctx.obj["quiet"])
        summary = runner.run_verify()
        emit(render_verify(summary, runner.results, cfg.output_format, color=_color(cfg.out)), cfg.out)
        if not summary.passed:
            ctx.exit(EXIT_FAILURE)


@cli.command()
@type_option
@_weight_option("--lambda1", required=False)
@_weight_option("--lambda2", required=False)
@_weight_option("--mu1", required=False)
@_weight_option("--mu2", required=False)
@click.option("--max", "max_coord", type=int, default=None, help="Sweep every quadruple whose sum has coordinates <= N.")
@jobs_option
@format_option
@out_option
@click.pass_context
def schur(ctx, lie_type, lambda1, lambda2, mu1, mu2, max_coord, jobs, output_format, out):
    """Compares V(lambda1) (x) V(lambda2) with V(mu1) (x) V(mu2) summand by summand."""
    given = [w for w in (lambda1, lambda2, mu1, mu2) if w is not None]
    if given and len(given) != 4:
        raise click.UsageError("pass all four of --lambda1 --lambda2 --mu1 --mu2, or none of them with --max")
    if not given and max_coord is None:
        raise click.UsageError("pass the four weights or --max N")

    with guarded(ctx):
        if given:
            cfg = _config(type=lie_type, jobs=jobs, output_format=output_format, out=out)
            report = compare_quadruple(cfg.lie_type, tuple(Weight(*w) for w in given))
            emit(render_schur([report], cfg.output_format, color=_color(cfg.out)), cfg.out)
            passed = report.verdict
        else:
            cfg = _config(type=lie_type, max_coord=max_coord, jobs=jobs, output_format=output_format, out=out)
            runner = SweepRunner(cfg, show_progress=not ctx.obj["quiet"])
            summary = runner.run_schur()
            emit(render_schur(runner.schur_reports, cfg.output_format, summary=summary, color=_color(cfg.out)), cfg.out)
            passed = summary.passed
        if not passed:
            ctx.exit(EXIT_FAILURE)


def main() -> None:
    cli(obj={})


if __name__ == "__main__":
    main()
