"""CLI main application using Typer."""

import json
import logging
import logging.config
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional

import click
import typer
from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from core.application.dto.experiment_spec import ExperimentSpec, SweepVariable
from core.application.use_cases.analyze_scenario import AnalyzeScenarioUseCase
from core.application.use_cases.run_sweep import RunSweepUseCase
from core.application.use_cases.validate_model import ValidateModelUseCase
from core.domain.exceptions import (
    ConfigurationError,
    InvalidArgumentError,
    ModelDomainError,
    SimulationStallError,
    SolverFailureError,
    UndefinedQuantityError,
)
from core.domain.value_objects.protocol_params import ProtocolMode, ProtocolParams
from core.infrastructure.config.settings import Settings, get_settings
from core.infrastructure.experiments import build_preset, list_available_presets
from core.infrastructure.logging.run_logger import run_logger
from core.infrastructure.repositories.csv_result_repository import CsvResultRepository
from core.infrastructure.simulation.runner import ReplicationRunner

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_SOLVER = 2
EXIT_IO = 3
EXIT_VALIDATION = 4

# Create Typer app
app = typer.Typer(
    name="fdmac",
    help="FD-MAC - saturation throughput of full-duplex random access, analysis and simulation",
    add_completion=False,
)

# Rich console for pretty output; errors go to stderr so stdout stays parseable
console = Console()
err_console = Console(stderr=True)


class ModeChoice(str, Enum):
    FD = "fd"
    CSMA = "csma"
    BOTH = "both"


class EngineChoice(str, Enum):
    ANALYTIC = "analytic"
    SIM = "sim"
    BOTH = "both"


def _configure_logging(settings: Settings, verbose: bool) -> None:
    logging.config.dictConfig(settings.get_logging_config("INFO" if verbose else None))


def _fail(message: str, code: int) -> NoReturn:
    err_console.print(f"[red]Error: {message}[/red]")
    raise typer.Exit(code)


def _choice(value: str, choices: type, option: str) -> Enum:
    try:
        return choices(value.lower())
    except ValueError:
        _fail(f"{option} must be one of {[c.value for c in choices]}, got {value!r}", EXIT_USAGE)


def _modes(choice: ModeChoice) -> List[str]:
    return ["fd", "csma"] if choice is ModeChoice.BOTH else [choice.value]


def _engines(choice: EngineChoice) -> List[str]:
    return ["analytic", "sim"] if choice is EngineChoice.BOTH else [choice.value]


def _settings_defaults(settings: Settings) -> Dict[str, Any]:
    return {
        "name": "custom",
        "replications": settings.replications,
        "seed_base": settings.seed_base,
        "warmup_attempts": settings.warmup_attempts,
        "measure_attempts": settings.measure_attempts,
        "output_path": f"{settings.output_dir}/custom.csv",
    }


def build_spec(
    settings: Settings,
    config: Optional[Path] = None,
    preset: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> ExperimentSpec:
    """
    Layer settings defaults, a preset, a scenario file and flag overrides, then validate.

    Later sources win; the scenario's `base` mapping is merged key by key.
    """
    data = _settings_defaults(settings)
    if preset:
        data.update(build_preset(preset, settings))
    if config:
        from_file = ExperimentSpec.load(str(config))
        base = {**data.get("base", {}), **from_file.pop("base", {})}
        data.update(from_file)
        data["base"] = base
    data.update({key: value for key, value in (overrides or {}).items() if value is not None})
    return ExperimentSpec.from_mapping(data)


def _run_overrides(
    settings: Settings,
    mode: Optional[str],
    engine: Optional[str],
    seed: Optional[int],
    replications: Optional[int],
    warmup: Optional[int],
    measure: Optional[int],
    full_scale: bool,
) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {
        "seed_base": seed,
        "replications": replications,
        "warmup_attempts": warmup,
        "measure_attempts": measure if measure is not None else (
            settings.full_scale_measure_attempts if full_scale else None
        ),
    }
    if mode is not None:
        overrides["modes"] = _modes(_choice(mode, ModeChoice, "--mode"))
    if engine is not None:
        overrides["engines"] = _engines(_choice(engine, EngineChoice, "--engine"))
    return overrides


def _log_x(variable: SweepVariable) -> Optional[int]:
    if variable is SweepVariable.CW_MIN:
        return 2
    if variable is SweepVariable.USERS:
        return None
    return 10


def _write_run_log(path: Optional[Path]) -> None:
    if path is None:
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(run_logger.export_logs("json"), encoding="utf-8")
    except OSError as e:
        _fail(f"cannot write run log {path}: {e}", EXIT_IO)


@app.command()
def analyze(
    users: int = typer.Option(100, "--users", "-m", help="Number of saturated users M"),
    packet_len: int = typer.Option(1000, "--packet-len", "-l", help="Packet length L in slots"),
    cw_min: int = typer.Option(16, "--cw-min", help="Initial contention window"),
    w_max: int = typer.Option(11, "--w-max", help="Largest backoff stage"),
    cw_max: Optional[int] = typer.Option(None, "--cw-max", help="Largest window; overrides --w-max"),
    p_false_alarm: float = typer.Option(1e-3, "--pf", help="False alarm probability"),
    p_miss: float = typer.Option(1e-2, "--pm", help="Miss detection probability"),
    difs: int = typer.Option(2, "--difs", help="DIFS in slots"),
    mode: str = typer.Option("fd", "--mode", help="fd, csma or both"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Scenario file; its base replaces the flags"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Verbose output"),
):
    """Solve one scenario analytically and print the report as JSON."""
    settings = get_settings()
    _configure_logging(settings, verbose)
    modes = _modes(_choice(mode, ModeChoice, "--mode"))

    try:
        if config:
            spec = build_spec(settings, config=config)
            fields = spec.base.model_dump()
            cw_max = cw_max if cw_max is not None else spec.cw_max
        else:
            fields = {
                "m_users": users,
                "packet_len": packet_len,
                "cw_min": cw_min,
                "w_max": w_max,
                "p_false_alarm": p_false_alarm,
                "p_miss": p_miss,
                "difs": difs,
            }
        params = ProtocolParams(**fields)
        if cw_max is not None:
            params = params.with_cw_max(params.cw_min, cw_max)
    except (ConfigurationError, InvalidArgumentError) as e:
        _fail(str(e), EXIT_USAGE)

    use_case = AnalyzeScenarioUseCase(settings.solver_tolerance, settings.solver_max_iterations)
    results: Dict[str, Any] = {}
    try:
        for name in modes:
            results[name] = use_case.execute(params.with_mode(ProtocolMode(name))).to_dict()
    except (SolverFailureError, ModelDomainError, UndefinedQuantityError) as e:
        _fail(str(e), EXIT_SOLVER)

    payload = results[modes[0]] if len(modes) == 1 else results
    typer.echo(json.dumps(payload, indent=2))


@app.command()
def sweep(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Experiment JSON file"),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Built-in experiment (see `presets`)"),
    mode: Optional[str] = typer.Option(None, "--mode", help="fd, csma or both"),
    engine: Optional[str] = typer.Option(None, "--engine", help="analytic, sim or both"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the first replication"),
    replications: Optional[int] = typer.Option(None, "--replications", "-r", help="Replications per point"),
    warmup: Optional[int] = typer.Option(None, "--warmup", help="Warmup attempts"),
    measure: Optional[int] = typer.Option(None, "--measure", help="Measured attempts"),
    full_scale: bool = typer.Option(False, "--full-scale", help="Measure the full-scale number of attempts (10^6 by default)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="CSV output path"),
    no_timestamp: bool = typer.Option(False, "--no-timestamp", help="Omit the generation comment line"),
    per_replication: bool = typer.Option(False, "--per-replication", help="Add one row per replication"),
    gnuplot: bool = typer.Option(False, "--gnuplot", help="Also write a gnuplot script next to the CSV"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes for replications"),
    log_json: Optional[Path] = typer.Option(None, "--log-json", help="Write the structured run log here"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Verbose output"),
):
    """Sweep one parameter and write a CSV of throughput results."""
    settings = get_settings()
    _configure_logging(settings, verbose)
    run_logger.clear()

    try:
        overrides = _run_overrides(settings, mode, engine, seed, replications, warmup, measure, full_scale)
        overrides["output_path"] = str(out) if out else None
        spec = build_spec(settings, config=config, preset=preset, overrides=overrides)
    except ConfigurationError as e:
        _fail(str(e), EXIT_USAGE)

    points = spec.points()
    console.print(Panel.fit(
        f"[bold]Sweep:[/bold] {spec.name} over {spec.sweep_variable.value}\n"
        f"[dim]Points:[/dim] {len(points)}  "
        f"[dim]Engines:[/dim] {', '.join(e.value for e in spec.engines)}  "
        f"[dim]Modes:[/dim] {', '.join(m.value for m in spec.modes)}\n"
        f"[dim]Output:[/dim] {spec.output_path}",
        title="FD-MAC",
        border_style="blue",
    ))

    repository = CsvResultRepository()
    use_case = RunSweepUseCase(
        result_repository=repository,
        simulation_engine=ReplicationRunner(workers or settings.max_workers),
        analyzer=AnalyzeScenarioUseCase(settings.solver_tolerance, settings.solver_max_iterations),
        run_logger=run_logger,
    )
    comment = None if no_timestamp else (
        f"generated {datetime.now(timezone.utc).isoformat(timespec='seconds')} by fdmac {settings.app_version}"
    )

    try:
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            console=console,
            transient=True,
        ) as progress:
            task = progress.add_task("Sweeping...", total=len(points))
            result = use_case.execute(
                spec,
                comment=comment,
                per_replication=per_replication,
                on_point=lambda point: progress.advance(task),
            )
        if gnuplot:
            script = repository.write_gnuplot_script(
                result.output_path, result.rows, spec.sweep_variable.label, _log_x(spec.sweep_variable)
            )
            console.print(f"[green]✓[/green] Gnuplot script: {script}")
    except OSError as e:
        _write_run_log(log_json)
        _fail(f"cannot write results: {e}", EXIT_IO)
    except SimulationStallError as e:
        _write_run_log(log_json)
        _fail(str(e), EXIT_SOLVER)

    _write_run_log(log_json)

    table = Table(title=f"{spec.name} results")
    table.add_column("Series", style="cyan")
    table.add_column(spec.sweep_variable.value, justify="right")
    table.add_column("Mode")
    table.add_column("Engine")
    table.add_column("Throughput", justify="right", style="green")
    table.add_column("Std. err.", justify="right", style="dim")
    for row in sorted(result.rows, key=lambda r: r.sort_key()):
        if isinstance(row.replication, int):
            continue
        table.add_row(
            row.sweep_name,
            f"{row.sweep_value:g}",
            row.mode.value,
            row.engine.value,
            "failed" if row.failed else f"{row.throughput:.6f}",
            "" if row.stderr is None else f"{row.stderr:.2e}",
        )
    console.print(table)
    console.print(f"[green]✓[/green] Saved {len(result.rows)} rows to {result.output_path}")

    if not result.success:
        _fail(f"{len(result.failures)} point(s) could not be solved", EXIT_SOLVER)


@app.command()
def validate(
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Experiment JSON file"),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Built-in experiment (see `presets`)"),
    mode: str = typer.Option("fd", "--mode", help="fd, csma or both"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the first replication"),
    replications: Optional[int] = typer.Option(None, "--replications", "-r", help="Replications per point"),
    warmup: Optional[int] = typer.Option(None, "--warmup", help="Warmup attempts"),
    measure: Optional[int] = typer.Option(None, "--measure", help="Measured attempts"),
    full_scale: bool = typer.Option(False, "--full-scale", help="Measure the full-scale number of attempts (10^6 by default)"),
    tolerance: Optional[float] = typer.Option(None, "--tolerance", help="Largest accepted |sim - analytic|"),
    report: Optional[Path] = typer.Option(None, "--report", help="Write the validation report as JSON"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes for replications"),
    log_json: Optional[Path] = typer.Option(None, "--log-json", help="Write the structured run log here"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Verbose output"),
):
    """Compare analytic throughput with simulation at every sweep point."""
    settings = get_settings()
    _configure_logging(settings, verbose)
    run_logger.clear()

    try:
        overrides = _run_overrides(settings, mode, None, seed, replications, warmup, measure, full_scale)
        spec = build_spec(settings, config=config, preset=preset, overrides=overrides)
    except ConfigurationError as e:
        _fail(str(e), EXIT_USAGE)

    limit = tolerance if tolerance is not None else settings.tolerance
    if limit <= 0:
        _fail("--tolerance must be positive", EXIT_USAGE)

    use_case = ValidateModelUseCase(
        simulation_engine=ReplicationRunner(workers or settings.max_workers),
        analyzer=AnalyzeScenarioUseCase(settings.solver_tolerance, settings.solver_max_iterations),
        run_logger=run_logger,
    )
    points = spec.points()

    try:
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            console=console,
            transient=True,
        ) as progress:
            task = progress.add_task("Validating...", total=len(points))
            outcome = use_case.execute(spec, limit, on_point=lambda point: progress.advance(task))
    except SimulationStallError as e:
        _write_run_log(log_json)
        _fail(str(e), EXIT_SOLVER)

    _write_run_log(log_json)
    if report:
        try:
            report.parent.mkdir(parents=True, exist_ok=True)
            report.write_text(json.dumps(outcome.to_dict(), indent=2), encoding="utf-8")
        except OSError as e:
            _fail(f"cannot write report {report}: {e}", EXIT_IO)

    table = Table(title=f"Validation of {spec.name} (tolerance {limit})")
    table.add_column("Series", style="cyan")
    table.add_column(spec.sweep_variable.value, justify="right")
    table.add_column("Mode")
    table.add_column("Analytic", justify="right")
    table.add_column("Simulated", justify="right")
    table.add_column("|Δ|", justify="right")
    table.add_column("", justify="center")
    for point in outcome.points:
        table.add_row(
            point.sweep_name,
            f"{point.sweep_value:g}",
            point.mode.value,
            "failed" if point.analytic is None else f"{point.analytic:.6f}",
            f"{point.simulated:.6f}",
            "" if point.delta is None else f"{abs(point.delta):.6f}",
            "[green]✓[/green]" if point.passed else "[red]✗[/red]",
        )
    console.print(table)

    if not outcome.passed:
        _fail(f"validation failed: max |Δ| = {outcome.max_abs_delta}", EXIT_VALIDATION)
    console.print("[green]✓[/green] Analytic model agrees with simulation")


@app.command()
def presets():
    """List built-in experiments."""
    table = Table(title="Experiment presets")
    table.add_column("Name", style="cyan")
    table.add_column("Description", style="green")
    for name, description in list_available_presets().items():
        table.add_row(name, description)
    console.print(table)


@app.command()
def config():
    """Show current configuration."""
    settings = get_settings()

    table = Table(title="FD-MAC Configuration")
    table.add_column("Setting", style="cyan")
    table.add_column("Value", style="green")
    for name, value in settings.model_dump().items():
        table.add_row(name, "auto" if value is None else str(value))

    console.print(table)


@app.command()
def version():
    """Show version information."""
    settings = get_settings()
    console.print(f"fdmac CLI v{settings.app_version}")
    console.print("Full-duplex MAC saturation throughput: analysis and simulation")


def main() -> None:
    """Console entry point; click usage errors exit with the usage code rather than click's 2."""
    try:
        code = app(standalone_mode=False)
    except click.exceptions.Abort:
        raise SystemExit(EXIT_USAGE)
    except click.UsageError as e:
        e.show()
        raise SystemExit(EXIT_USAGE)
    raise SystemExit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()
