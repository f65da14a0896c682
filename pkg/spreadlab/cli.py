"""Command line front end.

Exit codes: 0 when every check passes, 1 when a check fails (its witness is
written with the report), 2 for invalid input or unwritable output.
"""
from typing import Optional
import functools
import logging
import os

import click
import numpy as np

from . import create_app
from .emit import CLASSES_HEADER, CURVE_HEADER, DTABLE_HEADER, class_rows, curve_rows, dtable_rows
from .error_logger import FailureLogger
from .exceptions import ConfigurationError, GeometryError, NotAcentric, NotO2Admissible, OrientationMismatch
from .geometry.parallelisms import (
    ClassId,
    Gamma,
    ParallelismSpec,
    Placement,
    canonicalize,
    clifford_compare,
    distinctness_witness,
    parallel_class_of,
    partition_failure_witness,
    stabilizer_check,
)
from .geometry.projective_core import OrientedLine, line_from_point_direction
from .geometry.spreads import build_spread, regulus_line, validate_profile
from .storage import ReportStore, dumps_csv, dumps_report
from .tasks import resolve_workers
from .validators import RunConfig, load_run_config
from .verify import (
    CheckReport,
    Tolerances,
    check_clifford,
    check_parallelism,
    check_spread,
    run_acceptance,
)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INVALID = 2


class InputError(click.ClickException):
    """Invalid configuration or unwritable output"""
    exit_code = EXIT_INVALID


def _read_json(path: str) -> dict:
    data, error = ReportStore().load_json(path)
    if error:
        raise InputError(f"Cannot read {path}: {error}")
    return data


def _run_config(ctx, profile_path, **overrides) -> RunConfig:
    data = _read_json(profile_path)
    if isinstance(data, dict) and 'kind' in data:
        data = {'profile': data}
    if not isinstance(data, dict):
        raise InputError(f"{profile_path} does not hold a JSON object")
    data = dict(data)

    s, t = overrides.pop('placement_s', None), overrides.pop('placement_t', None)
    if s is not None or t is not None:
        placement = dict(data.get('placement', {}))
        if s is not None:
            placement['s'] = s
        if t is not None:
            placement['t'] = t
        data['placement'] = placement
    for key, value in overrides.items():
        if value is not None:
            data[key] = value
    if data.get('oriented') is False and 'gamma' not in data:
        data['gamma'] = Gamma.O2.value
    try:
        return load_run_config(data)
    except (ConfigurationError, GeometryError) as e:
        ctx.obj['failures'].log_error(str(e), type(e).__name__, data.get('command'))
        raise InputError(str(e))


def _emit(ctx, payload, output: Optional[str]) -> None:
    if output:
        path, error = ReportStore().save_report(payload, output)
        if error:
            raise InputError(f"Cannot write {output}: {error}")
        click.echo(f"Report written to {path}")
    else:
        click.echo(dumps_report(payload), nl=False)


def _finish(ctx, report: CheckReport, output: Optional[str]) -> None:
    _emit(ctx, report, output)
    if not report.passed:
        ctx.obj['failures'].log_failure(report)
    ctx.exit(EXIT_PASS if report.passed else EXIT_FAIL)


def run_options(f):
    """Options shared by every command that reads a run configuration"""
    @click.option('--profile', 'profile_path', required=True, type=click.Path(dir_okay=False),
                  help='Run configuration or bare profile JSON')
    @click.option('--handedness', type=click.Choice(['1', '-1']), default=None, help='Screw sense h')
    @click.option('--placement-s', type=float, default=None, help='Vertical scale s > 0')
    @click.option('--placement-t', type=float, default=None, help='Vertical shift t')
    @click.option('--gamma', type=click.Choice([g.value for g in Gamma]), default=None)
    @click.option('--oriented/--no-oriented', default=None, help='Oriented or ordinary parallelism')
    @click.option('--samples', type=click.IntRange(min=0), default=None)
    @click.option('--seed', type=click.IntRange(min=0), default=None)
    @click.option('--output', type=click.Path(dir_okay=False), default=None, help='Report path')
    @functools.wraps(f)
    def wrapper(*args, handedness=None, **kwargs):
        kwargs['handedness'] = int(handedness) if handedness is not None else None
        return f(*args, **kwargs)
    return wrapper


def _config_from(ctx, profile_path, handedness, placement_s, placement_t, gamma, oriented,
                 samples, seed, output) -> RunConfig:
    return _run_config(ctx, profile_path, handedness=handedness, placement_s=placement_s,
                       placement_t=placement_t, gamma=gamma, oriented=oriented,
                       samples=samples, seed=seed, output=output)


@click.group()
@click.option('--env', default=None, help='Configuration name (development, testing, production)')
@click.option('--threads', type=click.IntRange(min=0), default=None, help='Worker threads (0 = auto)')
@click.pass_context
def cli(ctx, env, threads):
    """Rotational spreads and parallelisms of real projective 3-space."""
    if ctx.obj is not None:
        return
    try:
        app = create_app(env or os.getenv('SPREADLAB_ENV', 'default'))
    except ConfigurationError as e:
        raise InputError(str(e))
    ctx.obj = {
        'app': app,
        'workers': resolve_workers(threads if threads is not None else app.settings['THREADS']),
        'failures': FailureLogger(app.settings.get('LOG_DIR')),
    }


@cli.group()
def profile():
    """Profile functions a(r), b(r)."""


@profile.command('validate')
@run_options
@click.pass_context
def profile_validate(ctx, output, **options):
    """Numeric spread conditions of a profile"""
    config = _config_from(ctx, output=output, **options)
    report = validate_profile(config.profile, seed=config.seed)
    _emit(ctx, report, output)
    ctx.exit(EXIT_PASS if report.passed else EXIT_FAIL)


@cli.group()
def spread():
    """Rotational spreads."""


@spread.command('build')
@run_options
@click.option('--radii', type=int, default=9, show_default=True, help='Regulus radii on [0.1, 10]')
@click.option('--angles', type=int, default=8, show_default=True, help='Lines per regulus')
@click.pass_context
def spread_build(ctx, output, radii, angles, **options):
    """Sampled member lines of the spread"""
    config = _config_from(ctx, output=output, **options)
    S = build_spread(config.profile, config.handedness)
    lines = []
    for r in np.logspace(-1, 1, radii):
        for phi in np.linspace(0.0, 2.0 * np.pi, angles, endpoint=False):
            lines.append({'r': float(r), 'phi': float(phi), 'line': regulus_line(S, float(r), float(phi)).to_list()})
    _emit(ctx, {
        'profile': config.profile.to_dict(),
        'handedness': config.handedness,
        'Z_plus': S.Z_plus.to_list(),
        'V_plus': S.V_plus.to_list(),
        'lines': lines,
    }, output)
    ctx.exit(EXIT_PASS)


@spread.command('check')
@run_options
@click.pass_context
def spread_check(ctx, output, **options):
    """Covering and disjointness on random samples"""
    config = _config_from(ctx, output=output, **options)
    tolerances = _tolerances(config)
    S = build_spread(config.profile, config.handedness)
    report = check_spread(S, config.samples, config.samples, config.seed, tolerances, ctx.obj['workers'])
    _finish(ctx, report, output)


def _tolerances(config: RunConfig) -> Tolerances:
    try:
        return Tolerances.from_overrides(config.tol)
    except ConfigurationError as e:
        raise InputError(str(e))


@cli.group()
def parallelism():
    """Parallelisms generated by the rotation group."""


@parallelism.command('build')
@run_options
@click.pass_context
def parallelism_build(ctx, output, **options):
    """Canonical form and symmetry of a parallelism"""
    config = _config_from(ctx, output=output, **options)
    spec = config.spec()
    try:
        profile, handedness = canonicalize(spec)
    except NotO2Admissible as e:
        raise InputError(str(e))
    stabilizer = stabilizer_check(spec, seed=config.seed)
    _emit(ctx, {
        'spec': spec.to_dict(),
        'canonical_profile': profile.to_dict(),
        'handedness': handedness,
        'half_turn_invariant': stabilizer.invariant,
        'half_turn_gap': stabilizer.worst_gap,
    }, output)
    ctx.exit(EXIT_PASS)


@parallelism.command('check')
@run_options
@click.pass_context
def parallelism_check(ctx, output, **options):
    """Unique class and round trip for random lines"""
    config = _config_from(ctx, output=output, **options)
    report = check_parallelism(config.spec(), config.samples, config.seed,
                               _tolerances(config), ctx.obj['workers'])
    _finish(ctx, report, output)


@parallelism.command('classify')
@run_options
@click.option('--line', 'pluecker', nargs=6, type=float, default=None, help='Pluecker vector p12 .. p34')
@click.option('--point', nargs=3, type=float, default=None, help='Affine point of the line')
@click.option('--direction', nargs=3, type=float, default=None, help='Direction of the line')
@click.option('--expected', nargs=3, type=float, default=None, help='Expected class axis')
@click.pass_context
def parallelism_classify(ctx, output, pluecker, point, direction, expected, **options):
    """Parallel class of one oriented line"""
    config = _config_from(ctx, output=output, **options)
    try:
        if pluecker:
            line = OrientedLine.from_vector(pluecker)
        elif point and direction:
            line = line_from_point_direction(point, direction)
        else:
            raise InputError("Give --line or both --point and --direction")
    except GeometryError as e:
        raise InputError(str(e))

    spec = config.spec()
    expected_id = ClassId(expected, spec.oriented) if expected else None
    try:
        class_id, residual = parallel_class_of(spec, line, expected=expected_id)
    except NotO2Admissible as e:
        raise InputError(str(e))
    except OrientationMismatch as e:
        report = CheckReport(name='classify', passed=False, residual=0.0, samples=1, seed=config.seed,
                             parameters=spec.to_dict(),
                             witness={'line': line.to_list(), 'error': str(e),
                                      'actual_class': e.actual.to_list() if e.actual else None})
        _finish(ctx, report, output)
    except GeometryError as e:
        report = CheckReport(name='classify', passed=False, residual=float('inf'), samples=1,
                             seed=config.seed, parameters=spec.to_dict(),
                             witness={'line': line.to_list(), 'error': str(e)})
        _finish(ctx, report, output)
    else:
        passed = expected_id is None or class_id.is_close(expected_id)
        report = CheckReport(name='classify', passed=passed, residual=residual, samples=1,
                             seed=config.seed, parameters=spec.to_dict(),
                             details={'line': line.to_list(), 'class': class_id.to_list()})
        _finish(ctx, report, output)


@cli.group()
def clifford():
    """Comparison with Clifford parallelism."""


@clifford.command('compare')
@run_options
@click.option('--literal', is_flag=True, help='Compare without homothety normal form')
@click.pass_context
def clifford_compare_command(ctx, output, literal, **options):
    """Agreement of the parallel classes with Clifford classes"""
    config = _config_from(ctx, output=output, **options)
    samples = config.samples if options.get('samples') is not None else 500
    if literal:
        comparison = clifford_compare(config.spec(), samples, config.seed, normalize=False)
        report = CheckReport(name='clifford', passed=comparison.all_agree, residual=comparison.max_deviation,
                             samples=samples, seed=config.seed, parameters=config.spec().to_dict(),
                             details=comparison.to_dict())
    else:
        report = check_clifford(config.spec(), samples, config.seed, _tolerances(config))
    _finish(ctx, report, output)


@cli.group()
def witness():
    """Counterexample witnesses."""


@witness.command('acentric')
@run_options
@click.pass_context
def witness_acentric(ctx, output, **options):
    """Line Z in two non-oriented classes of an off-center family"""
    config = _config_from(ctx, output=output, **options)
    spec = ParallelismSpec(config.profile, config.handedness, config.placement, True, Gamma.SO2)
    try:
        found = partition_failure_witness(spec)
    except NotAcentric as e:
        report = CheckReport(name='witness_acentric', passed=False, residual=0.0, samples=1,
                             seed=config.seed, parameters=spec.to_dict(), witness={'error': str(e)})
        _finish(ctx, report, output)
    report = CheckReport(name='witness_acentric', passed=found.axis_fixed and found.gap > 1e-6,
                         residual=found.gap, samples=1, seed=config.seed,
                         parameters=spec.to_dict(), witness=found.to_dict())
    _finish(ctx, report, output)


@cli.command('distinct')
@run_options
@click.option('--other', 'other_path', type=click.Path(dir_okay=False), default=None,
              help='Second run configuration (defaults to the first)')
@click.option('--other-s', type=float, default=None, help='Placement scale of the second parallelism')
@click.option('--other-t', type=float, default=None, help='Placement shift of the second parallelism')
@click.option('--trials', type=click.IntRange(min=1), default=16, show_default=True)
@click.option('--expect', type=click.Choice(['distinct', 'same']), default='distinct', show_default=True)
@click.pass_context
def distinct(ctx, output, other_path, other_s, other_t, trials, expect, **options):
    """Set-distinctness of two parallelisms"""
    first = _config_from(ctx, output=output, **options)
    second = _run_config(ctx, other_path) if other_path else first
    placement = Placement(other_s if other_s is not None else second.placement.s,
                          other_t if other_t is not None else second.placement.t)
    spec_b = ParallelismSpec(second.profile, second.handedness, placement, second.oriented, second.gamma)
    found = distinctness_witness(first.spec(), spec_b, trials=trials, seed=first.seed)
    passed = (found is not None) == (expect == 'distinct')
    report = CheckReport(name='distinct', passed=passed, residual=found.gap if found else 0.0,
                         samples=trials, seed=first.seed,
                         parameters={'a': first.spec().to_dict(), 'b': spec_b.to_dict()},
                         witness=found.to_dict() if found else None)
    _finish(ctx, report, output)


@cli.group()
def emit():
    """Plot data as CSV."""


def _write_csv(header, rows, output: Optional[str]) -> None:
    if output:
        path, error = ReportStore().save_csv(header, rows, output)
        if error:
            raise InputError(f"Cannot write {output}: {error}")
        click.echo(f"Data written to {path}")
    else:
        click.echo(dumps_csv(header, rows), nl=False)


@emit.command('curves')
@run_options
@click.pass_context
def emit_curves(ctx, output, **options):
    """Hyperbola branches x = X_r(z)"""
    config = _config_from(ctx, output=output, **options)
    _write_csv(CURVE_HEADER, curve_rows(config.profile), output)
    ctx.exit(EXIT_PASS)


@emit.command('dtable')
@run_options
@click.pass_context
def emit_dtable(ctx, output, **options):
    """Distance function d(r)"""
    config = _config_from(ctx, output=output, **options)
    _write_csv(DTABLE_HEADER, dtable_rows(config.profile), output)
    ctx.exit(EXIT_PASS)


@emit.command('classes')
@run_options
@click.pass_context
def emit_classes(ctx, output, **options):
    """Sampled members of a grid of parallel classes"""
    config = _config_from(ctx, output=output, **options)
    spec = config.spec()
    try:
        canonicalize(spec)
    except NotO2Admissible as e:
        raise InputError(str(e))
    _write_csv(CLASSES_HEADER, class_rows(spec), output)
    ctx.exit(EXIT_PASS)


@cli.group()
def verify():
    """Acceptance suites."""


@verify.command('all')
@click.option('--seed', type=click.IntRange(min=0), default=7, show_default=True)
@click.option('--scale', type=click.FloatRange(min=0.0, min_open=True), default=1.0, show_default=True,
              help='Fraction of the full sample counts')
@click.option('--output', type=click.Path(dir_okay=False), default=None)
@click.pass_context
def verify_all(ctx, seed, scale, output):
    """Run every acceptance family"""
    logger.info(f"verify all: seed {seed}, scale {scale}, workers {ctx.obj['workers']}")
    reports = run_acceptance(Tolerances.from_overrides(), seed=seed, scale=scale, workers=ctx.obj['workers'])
    for report in reports:
        click.echo(f"{'✓' if report.passed else '✗'} {report.name}", err=True)
        if not report.passed:
            ctx.obj['failures'].log_failure(report)
    _emit(ctx, {'reports': reports, 'passed': all(r.passed for r in reports)}, output)
    ctx.exit(EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL)


@cli.command('run')
@click.option('--config', 'config_path', required=True, type=click.Path(dir_okay=False),
              help='Run configuration with a command key')
@click.pass_context
def run(ctx, config_path):
    """Run the command named in a configuration file"""
    config = _run_config(ctx, config_path)
    if config.command is None:
        raise InputError(f"{config_path} names no command")
    command = cli
    for name in config.command.value.split():
        command = command.get_command(ctx, name)
    params = {p.name for p in command.params}
    options = {'output': config.output}
    if 'profile_path' in params:
        options['profile_path'] = config_path
    else:
        options['seed'] = config.seed
    logger.info(f"run: {config.command.value} from {config_path}")
    ctx.invoke(command, **options)


def main(argv=None) -> int:
    """Run the command line and return its exit code"""
    try:
        rv = cli.main(args=argv, prog_name='spreadlab', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code if isinstance(e, InputError) else EXIT_INVALID
    except click.exceptions.Abort:
        return EXIT_INVALID
    except (ConfigurationError, GeometryError) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_INVALID
    return rv if isinstance(rv, int) else EXIT_PASS
