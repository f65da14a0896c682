from dataclasses import dataclass, field
from enum import Enum
from numbers import Real
from typing import Dict, List, Optional

from .config import Config
from .exceptions import ConfigurationError, GeometryError
from .geometry.parallelisms import Gamma, ParallelismSpec, Placement
from .geometry.spreads import Profile, ProfileKind, profile_from_dict


class Command(Enum):
    PROFILE_VALIDATE = "profile validate"
    SPREAD_BUILD = "spread build"
    SPREAD_CHECK = "spread check"
    PARALLELISM_BUILD = "parallelism build"
    PARALLELISM_CHECK = "parallelism check"
    PARALLELISM_CLASSIFY = "parallelism classify"
    CLIFFORD_COMPARE = "clifford compare"
    WITNESS_ACENTRIC = "witness acentric"
    DISTINCT = "distinct"
    EMIT_CURVES = "emit curves"
    EMIT_DTABLE = "emit dtable"
    EMIT_CLASSES = "emit classes"
    VERIFY_ALL = "verify all"

    def to_dict(self):
        return self.value


# Parameters accepted per profile kind, besides the shared scale keys
PROFILE_PARAMETERS = {
    ProfileKind.REGULAR: {'d'},
    ProfileKind.SATZ1: {'w', 'c'},
    ProfileKind.SATZ2: {'d'},
    ProfileKind.TABLE: {'samples'},
}
SCALE_KEYS = {'slope_scale', 'height_scale', 'shift', 'radius_scale'}
RUN_CONFIG_KEYS = {'profile', 'handedness', 'placement', 'gamma', 'oriented',
                   'samples', 'seed', 'tol', 'output', 'command'}
TOLERANCE_KEYS = set(Config.TOLERANCES)


def _is_number(value) -> bool:
    return isinstance(value, Real) and not isinstance(value, bool)


def validate_profile_spec(data) -> tuple[bool, str]:
    """Validate a profile object of the run configuration"""
    if not isinstance(data, dict):
        return False, "Profile must be an object"
    try:
        kind = ProfileKind(data.get('kind'))
    except ValueError:
        valid = ", ".join(k.value for k in ProfileKind)
        return False, f"Unknown profile kind '{data.get('kind')}'. Valid kinds: {valid}"

    allowed = PROFILE_PARAMETERS[kind] | SCALE_KEYS | {'kind'}
    unknown = sorted(set(data) - allowed)
    if unknown:
        return False, f"Unknown keys for {kind.value} profile: {', '.join(unknown)}"

    for key in (set(data) & (SCALE_KEYS | {'d', 'w', 'c'})):
        if not _is_number(data[key]):
            return False, f"Profile parameter '{key}' must be a number"

    if kind is ProfileKind.REGULAR and not data.get('d', 1.0) > 0:
        return False, "Regular profile needs d > 0"
    if kind is ProfileKind.SATZ1:
        if 'w' not in data:
            return False, "Satz1 profile needs w"
        if not 0 < data['w'] < 1:
            return False, f"Satz1 profile needs w in (0, 1), got {data['w']}"
    if kind is ProfileKind.SATZ2 and not abs(data.get('d', 1.0)) >= 0.5:
        return False, f"Satz2 profile needs |d| >= 1/2, got {data.get('d')}"
    if kind is ProfileKind.TABLE:
        samples = data.get('samples')
        if not isinstance(samples, list) or len(samples) < 3:
            return False, "Table profile needs at least 3 samples"
        for row in samples:
            if not isinstance(row, list) or len(row) != 3 or not all(_is_number(v) for v in row):
                return False, f"Table sample {row!r} is not a [r, a, b] triple"

    for key in ('slope_scale', 'radius_scale'):
        if key in data and not data[key] > 0:
            return False, f"Profile '{key}' must be positive"
    return True, f"Valid {kind.value} profile"


def validate_placement(data) -> tuple[bool, str]:
    if not isinstance(data, dict):
        return False, "Placement must be an object with s and t"
    unknown = sorted(set(data) - {'s', 't'})
    if unknown:
        return False, f"Unknown placement keys: {', '.join(unknown)}"
    s, t = data.get('s', 1.0), data.get('t', 0.0)
    if not _is_number(s) or not _is_number(t):
        return False, "Placement s and t must be numbers"
    if not s > 0:
        return False, f"Placement scale s must be positive, got {s}"
    return True, "Valid placement"


def validate_tolerances(data) -> tuple[bool, str]:
    if not isinstance(data, dict):
        return False, "Tolerance overrides must be an object"
    unknown = sorted(set(data) - TOLERANCE_KEYS)
    if unknown:
        return False, f"Unknown tolerance keys: {', '.join(unknown)}. Valid keys: {', '.join(sorted(TOLERANCE_KEYS))}"
    for key, value in data.items():
        if not _is_number(value) or not value > 0:
            return False, f"Tolerance '{key}' must be a positive number"
    return True, "Valid tolerances"


@dataclass
class ValidationResult:
    is_valid: bool
    message: str
    errors: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'valid': self.is_valid,
            'message': self.message,
            'errors': self.errors
        }


def validate_run_config(data) -> ValidationResult:
    """Validate a full run configuration against the shared schema"""
    if not isinstance(data, dict):
        return ValidationResult(False, "Run configuration must be a JSON object", ["not an object"])

    errors = []
    unknown = sorted(set(data) - RUN_CONFIG_KEYS)
    if unknown:
        errors.append(f"Unknown keys: {', '.join(unknown)}")

    if 'profile' not in data:
        errors.append("Missing profile")
    else:
        is_valid, message = validate_profile_spec(data['profile'])
        if not is_valid:
            errors.append(message)

    if 'handedness' in data and data['handedness'] not in (1, -1):
        errors.append(f"Handedness must be 1 or -1, got {data['handedness']!r}")
    if 'placement' in data:
        is_valid, message = validate_placement(data['placement'])
        if not is_valid:
            errors.append(message)
    if 'gamma' in data and data['gamma'] not in [g.value for g in Gamma]:
        errors.append(f"Gamma must be SO2 or O2, got {data['gamma']!r}")
    if 'oriented' in data and not isinstance(data['oriented'], bool):
        errors.append("Oriented must be true or false")
    if data.get('oriented') is False and data.get('gamma', Gamma.O2.value) != Gamma.O2.value:
        errors.append("A non-oriented parallelism needs gamma O2")
    for key in ('samples', 'seed'):
        if key in data and (not isinstance(data[key], int) or isinstance(data[key], bool) or data[key] < 0):
            errors.append(f"{key.capitalize()} must be a non-negative integer")
    if 'tol' in data:
        is_valid, message = validate_tolerances(data['tol'])
        if not is_valid:
            errors.append(message)
    if 'output' in data and not isinstance(data['output'], str):
        errors.append("Output must be a path string")
    if 'command' in data and data['command'] not in [c.value for c in Command]:
        errors.append(f"Unknown command {data['command']!r}")

    if errors:
        return ValidationResult(False, f"{len(errors)} configuration error(s)", errors)
    return ValidationResult(True, "Valid run configuration")


@dataclass
class RunConfig:
    profile: Profile
    handedness: int = 1
    placement: Placement = field(default_factory=Placement)
    gamma: Gamma = Gamma.SO2
    oriented: bool = True
    samples: int = Config.DEFAULT_SAMPLES
    seed: int = Config.DEFAULT_SEED
    tol: Dict[str, float] = field(default_factory=dict)
    output: Optional[str] = None
    command: Optional[Command] = None

    def spec(self) -> ParallelismSpec:
        return ParallelismSpec(self.profile, self.handedness, self.placement, self.oriented, self.gamma)

    def to_dict(self) -> dict:
        return {
            'profile': self.profile.to_dict(),
            'handedness': self.handedness,
            'placement': self.placement.to_dict(),
            'gamma': self.gamma.value,
            'oriented': self.oriented,
            'samples': self.samples,
            'seed': self.seed,
            'tol': dict(self.tol),
            'output': self.output,
        }


def load_run_config(data) -> RunConfig:
    """Build a RunConfig from a full configuration or a bare profile object"""
    if isinstance(data, dict) and 'kind' in data:
        data = {'profile': data}
    result = validate_run_config(data)
    if not result.is_valid:
        raise ConfigurationError("; ".join(result.errors))

    oriented = data.get('oriented', True)
    default_gamma = Gamma.SO2.value if oriented else Gamma.O2.value
    placement = data.get('placement', {})
    handedness = data.get('handedness', 1)
    # A negative satz2 d is the mirror screw sense of |d|
    if data['profile']['kind'] == ProfileKind.SATZ2.value and data['profile'].get('d', 1.0) < 0:
        handedness = -handedness
    try:
        return RunConfig(
            profile=profile_from_dict(data['profile']),
            handedness=handedness,
            placement=Placement(float(placement.get('s', 1.0)), float(placement.get('t', 0.0))),
            gamma=Gamma(data.get('gamma', default_gamma)),
            oriented=oriented,
            samples=data.get('samples', Config.DEFAULT_SAMPLES),
            seed=data.get('seed', Config.DEFAULT_SEED),
            tol=dict(data.get('tol', {})),
            output=data.get('output'),
            command=Command(data['command']) if 'command' in data else None,
        )
    except GeometryError as e:
        raise ConfigurationError(str(e))
