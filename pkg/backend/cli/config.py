# backend/cli/config.py

"""
Flat ``section.key=value`` run configuration.

Every dimensioned key names its unit in a suffix (``geometry.d_um``,
``patch.sigma_l_mV``, ``gas.pressure_atm``); a few keys also accept an
alternative unit (``geometry.d_nm``). Anything not set keeps the default of the
headline scenario: n=4, beta=1e4, xenon at 293.15 K, d=30 um, 50 mV patches.
"""

import difflib
import logging
from decimal import Decimal, InvalidOperation
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from background.domain import GasSpec, PatchModel
from background.services import get_gas
from chameleon.domain import ChameleonModel
from experiment.domain import (
    COMPONENTS,
    LINEAR,
    LOG,
    SWEEP_BETA_RHO,
    SWEEP_D,
    SWEEP_P,
    ExperimentConfig,
    FigureSettings,
    SweepSpec,
)
from plates_core.exceptions import ConfigError, DomainError

from .forms import SECTION_FORMS, SWEEP_UNITS

logger = logging.getLogger(__name__)

ECHO_PREFIX = "# config: "

# Alternative unit suffix -> (canonical key, power of ten to the canonical unit)
UNIT_ALIASES: Dict[str, Tuple[str, int]] = {
    "geometry.d_nm": ("geometry.d_um", -3),
    "patch.sigma_l_V": ("patch.sigma_l_mV", 3),
    "patch.sigma_s_V": ("patch.sigma_s_mV", 3),
    "patch.lambda_min_nm": ("patch.lambda_min_um", -3),
    "patch.lambda_max_nm": ("patch.lambda_max_um", -3),
    "sweep.from_nm": ("sweep.from_um", -3),
    "sweep.to_nm": ("sweep.to_um", -3),
}

KNOWN_KEYS: Tuple[str, ...] = tuple(
    f"{section}.{name}" for section, form in SECTION_FORMS.items() for name in form.base_fields
)

UNIT_SUFFIXES = ("um", "nm", "mV", "V", "atm", "g_per_l", "g_per_l_per_atm", "K", "Fm2", "gev", "pN_per_cm2")

# Default sweep bounds per swept variable.
SWEEP_DEFAULTS = {SWEEP_P: (0.0, 0.5, LINEAR), SWEEP_D: (10.0, 100.0, LOG), SWEEP_BETA_RHO: (1e2, 1e6, LOG)}


class _Entry:
    __slots__ = ("value", "line")

    def __init__(self, value: str, line: Optional[int]):
        self.value = value
        self.line = line


def _resolve_key(key: str, line: Optional[int]) -> Tuple[str, int]:
    if key in UNIT_ALIASES:
        return UNIT_ALIASES[key]
    if key in KNOWN_KEYS:
        return key, 0

    all_keys = list(KNOWN_KEYS) + list(UNIT_ALIASES)
    with_suffix = [k for k in all_keys if k.startswith(key + "_") and k[len(key) + 1:] in UNIT_SUFFIXES]
    if with_suffix:
        raise ConfigError("missing unit suffix", key=key, line=line, suggestions=sorted(with_suffix))
    raise ConfigError(
        "unknown key", key=key, line=line, suggestions=difflib.get_close_matches(key, all_keys, n=3),
    )


def _shift(value, places: int) -> Decimal:
    """value times 10**places, exact in decimal."""
    text = value if isinstance(value, str) else repr(float(value))
    return Decimal(text).scaleb(places)


def _scaled(value: str, places: int, key: str, line: Optional[int]) -> str:
    if places == 0:
        return value
    try:
        return _decimal_text(_shift(value, places))
    except InvalidOperation:
        raise ConfigError(f"{value!r} is not a number", key=key, line=line) from None


def _collect(entries: Dict[str, _Entry], pairs: Iterable[Tuple[str, str, Optional[int]]]) -> None:
    seen_here = set()
    for key, value, line in pairs:
        canonical, places = _resolve_key(key, line)
        if canonical in seen_here:
            raise ConfigError("set more than once", key=key, line=line)
        seen_here.add(canonical)
        entries[canonical] = _Entry(_scaled(value, places, key, line), line)


def _split_line(raw: str, line: Optional[int]) -> Optional[Tuple[str, str]]:
    text = raw.strip()
    if not text or text.startswith("#"):
        return None
    if "=" not in text:
        raise ConfigError(f"expected key=value, got {text!r}", line=line)
    key, value = text.split("=", 1)
    return key.strip(), value.strip()


def _file_pairs(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        parts = _split_line(raw, number)
        if parts:
            yield parts[0], parts[1], number


def _override_pairs(overrides: Sequence[str]):
    for item in overrides:
        parts = _split_line(item, None)
        if parts is None:
            raise ConfigError(f"expected key=value, got {item!r}")
        yield parts[0], parts[1], None


def _clean_sections(entries: Dict[str, _Entry]) -> Dict[str, dict]:
    cleaned: Dict[str, dict] = {}
    for section, form_class in SECTION_FORMS.items():
        data = {}
        lines = {}
        for key, entry in entries.items():
            prefix, _, name = key.partition(".")
            if prefix == section:
                data[name] = entry.value
                lines[name] = entry.line
        form = form_class(data=data)
        if not form.is_valid():
            name, errors = next(iter(form.errors.items()))
            key = f"{section}.{name}" if name != "__all__" else section
            raise ConfigError(errors[0], key=key, line=lines.get(name))
        cleaned[section] = {k: v for k, v in form.cleaned_data.items() if v is not None and v != ""}
    return cleaned


def _si(data: dict, name: str, places: int, default: float) -> float:
    """A key given in milli- or micro-units, as an SI float; default is already SI."""
    if name not in data:
        return default
    return float(_shift(data[name], places))


def _build(cleaned: Dict[str, dict]) -> ExperimentConfig:
    model_data = cleaned["model"]
    model_defaults = ChameleonModel(n=4, beta=1e4)
    model = ChameleonModel(
        n=model_data.get("n", model_defaults.n),
        beta=model_data.get("beta", model_defaults.beta),
        lambda_gev=model_data.get("lambda_gev", model_defaults.lambda_gev),
        m_pl_gev=model_data.get("m_pl_gev", model_defaults.m_pl_gev),
        linearized_mass=model_data.get("linearized_mass", False),
    )

    gas_data = cleaned["gas"]
    name = gas_data.get("name", "Xe")
    fields = ("density_coeff_g_per_l_per_atm", "alpha_Fm2", "temperature_K")
    try:
        base = get_gas(name)
    except DomainError:
        missing = [f"gas.{f}" for f in fields if f not in gas_data]
        if missing:
            raise ConfigError(
                f"unknown gas {name!r}; define {', '.join(missing)}", key="gas.name",
            ) from None
        base = None
    gas = GasSpec(
        name=name,
        density_coeff=gas_data.get(fields[0], base.density_coeff if base else None),
        alpha=gas_data.get(fields[1], base.alpha if base else None),
        temperature=gas_data.get(fields[2], base.temperature if base else None),
    )

    patch_data = cleaned["patch"]
    defaults = PatchModel()
    patch = PatchModel(
        sigma_l=_si(patch_data, "sigma_l_mV", -3, defaults.sigma_l),
        sigma_s=_si(patch_data, "sigma_s_mV", -3, defaults.sigma_s),
        lambda_min=_si(patch_data, "lambda_min_um", -6, defaults.lambda_min),
        lambda_max=_si(patch_data, "lambda_max_um", -6, defaults.lambda_max),
    )

    sweep_data = cleaned["sweep"]
    variable = sweep_data.get("variable", SWEEP_P)
    unit = SWEEP_UNITS[variable]
    start, stop, spacing = SWEEP_DEFAULTS[variable]
    sweep = SweepSpec(
        variable=variable,
        start=sweep_data.get(f"from_{unit}", start),
        stop=sweep_data.get(f"to_{unit}", stop),
        points=sweep_data.get("points", SweepSpec.points),
        spacing=sweep_data.get("spacing", spacing),
    )

    fig_data = cleaned["figure"]
    fig_defaults = FigureSettings()
    figure = FigureSettings(
        points=fig_data.get("points", fig_defaults.points),
        d_range_um=(
            fig_data.get("d_from_um", fig_defaults.d_range_um[0]),
            fig_data.get("d_to_um", fig_defaults.d_range_um[1]),
        ),
        rho_g_per_l=fig_data.get("rho_g_per_l", fig_defaults.rho_g_per_l),
        beta_rho_g_per_l=fig_data.get("beta_rho_g_per_l", fig_defaults.beta_rho_g_per_l),
        beta_rho_range_g_per_l=(
            fig_data.get("beta_rho_from_g_per_l", fig_defaults.beta_rho_range_g_per_l[0]),
            fig_data.get("beta_rho_to_g_per_l", fig_defaults.beta_rho_range_g_per_l[1]),
        ),
        n_values=fig_data.get("n_values", fig_defaults.n_values),
        beta_values=fig_data.get("beta_values", fig_defaults.beta_values),
        pressure_range_atm=(
            fig_data.get("P_from_atm", fig_defaults.pressure_range_atm[0]),
            fig_data.get("P_to_atm", fig_defaults.pressure_range_atm[1]),
        ),
    )

    return ExperimentConfig(
        model=model,
        gas=gas,
        patch=patch,
        d_um=cleaned["geometry"].get("d_um", 30.0),
        pressure_atm=gas_data.get("pressure_atm", 0.0),
        plate_rho_g_per_l=model_data.get("plate_density_g_per_l"),
        sweep=sweep,
        include=cleaned["experiment"].get("include", frozenset(COMPONENTS)),
        figure=figure,
        sensitivity_target=cleaned["sensitivity"].get("target_pN_per_cm2", 0.01),
    )


def parse_config(text: str, overrides: Sequence[str] = ()) -> ExperimentConfig:
    """
    Validate configuration text plus ``key=value`` overrides (which win over the
    text) into an ExperimentConfig. Raises ConfigError naming the key and line.
    """
    entries: Dict[str, _Entry] = {}
    _collect(entries, _file_pairs(text))
    _collect(entries, _override_pairs(overrides))
    cleaned = _clean_sections(entries)
    try:
        config = _build(cleaned)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    logger.debug("Parsed configuration with %d explicit keys", len(entries))
    return config


def load_config_text(text: str) -> str:
    """
    Configuration text from either a plain config file or a previous CSV
    output, whose echoed ``# config:`` lines are extracted.
    """
    echoed = [line[len(ECHO_PREFIX):] for line in text.splitlines() if line.startswith(ECHO_PREFIX)]
    return "\n".join(echoed) + "\n" if echoed else text


def _decimal_text(value: Decimal) -> str:
    return format(value.normalize(), "f")


def _num(value) -> str:
    return repr(float(value))


def _list(values) -> str:
    return ",".join(_num(v) for v in values)


def _ints(values) -> str:
    return ",".join(str(int(v)) for v in values)


def format_config(config: ExperimentConfig) -> str:
    """Every key with its resolved value; parse_config reads it back unchanged."""
    model, gas, patch, sweep, fig = config.model, config.gas, config.patch, config.sweep, config.figure
    unit = SWEEP_UNITS[sweep.variable]
    lines: List[str] = [
        f"model.n={model.n}",
        f"model.beta={_num(model.beta)}",
        f"model.lambda_gev={_num(model.lambda_gev)}",
        f"model.m_pl_gev={_num(model.m_pl_gev)}",
        f"model.linearized_mass={'true' if model.linearized_mass else 'false'}",
    ]
    if config.plate_rho_g_per_l is not None:
        lines.append(f"model.plate_density_g_per_l={_num(config.plate_rho_g_per_l)}")
    lines += [
        f"gas.name={gas.name}",
        f"gas.density_coeff_g_per_l_per_atm={_num(gas.density_coeff)}",
        f"gas.alpha_Fm2={_num(gas.alpha)}",
        f"gas.temperature_K={_num(gas.temperature)}",
        f"gas.pressure_atm={_num(config.pressure_atm)}",
        f"patch.sigma_l_mV={_decimal_text(_shift(patch.sigma_l, 3))}",
        f"patch.sigma_s_mV={_decimal_text(_shift(patch.sigma_s, 3))}",
        f"patch.lambda_min_um={_decimal_text(_shift(patch.lambda_min, 6))}",
        f"patch.lambda_max_um={_decimal_text(_shift(patch.lambda_max, 6))}",
        f"geometry.d_um={_num(config.d_um)}",
        f"sweep.variable={sweep.variable}",
        f"sweep.from_{unit}={_num(sweep.start)}",
        f"sweep.to_{unit}={_num(sweep.stop)}",
        f"sweep.points={sweep.points}",
        f"sweep.spacing={sweep.spacing}",
        f"experiment.include={','.join(c for c in COMPONENTS if c in config.include)}",
        f"figure.points={fig.points}",
        f"figure.d_from_um={_num(fig.d_range_um[0])}",
        f"figure.d_to_um={_num(fig.d_range_um[1])}",
        f"figure.rho_g_per_l={_num(fig.rho_g_per_l)}",
        f"figure.beta_rho_g_per_l={_list(fig.beta_rho_g_per_l)}",
        f"figure.beta_rho_from_g_per_l={_num(fig.beta_rho_range_g_per_l[0])}",
        f"figure.beta_rho_to_g_per_l={_num(fig.beta_rho_range_g_per_l[1])}",
        f"figure.n_values={_ints(fig.n_values)}",
        f"figure.beta_values={_list(fig.beta_values)}",
        f"figure.P_from_atm={_num(fig.pressure_range_atm[0])}",
        f"figure.P_to_atm={_num(fig.pressure_range_atm[1])}",
        f"sensitivity.target_pN_per_cm2={_num(config.sensitivity_target)}",
    ]
    return "\n".join(lines) + "\n"
