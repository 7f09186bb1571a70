# backend/cli/forms.py

"""
One form per configuration section. Field names are the configuration keys
without their section prefix, unit suffix included.
"""

import math

from django import forms
from django.core.exceptions import ValidationError

from experiment.domain import COMPONENTS, LINEAR, LOG, SWEEP_BETA_RHO, SWEEP_D, SWEEP_P, SWEEP_VARIABLES


def _positive(value):
    if value is not None and not value > 0:
        raise ValidationError("must be positive")


def _non_negative(value):
    if value is not None and value < 0:
        raise ValidationError("cannot be negative")


def positive_float(**kwargs):
    return forms.FloatField(required=False, validators=[_positive], **kwargs)


BOOLEAN_CHOICES = [("true", "true"), ("false", "false")]


class FloatListField(forms.CharField):
    """Comma-separated numbers, e.g. ``1e3,1e4,1e5``."""

    def __init__(self, *, integer=False, **kwargs):
        self.integer = integer
        super().__init__(required=False, **kwargs)

    def to_python(self, value):
        text = super().to_python(value)
        if not text:
            return None
        cast = int if self.integer else float
        items = []
        for part in text.split(","):
            part = part.strip()
            try:
                number = cast(part)
            except ValueError:
                kind = "an integer" if self.integer else "a number"
                raise ValidationError(f"{part!r} is not {kind}")
            if not math.isfinite(number):
                raise ValidationError(f"{part!r} is not finite")
            items.append(number)
        return tuple(items)


# ---------- model / gas / patch / geometry ----------

class ModelSectionForm(forms.Form):
    n = forms.IntegerField(required=False, min_value=1, error_messages={"min_value": "n must be ≥ 1"})
    beta = positive_float()
    lambda_gev = positive_float()
    m_pl_gev = positive_float()
    linearized_mass = forms.TypedChoiceField(
        required=False,
        choices=BOOLEAN_CHOICES,
        coerce=lambda v: v == "true",
        empty_value=None,
    )
    plate_density_g_per_l = positive_float()


class GasSectionForm(forms.Form):
    name = forms.CharField(required=False, max_length=40)
    density_coeff_g_per_l_per_atm = positive_float()
    alpha_Fm2 = positive_float()
    temperature_K = positive_float()
    pressure_atm = forms.FloatField(required=False, validators=[_non_negative])


class PatchSectionForm(forms.Form):
    sigma_l_mV = forms.FloatField(required=False, validators=[_non_negative])
    sigma_s_mV = forms.FloatField(required=False, validators=[_non_negative])
    lambda_min_um = positive_float()
    lambda_max_um = positive_float()

    def clean(self):
        cleaned = super().clean()
        low = cleaned.get("lambda_min_um")
        high = cleaned.get("lambda_max_um")

        # Only checked when both ends are given here; defaults are checked later.
        if low is not None and high is not None and not low < high:
            self.add_error("lambda_max_um", "must be larger than lambda_min_um")
        return cleaned


class GeometrySectionForm(forms.Form):
    d_um = positive_float()


# ---------- sweep / experiment / figure / sensitivity ----------

SWEEP_UNITS = {SWEEP_D: "um", SWEEP_P: "atm", SWEEP_BETA_RHO: "g_per_l"}


class SweepSectionForm(forms.Form):
    variable = forms.ChoiceField(required=False, choices=[(v, v) for v in SWEEP_VARIABLES])
    spacing = forms.ChoiceField(required=False, choices=[(LINEAR, LINEAR), (LOG, LOG)])
    points = forms.IntegerField(required=False, min_value=2)
    from_um = forms.FloatField(required=False, validators=[_non_negative])
    to_um = positive_float()
    from_atm = forms.FloatField(required=False, validators=[_non_negative])
    to_atm = positive_float()
    from_g_per_l = forms.FloatField(required=False, validators=[_non_negative])
    to_g_per_l = positive_float()

    def clean(self):
        cleaned = super().clean()
        variable = cleaned.get("variable") or SWEEP_P
        unit = SWEEP_UNITS[variable]

        # Bounds must be given in the unit of the swept variable.
        for other_variable, other_unit in SWEEP_UNITS.items():
            if other_unit == unit:
                continue
            for bound in ("from", "to"):
                name = f"{bound}_{other_unit}"
                if cleaned.get(name) is not None:
                    self.add_error(name, f"does not match sweep.variable={variable}")

        start = cleaned.get(f"from_{unit}")
        stop = cleaned.get(f"to_{unit}")
        if start is not None and stop is not None and not start < stop:
            self.add_error(f"to_{unit}", f"must be larger than from_{unit}")
        return cleaned


class ExperimentSectionForm(forms.Form):
    include = forms.CharField(required=False)

    def clean_include(self):
        text = self.cleaned_data.get("include")
        if not text:
            return None
        parts = tuple(p.strip() for p in text.split(",") if p.strip())
        unknown = [p for p in parts if p not in COMPONENTS]
        if unknown:
            raise ValidationError(f"unknown component(s) {', '.join(unknown)}; choose from {', '.join(COMPONENTS)}")
        if not parts:
            raise ValidationError("at least one component is required")
        return frozenset(parts)


class FigureSectionForm(forms.Form):
    points = forms.IntegerField(required=False, min_value=2)
    d_from_um = positive_float()
    d_to_um = positive_float()
    rho_g_per_l = positive_float()
    beta_rho_g_per_l = FloatListField()
    beta_rho_from_g_per_l = positive_float()
    beta_rho_to_g_per_l = positive_float()
    n_values = FloatListField(integer=True)
    beta_values = FloatListField()
    P_from_atm = forms.FloatField(required=False, validators=[_non_negative])
    P_to_atm = positive_float()

    def clean_n_values(self):
        values = self.cleaned_data.get("n_values")
        if values and min(values) < 1:
            raise ValidationError("n must be ≥ 1")
        return values

    def clean_beta_values(self):
        values = self.cleaned_data.get("beta_values")
        if values and min(values) <= 0:
            raise ValidationError("beta values must be positive")
        return values

    def clean_beta_rho_g_per_l(self):
        values = self.cleaned_data.get("beta_rho_g_per_l")
        if values and min(values) <= 0:
            raise ValidationError("beta*rho values must be positive")
        return values


class SensitivitySectionForm(forms.Form):
    target_pN_per_cm2 = positive_float()


SECTION_FORMS = {
    "model": ModelSectionForm,
    "gas": GasSectionForm,
    "patch": PatchSectionForm,
    "geometry": GeometrySectionForm,
    "sweep": SweepSectionForm,
    "experiment": ExperimentSectionForm,
    "figure": FigureSectionForm,
    "sensitivity": SensitivitySectionForm,
}
