# backend/experiment/services/__init__.py

"""
Pipelines combining the chameleon and background apps.

Exports:
- breakdown_at:             all pressure components at one (d, P).
- screening_percentage:     chameleon pressure drop relative to vacuum.
- sweep / map_points:       ordered, optionally threaded grids of evaluations.
- figure_dataset:           tables for fig1..fig4.
- sensitivity_requirements: required patch-potential and separation stability.
- oracle_table:             parametric vs direct separation comparison.
"""

from .figures import figure_dataset
from .oracle import oracle_table
from .pressures import breakdown_at, chameleon_lab_pressure, screening_percentage
from .sensitivity import sensitivity_requirements
from .sweeps import map_points, pressure_changes, sweep

__all__ = [
    "figure_dataset",
    "oracle_table",
    "breakdown_at",
    "chameleon_lab_pressure",
    "screening_percentage",
    "sensitivity_requirements",
    "map_points",
    "pressure_changes",
    "sweep",
]
