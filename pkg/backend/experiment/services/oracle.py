# backend/experiment/services/oracle.py

import dataclasses
import logging
from typing import Sequence

from chameleon.services import bulk_state, oracle_separation, separation_from_z
from units.constants import MICRO
from units.conversions import g_per_l_to_natural, length_to_si

from ..domain import Dataset, ExperimentConfig

logger = logging.getLogger(__name__)

DEFAULT_Z = tuple(round(0.1 * k, 1) for k in range(1, 10))
DEFAULT_N = (1, 2, 4, 6)


def oracle_table(
    config: ExperimentConfig,
    n_values: Sequence[int] = DEFAULT_N,
    z_values: Sequence[float] = DEFAULT_Z,
) -> Dataset:
    """
    Separation from the parametric integral against direct quadrature of the
    first integral, both with the linearized bulk mass, at the figure density.
    """
    rho = g_per_l_to_natural(config.figure.rho_g_per_l)
    rows = []
    for n in n_values:
        model = dataclasses.replace(config.model, n=n, linearized_mass=True)
        bulk = bulk_state(model, rho)
        for z in z_values:
            d_param = separation_from_z(model, bulk, z)
            d_direct = oracle_separation(model, bulk, bulk.phi_b * z ** model.p)
            rel_diff = abs(d_direct - d_param) / d_param
            rows.append((
                n,
                z,
                length_to_si(d_param) / MICRO,
                length_to_si(d_direct) / MICRO,
                rel_diff,
            ))

    worst = max(r[-1] for r in rows)
    logger.info("Oracle table: max relative difference %.3e", worst)
    return Dataset(("n", "z", "d_eq5_um", "d_oracle_um", "rel_diff"), tuple(rows), "oracle")
