"""Generating series of classes of equivariant Hilbert schemes of points for
cyclic group actions on the plane, computed exactly in Z[L][[T]]."""

from .global_series import (
    ConfigError,
    StratificationSpec,
    Stratum,
    assemble,
    corollary_surface,
    example_cp2_z3,
    load_config,
)
from .local import (
    GroupAction,
    MalformedLog,
    cell_dimension,
    closed_form_conjecture,
    closed_form_theorem2,
    line_local_series,
    origin_local_series,
    stabilization_table,
)
from .motivic import ONE, ZERO, L, MotivicClass
from .partitions import Partition, core_and_quotient, enumerate_partitions
from .series import LogSeries, MotivicSeries, NonUnitConstantTerm, kapranov_zeta

__version__ = "0.1.0"
