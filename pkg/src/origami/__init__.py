"""Exact-arithmetic enumeration of complex and real origami: square-tiled
surfaces seen as torus covers branched over one point, counted through
symmetric functions (Schur, zonal, and Jack expansions), divisor-sum closed
forms, and q-series, with exhaustive permutation-group oracles as ground
truth."""

from .partitions import (
    Partition,
    as_partition,
    conjugate,
    dominance_leq,
    double,
    enumerate_partitions,
    hook_product,
    z_of,
)
from .characters import (
    central_character,
    character,
    class_size,
    dimension,
    nu,
    nu_real,
    shifted_power_sum,
)
from .symfunc import (
    GradedSeries,
    SymFunc,
    convert,
    graded_series,
    hall_inner,
    p_mul,
    series_exp,
    series_log,
    substitute_genus,
    weighted_schur_sum,
)
from .jack import JackPolynomial, jack, zonal, zonal_spherical
from .qseries import (
    BivariateSeries,
    QSeries,
    bivariate_cover_series,
    connected_cover_count,
    connected_extract,
    eisenstein,
    eisenstein_classical,
    linear_fit,
    q_bracket,
    quasimodular_basis,
    sigma,
    t_cover,
)
from .series import (
    complex_series,
    genus_table,
    jack_series,
    n_real_h11,
    real_h22_series,
    real_series,
    real_stratum_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "BivariateSeries",
    "GradedSeries",
    "JackPolynomial",
    "Partition",
    "QSeries",
    "SymFunc",
    "as_partition",
    "bivariate_cover_series",
    "central_character",
    "character",
    "class_size",
    "complex_series",
    "conjugate",
    "connected_cover_count",
    "connected_extract",
    "convert",
    "dimension",
    "dominance_leq",
    "double",
    "eisenstein",
    "eisenstein_classical",
    "enumerate_partitions",
    "genus_table",
    "graded_series",
    "hall_inner",
    "hook_product",
    "jack",
    "jack_series",
    "linear_fit",
    "n_real_h11",
    "nu",
    "nu_real",
    "p_mul",
    "q_bracket",
    "quasimodular_basis",
    "real_h22_series",
    "real_series",
    "real_stratum_coefficient",
    "series_exp",
    "series_log",
    "shifted_power_sum",
    "sigma",
    "substitute_genus",
    "t_cover",
    "weighted_schur_sum",
    "z_of",
    "zonal",
    "zonal_spherical",
]
