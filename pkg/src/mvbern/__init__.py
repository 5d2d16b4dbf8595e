"""Dependence modelling for multivariate binary data via subcopulas."""

from .bitlattice import (
    mask_of_subset,
    mobius_invert,
    pattern_of_rank,
    rank_of_pattern,
    subset_of_mask,
    zeta_subset_sum,
)
from .core import (
    FrechetBounds,
    MuLattice,
    ProbabilityTable,
    ThetaLattice,
    bivariate_admissible_interval,
    bivariate_admissible_region_contains,
    build_layered,
    condition,
    d_bivariate,
    frechet_bounds,
    marginalize,
    mu,
    mu_lattice,
    new_table,
    subcopula_eval,
    table_from_theta,
    theta123_admissible_interval,
    theta_from_mu_bivariate,
    theta_lattice,
    trivariate_from_margins_pairwise_mu,
    trivariate_table,
)
from .errors import DataFormatError, DomainError, IncompatibilityError, MBDError, ValidationError
from .inference import (
    coverage_study,
    counts,
    fit,
    infer,
    point_estimates,
    posterior,
    prediction_rules,
    rule_accuracy,
)
from .io import ingest_csv, load_model
from .sampling import SampleMatrix, SeedSpec, dirichlet_draw, empirical_table, simulate

__version__ = "0.1.0"
