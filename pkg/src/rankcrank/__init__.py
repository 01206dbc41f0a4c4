"""Exact q-series tools for partition ranks, cranks and relations between their moments."""

from .series import QSeries, eta_power, partition_gf, partition_numbers
from .partitions import Partition, StatTable, crank, crank_table, enumerate_partitions, rank, rank_table
from .bivariate import ZLaurentSeries, crank_gf, rank_gf, verify_asd_identity, verify_pde
from .quasimodular import PhiPolynomial, dim_W, eisenstein, express_in_PW, phi_series, reduce_phi
from .moments import (C_family, T_series, crank_moment_series_direct, crank_moment_series_rec,
                      deltaq_crank_tower, deltaq_P_tower, rank_moment_series)
from .relations import (LinearForm, NoRelation, RelationResult, Term, discover_relation, find_dependencies,
                        master_relation_sides, moment_relation_to_pointwise)

__version__ = "0.1.0"

__all__ = [
    "QSeries", "eta_power", "partition_gf", "partition_numbers",
    "Partition", "StatTable", "crank", "crank_table", "enumerate_partitions", "rank", "rank_table",
    "ZLaurentSeries", "crank_gf", "rank_gf", "verify_asd_identity", "verify_pde",
    "PhiPolynomial", "dim_W", "eisenstein", "express_in_PW", "phi_series", "reduce_phi",
    "C_family", "T_series", "crank_moment_series_direct", "crank_moment_series_rec",
    "deltaq_crank_tower", "deltaq_P_tower", "rank_moment_series",
    "LinearForm", "NoRelation", "RelationResult", "Term", "discover_relation", "find_dependencies",
    "master_relation_sides", "moment_relation_to_pointwise",
]
