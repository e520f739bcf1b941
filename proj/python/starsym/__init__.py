"""Symbolic powers of star configurations: counts, generators, Betti tables."""

from ._core import (
    betti,
    count_closed,
    count_in_degree,
    generators,
    mu,
    normal_form,
    oracle_generators,
    oracle_sdefect,
    partition_of,
    regularity,
    sdefect,
    sdeg,
    set_elements,
    set_size,
    strand_closed,
    top_strand_closed,
)

__all__ = [
    "betti",
    "count_closed",
    "count_in_degree",
    "generators",
    "mu",
    "normal_form",
    "oracle_generators",
    "oracle_sdefect",
    "partition_of",
    "regularity",
    "sdefect",
    "sdeg",
    "set_elements",
    "set_size",
    "strand_closed",
    "top_strand_closed",
]

__version__ = "1.0.0"
