"""Cyclotomic linking numbers and finite Chern-Simons partition sums."""

from ._arithlink import (
    ArithlinkError,
    factor,
    gauss_sum,
    height_pairing,
    norm,
    partition,
    power_residue_symbol,
    run,
    tame_hilbert,
    verify_theorem,
)

__all__ = [
    "ArithlinkError",
    "factor",
    "gauss_sum",
    "height_pairing",
    "norm",
    "partition",
    "power_residue_symbol",
    "run",
    "tame_hilbert",
    "verify_theorem",
]
