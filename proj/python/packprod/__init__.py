"""Packing and open packing numbers of graph products."""

import json
from fractions import Fraction

from ._packprod import (
    Graph,
    PackprodError,
    alpha2,
    chromatic_number,
    classify_rooted,
    connected_graphs,
    diameter,
    diametral_open_packing,
    enumerate_maximum,
    family,
    from_edge_list,
    from_graph6,
    gamma,
    gamma_t,
    gkr_open_packing,
    is_connected,
    is_open_packing,
    is_packing,
    product,
    prop_gap_witness,
    rho,
    rho_o,
    rooted_product,
    rooted_rho,
    rooted_rho_o,
    theorems,
    trees,
)
from . import _packprod

__all__ = [name for name in dir(_packprod) if not name.startswith("_")] + ["gamma_f", "verify"]


def gamma_f(g):
    """Fractional domination number as an exact Fraction."""
    return Fraction(_packprod._gamma_f(g))


def verify(theorems=None, seed=1, budget=100_000_000, threads=1):
    """Run theorem checks over their default grids; returns the report as a dict."""
    if theorems is None:
        theorems = _packprod.theorems()
    elif isinstance(theorems, str):
        theorems = [theorems]
    return json.loads(_packprod._verify(list(theorems), seed, budget, threads))
