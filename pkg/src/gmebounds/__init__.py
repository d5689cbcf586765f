"""Fidelity-based lower bounds for genuine multipartite entanglement and coherence.

A single overlap ``<phi|rho|phi>`` with a chosen pure state ``phi`` bounds
four convex-roof GME measures and three coherence measures from below.

>>> from gmebounds import states, gme
>>> profile = gme.profile_phi(states.ghz(6))
>>> round(gme.bounds_from_fidelity(0.710, profile).bounds["cren"], 3)
0.42
"""
from . import coherence, gme, oracle, states
from .coherence import (
    CoherenceBoundReport,
    CoherenceProfile,
    binary_entropy,
    coherence_bounds,
    coherence_bounds_from_fidelity,
    coherence_profile,
    coherence_witness_value,
    d_value,
    formation_lb,
    geom_coherence_lb,
    l1_lb,
)
from .gme import (
    GmeBoundReport,
    PhiProfile,
    bounds_from_fidelity,
    concurrence_lb,
    cren_lb,
    gamma,
    gconcurrence_lb,
    geometric_lb,
    gme_bounds,
    gme_witness_value,
    profile_phi,
    s_value,
)
from .tensor import (
    Bipartition,
    DensityOperator,
    InvalidBipartitionError,
    PureState,
    SchmidtSpectrum,
    ValidationError,
    enumerate_bipartitions,
    fidelity_pure,
    partial_trace,
    partial_transpose,
    reshape_by_bipartition,
    schmidt_spectrum,
    trace_norm,
    validate_density,
)

__version__ = "0.1.0"
