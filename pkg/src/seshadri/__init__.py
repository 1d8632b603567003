"""Exact Seshadri constants on rational surfaces with an anticanonical pencil."""
from .embeddings import eps_min_dp, jet_obstruction, jv_equality_check, v_of
from .engine import (
    IncidenceOracle,
    check_ample_necessary,
    eps_at_point,
    eps_gen,
    transform_fn_to_p2,
)
from .enumeration import TailMode, phi_set, psi_set
from .errors import InconsistencyError, InputError, SeshadriError
from .lattice import ClassVector, Pencil, Polarization, SurfaceSpec, pair
from .ldp import a_r_table, build_configuration, discrepancies, eps_gen_ldp
from .weyl import apply_cremona, crosscheck, orbit_enumerate

__version__ = "0.1.0"

__all__ = [
    "ClassVector", "IncidenceOracle", "InconsistencyError", "InputError", "Pencil",
    "Polarization", "SeshadriError", "SurfaceSpec", "TailMode", "a_r_table", "apply_cremona",
    "build_configuration", "check_ample_necessary", "crosscheck", "discrepancies",
    "eps_at_point", "eps_gen", "eps_gen_ldp", "eps_min_dp", "jet_obstruction",
    "jv_equality_check", "orbit_enumerate", "pair", "phi_set", "psi_set",
    "transform_fn_to_p2", "v_of",
]
