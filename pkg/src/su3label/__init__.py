"""Exact tools for the su(3) missing-label problem.

The multiplicity space of [m''] inside [m] x [m'] carries two commuting-with-
su(3) operators X and Y, realised here as rational tridiagonal matrices.
Submodules cover the parameter geometry (weights), the matrices and spectra
(tridiag), the 144-element symmetry group (symmetry), its E6 origin (e6),
the centralizer relations (centralizer), the Hahn decomposition (hahn),
infinite representations from root-polytope faces (faces), Bethe equations
(bethe) and a command line (cli).
"""
from .errors import Su3LabelError
from .tridiag import build_X, build_Y, char_poly, spectrum
from .weights import ParamSet, arrangement, derive_ln, is_physical, lr_oracle, multiplicity

__all__ = ["ParamSet", "Su3LabelError", "arrangement", "build_X", "build_Y", "char_poly",
           "derive_ln", "is_physical", "lr_oracle", "multiplicity", "spectrum"]
__version__ = "0.1.0"
