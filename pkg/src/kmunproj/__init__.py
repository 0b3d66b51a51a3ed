"""Exact construction and verification of Kustin-Miller unprojection ideals."""

from .complexes import (ChainComplex, ChainMap, ChainMapReport, be_complex, identity_map, koszul_chain_map,
                        koszul_complex, verify_chain_map)
from .groebner import (GroebnerBasis, Ideal, ResourceLimitExceeded, buchberger, ideal_equal, is_member,
                       normal_form, reduce_with_denominator)
from .linalg import PolyMatrix, SkewMatrix, determinant, pfaffian, pfaffians, wedge
from .ring import (Polynomial, VarContext, arith, exact_div, linear_coeffs, make_context, parse,
                   substitute)
from .unproj import (CiData, JerryData, TomData, UnprojectionResult, cramer_certificate, jerry_generic_g,
                     tom_generic_g, unproject_ci, unproject_jerry, unproject_tom)

__version__ = "0.1.0"
