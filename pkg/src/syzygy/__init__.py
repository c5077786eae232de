"""Minimal free resolutions of monomial ideals with linear quotients.

Builds the resolution from the critical-variable sets of an ordered generator
list, the contracting homotopy on the augmented resolution, and the induced
DG algebra product.
"""

from .monomial import Monomial, compare_lex, divide, lcm, parse_monomial
from .presentation import (
    GeneratorOrderTag,
    NormalTerm,
    Presentation,
    component_presentation,
    is_crit_monotone,
    normal_form,
    nf_step,
    presentation_from_generators,
    restrict,
    verify_linear_quotients,
)
from .families import (
    Matroid,
    fano,
    graphic_matroid,
    matroidal_presentation,
    uniform_matroid,
    validate_matroid,
    validate_stable,
)
from .chain import UNIT, AmbientElement, BasisElement, Chain
from .resolution import (
    Resolution,
    betti,
    build_resolution,
    ek_differential,
    enumerate_basis,
    generic_differential,
    pdim,
    phi,
    reg_spread,
)
from .oracle import koszul_betti, strand_exactness_oracle
from .homotopy import Homotopy, ccrit, contract, verify_homotopy
from .dga import DGA, multiply, product_table, verify_dga

__all__ = [name for name in dir() if not name.startswith("_")]
