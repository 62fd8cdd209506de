"""Higher-dimensional Reidemeister torsion of Seifert fibered spaces.

A small numerical/exact-arithmetic library built around three layers:

* a brute-force torsion engine for based acyclic chain complexes
  (:mod:`rtorsion.chain`), used as the oracle for every closed form;
* the explicit twisted complexes of the circle and the torus, the Dehn
  filling assembly and its asymptotics, and Seifert fibered space closed
  forms (:mod:`rtorsion.models`, :mod:`rtorsion.surgery`,
  :mod:`rtorsion.seifert`);
* enumeration of SU(2) character-variety components of Seifert fibered
  homology spheres together with the locally constant limit function on
  them (:mod:`rtorsion.charvar`).

The command line front end lives in :mod:`rtorsion.cli`.
"""

from .errors import ParseError, PreconditionError
from .sl2 import ConjClass, has_eigenvalue_one, sym_power, weights
from .chain import BasedChainComplex, TorsionValue, check_multiplicativity, torsion
from .models import (
    CircleRep,
    TorusRep,
    circle_acyclic_all_N,
    circle_complex,
    circle_limit,
    circle_log_torsion,
    periodic_average,
    torus_acyclic_all_N,
    torus_complex,
)
from .surgery import (
    AsymptoticProfile,
    FillingSlope,
    JohnsonTriple,
    TorusKnotExterior,
    brieskorn_leading_coeff,
    brieskorn_leading_limit,
    brieskorn_torsion,
    johnson_classify,
    surgered_log_torsion,
    surgery_limits,
    torusknot_higher_log_torsion,
)
from .seifert import (
    FiberDecomposition,
    SeifertIndex,
    SeifertRep,
    fiber_decomposition,
    h1_order,
    homology_sphere,
    lambda_of,
    max_limit,
    orbifold_euler_char,
    seifert_limits,
    seifert_log_torsion,
    trivial_bundle_log_torsion,
)
from .charvar import (
    AngleInterval,
    Component,
    achievable_interval,
    classify_extremes,
    component_limit,
    enumerate_components,
)

__all__ = [
    "AngleInterval",
    "AsymptoticProfile",
    "BasedChainComplex",
    "CircleRep",
    "Component",
    "ConjClass",
    "FiberDecomposition",
    "FillingSlope",
    "JohnsonTriple",
    "ParseError",
    "PreconditionError",
    "SeifertIndex",
    "SeifertRep",
    "TorsionValue",
    "TorusKnotExterior",
    "TorusRep",
    "achievable_interval",
    "brieskorn_leading_coeff",
    "brieskorn_leading_limit",
    "brieskorn_torsion",
    "check_multiplicativity",
    "circle_acyclic_all_N",
    "circle_complex",
    "circle_limit",
    "circle_log_torsion",
    "classify_extremes",
    "component_limit",
    "enumerate_components",
    "fiber_decomposition",
    "h1_order",
    "has_eigenvalue_one",
    "homology_sphere",
    "johnson_classify",
    "lambda_of",
    "max_limit",
    "orbifold_euler_char",
    "periodic_average",
    "seifert_limits",
    "seifert_log_torsion",
    "surgered_log_torsion",
    "surgery_limits",
    "sym_power",
    "torsion",
    "torus_acyclic_all_N",
    "torus_complex",
    "torusknot_higher_log_torsion",
    "trivial_bundle_log_torsion",
    "weights",
]

__version__ = "0.1.0"
