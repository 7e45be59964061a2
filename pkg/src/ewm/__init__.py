"""Extended weight monoids of spherical homogeneous spaces.

Exact combinatorial computation of the free generators (the "biweights" of
the colors) from a description of a regular embedding: general pipeline with
three generator families, a closed form for strongly solvable subgroups, and
necessary/sufficient tests for simple spherical roots.
"""

__version__ = "0.1.0"

from .rootsys import (  # noqa: F401
    CartanType,
    RootSystem,
    RootVec,
    WeightVec,
    build_root_system,
)
from .intlin import CharSpace, CharVec, IntMatrix  # noqa: F401
from .core import (  # noqa: F401
    Biweight,
    GeneralDatum,
    MonoidResult,
    NonUnique,
    compute_monoid,
    solve_xi3,
)
from .solvable import SolvableDatum, SolvableResult, solvable_monoid  # noqa: F401
