"""Construction and exact verification of multimagic squares.

The main entry points are re-exported here; see the submodules for the
ingredient builders (:mod:`.latin`, :mod:`.kotzig`), complementary families
(:mod:`.scms`), Kronecker-style composition (:mod:`.compose`), recipe
planning (:mod:`.planner`) and the seed catalog (:mod:`.catalog`).
"""

from .catalog import Catalog, CatalogEntry, catalog_load, default_catalog, embedded_catalog, ingest, lookup
from .compose import (
    PartitionedSquare,
    PgmsReport,
    assemble_pgms,
    compose_outer,
    composition_sum,
    product,
    uniform_pgms,
    verify_pgms,
)
from .core import (
    Square,
    VerificationReport,
    as_square,
    is_multimagic,
    magic_constant,
    normalize,
    power_sum,
    power_sum_profile,
    verify_multimagic,
)
from .errors import *  # noqa: F401,F403
from .formats import parse_square, parse_square_json, read_square, serialize_square, serialize_square_json, write_square
from .kotzig import KotzigArray, build_kotzig, kotzig_exists, verify_kotzig
from .latin import (
    LatinFlags,
    LatinSquare,
    build_diagonal_ls,
    build_odls_pair,
    check_latin_properties,
    latin_product,
    odls_pair_constructible,
    odls_pair_exists,
)
from .planner import (
    CatalogSeed,
    FeasibilityVerdict,
    Omega,
    Product,
    Recipe,
    ScmsCompose,
    Status,
    decompose_exponent,
    execute,
    omega_membership,
    plan,
)
from .scms import ScmsFamily, ScmsReport, build_scms_complement, build_scms_kotzig, complement, extend_scms, verify_scms

__version__ = "0.1.0"
