"""Wave packet frame experiments on local fields of positive characteristic.

The package realizes K = GF(q)((p)) at finite precision, builds the finite
model of L^2(K) on quotient grids, constructs Weyl-Heisenberg wave packet
systems, computes spectral frame bounds, and measures the linear-combination
frame conditions numerically.
"""

from .errors import (
    ConfigError,
    DegenerateInputError,
    GridExactnessError,
    LfwpError,
    ParseError,
    PreconditionError,
    SpecMismatchError,
    WindowError,
)
from .gf import FieldSpec, GFElement
from .laurent import (
    ExponentWindow,
    LocalFieldElement,
    absolute_value,
    lf_add,
    lf_mul,
    parse_element,
    to_text,
    valuation,
)
from .character import UnitComplex, character, character_at, u_map
from .model import (
    ModelWindow,
    SampledFunction,
    dilate,
    embed,
    evaluate,
    fourier,
    indicator_of_integers,
    inner_product,
    inverse_fourier,
    modulate,
    norm,
    random_function,
    translate,
)
from .systems import (
    FrameBounds,
    VectorFamily,
    WavePacketParams,
    WavePacketSystem,
    bounds_report,
    frame_bounds,
    frame_operator,
    generate_system,
    gram_matrix,
)
from .combinations import (
    CoefficientFamily,
    CombinationMatrix,
    IndexPartition,
    TheoremReport,
    build_combined,
    check_corollary_2_6,
    check_remark_2_7,
    check_theorem_2_1,
    check_theorem_2_2,
    check_theorem_2_3,
    check_theorem_2_4,
    check_theorem_2_5,
    combine_general,
    compute_mu_nu,
    finite_sum_system,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DegenerateInputError",
    "GridExactnessError",
    "LfwpError",
    "ParseError",
    "PreconditionError",
    "SpecMismatchError",
    "WindowError",
    "FieldSpec",
    "GFElement",
    "ExponentWindow",
    "LocalFieldElement",
    "absolute_value",
    "lf_add",
    "lf_mul",
    "parse_element",
    "to_text",
    "valuation",
    "UnitComplex",
    "character",
    "character_at",
    "u_map",
    "ModelWindow",
    "SampledFunction",
    "dilate",
    "embed",
    "evaluate",
    "fourier",
    "indicator_of_integers",
    "inner_product",
    "inverse_fourier",
    "modulate",
    "norm",
    "random_function",
    "translate",
    "FrameBounds",
    "VectorFamily",
    "WavePacketParams",
    "WavePacketSystem",
    "bounds_report",
    "frame_bounds",
    "frame_operator",
    "generate_system",
    "gram_matrix",
    "CoefficientFamily",
    "CombinationMatrix",
    "IndexPartition",
    "TheoremReport",
    "build_combined",
    "check_corollary_2_6",
    "check_remark_2_7",
    "check_theorem_2_1",
    "check_theorem_2_2",
    "check_theorem_2_3",
    "check_theorem_2_4",
    "check_theorem_2_5",
    "combine_general",
    "compute_mu_nu",
    "finite_sum_system",
    "__version__",
]
