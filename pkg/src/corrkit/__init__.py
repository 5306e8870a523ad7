"""corrkit: correlation coefficients for paired samples.

Six coefficients (Pearson r, Spearman rho, Kendall tau, Fechner kappa,
the rank-grid nonlinear coefficient, and the quadrant-split coefficient
omega), seeded synthetic dataset families, a batch experiment harness,
and a CLI.
"""

__version__ = "0.1.0"

from .classic import (
    FechnerTrace,
    MeanSide,
    RankVector,
    fechner,
    fechner_predict,
    kendall,
    pearson,
    rank_with_average_ties,
    spearman,
)
from .core import (
    CoefficientPanel,
    MultiSample,
    PairedSample,
    PanelValue,
    RngSeed,
    load_paired,
    read_columns,
    sample_mean,
    sample_median,
    save_paired,
)
from .errors import (
    AllTied,
    ConstantX,
    ConstantY,
    CorrkitError,
    DegenerateVariance,
    EmptyInput,
    InvalidParams,
    NonFiniteValue,
    ParseError,
    ShortSample,
    SingularScatter,
    TooFewPoints,
    UndefinedDirection,
)
from .gcorr import (
    Diagonal,
    GCorrFit,
    MedianSide,
    QuadrantCounts,
    SplitPlan,
    estimate_g,
    fit_g,
    g_objective,
    g_predict,
    preprocess_ties,
)
from .gcorr_multi import MAX_FEATURES, HyperplaneFit, fit_g_multi
from .harness import (
    ExperimentConfig,
    PanelReport,
    PanelRow,
    compute_panel,
    parse_report,
    render_report,
    run_panel,
)
from .ncc import BinGrid, build_bin_grid, ncc
from .svgplot import render_scatter
from .synth import FAMILY_DEFAULTS, FamilySpec, generate

__all__ = [
    "__version__",
    # core
    "PairedSample",
    "MultiSample",
    "RngSeed",
    "PanelValue",
    "CoefficientPanel",
    "load_paired",
    "save_paired",
    "read_columns",
    "sample_mean",
    "sample_median",
    # classic
    "RankVector",
    "FechnerTrace",
    "MeanSide",
    "pearson",
    "rank_with_average_ties",
    "spearman",
    "kendall",
    "fechner",
    "fechner_predict",
    # ncc
    "BinGrid",
    "build_bin_grid",
    "ncc",
    # gcorr
    "Diagonal",
    "MedianSide",
    "QuadrantCounts",
    "GCorrFit",
    "SplitPlan",
    "preprocess_ties",
    "g_objective",
    "fit_g",
    "estimate_g",
    "g_predict",
    # multi
    "HyperplaneFit",
    "fit_g_multi",
    "MAX_FEATURES",
    # synth
    "FamilySpec",
    "generate",
    "FAMILY_DEFAULTS",
    # harness
    "ExperimentConfig",
    "PanelRow",
    "PanelReport",
    "compute_panel",
    "run_panel",
    "render_report",
    "parse_report",
    "render_scatter",
    # errors
    "CorrkitError",
    "EmptyInput",
    "ShortSample",
    "ParseError",
    "NonFiniteValue",
    "DegenerateVariance",
    "UndefinedDirection",
    "TooFewPoints",
    "InvalidParams",
    "AllTied",
    "ConstantY",
    "ConstantX",
    "SingularScatter",
]
