"""Predistance polynomials, spectral excess and harmonic-mean gates for graphs."""

__version__ = "0.1.0"

from ._accel import backend_name, use_backend
from .characterize import (
    Analysis,
    GateReport,
    MeanReport,
    adjacency_gate,
    analyze,
    census_scan,
    excess_means,
    laplacian_gate,
    spectral_excess_summary,
)
from .config import (
    DEFAULT_TOLERANCES,
    AnalysisError,
    DisconnectedGraphError,
    InternalConsistencyError,
    IrregularGraphError,
    ParseError,
    Tolerances,
)
from .graph import (
    DegreeStats,
    DistanceData,
    Graph,
    bfs_distances,
    degree_stats,
    encode_graph6,
    laplacian_matrix,
    parse_edge_list,
    parse_graph6,
)
from .orthopoly import (
    OrthoSystem,
    build_ortho_system,
    evaluate_poly_at_matrix,
    hoffman_check,
    inner_product,
    r1_regularity_check,
    terminal_poly_check,
)
from .spectral import (
    SpectralProducts,
    SpectrumData,
    eigenvalues_symmetric,
    group_spectrum,
    pd_closed_form,
    rd_closed_form,
    spectral_products,
    spectrum_of,
)
