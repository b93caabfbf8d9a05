"""Geometry-aware Gaussian process learning on meshes and point clouds.

The package provides a damped-cosine additive kernel family derived from a
periodic-potential diffusion process, GP-regression based salient point
selection, spectral shape descriptors, and a deep sparse-variational GP
classifier, together with the numerical oracles used to validate them.
"""

from ggp.io import Manifold, ShapeRecord, load_manifold, save_colored_ply
from ggp.geometry import (
    CurvatureField,
    GeodesicGraph,
    build_geodesic_graph,
    curvature_field,
    gaussian_curvature,
    mean_curvature,
    normalize_coordinates,
)
from ggp.kernels import (
    KernelMatrix,
    KernelSpec,
    assemble_matrix,
    build_mmk,
    cholesky_with_jitter,
    diffusion_oracle,
)
from ggp.gpr import GpPosteriorState, append_training_point, empty_state, posterior
from ggp.saliency import SaliencyResult, saliency_map, select_salient_points
from ggp.features import (
    FeatureMatrix,
    SpectralBasis,
    assemble_shape_features,
    laplace_beltrami_eigenpairs,
    wks_features,
)
from ggp.deep_gp import DeepGpModel, GpLayer, TrainerState, init_inducing_kmeans
from ggp.evaluation import AcCurve, ac_curve, aggregate_curves, max_ac_bound

__version__ = "0.1.0"
