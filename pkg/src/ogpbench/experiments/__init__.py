from .common import is_benchmark, map_trials, mean_se
from .density import (
    ComparisonRow,
    ComparisonTable,
    DensityEstimate,
    greedy_ratio_experiment,
    local_vs_greedy_experiment,
)
from .locality import LocalityReport, bfs_distances, locality_perturbation_test, perturb_outside
from .overlap import OverlapHistogram, build_histogram, ogp_scan, overlap_probe, pairwise_overlap, widest_gap
from .scaling import ScalingFitResult, cut_trials, fit_scaling, maxcut_scaling_experiment
