from .cut import local_flip_cut, random_assignment
from .greedy import degree_greedy_is, greedy_is
from .local import (
    RULES,
    FeatureState,
    GreedyRoundsRule,
    IdentityRule,
    LabelBroadcastRule,
    LocalRule,
    NeighborMinRule,
    NeighborSumRule,
    Neighborhood,
    NodeRule,
    ThresholdRule,
    gnn_forward,
    make_rule,
    project_to_cut,
    project_to_is,
    random_priority_is,
    run_pipeline,
    shipped_rules,
)
