from .config import ExperimentConfig, format_config, parse_config, validate
from .main import main
from .runner import CSV_HEADER, CSV_SCHEMA, experiment_id, run, run_experiment
