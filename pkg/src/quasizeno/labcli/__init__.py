"""Experiment harness: configs, presets, runs and report files."""
from .config import ExperimentConfig, build_system, config_from_dict, load_config
from .presets import list_presets, preset_config, preset_dict
from .report import OUTPUT_DIR_ENV, csv_text, emit_report, json_text
from .runner import DiffReport, RunReport, operator_error_history, run_experiment
