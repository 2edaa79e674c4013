"""Scenario loading and CSV output."""

from .config_file import build_system_config, load_system_config, read_scenario_file
from .csv_output import format_header_block, write_csv

__all__ = [
    'load_system_config',
    'build_system_config',
    'read_scenario_file',
    'write_csv',
    'format_header_block',
]
