"""
CSV artifacts and their jinja2 headers.
"""

from .csv_writer import ArtifactWriter, Table, format_cell, read_csv_table
from .templates import render_csv_header, render_run_summary
from .tables import asymptotics_table, dynamical_table, profile_table, weyl_ready, weyl_table

__all__ = [
    "ArtifactWriter", "Table", "format_cell", "read_csv_table",
    "render_csv_header", "render_run_summary",
    "asymptotics_table", "dynamical_table", "profile_table", "weyl_ready", "weyl_table",
]
