from eomlab.sweeps.comparison import REFERENCE_ROWS, ComparisonRow, ThroughputRecipe, comparison_report
from eomlab.sweeps.sweep import OUTPUTS, SweepAxis, SweepConfig, evaluate_row, linspace_axis, run_sweep
from eomlab.sweeps.tables import read_table, to_text, write_table

__all__ = [
    "OUTPUTS",
    "REFERENCE_ROWS",
    "ComparisonRow",
    "SweepAxis",
    "SweepConfig",
    "ThroughputRecipe",
    "comparison_report",
    "evaluate_row",
    "linspace_axis",
    "read_table",
    "run_sweep",
    "to_text",
    "write_table",
]
