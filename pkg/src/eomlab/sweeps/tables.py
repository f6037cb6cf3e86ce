"""Table serialization: CSV with 17 significant digits, or JSON records."""
import json
import math
import os

import pandas as pd

from eomlab.errors import ConfigError

FORMATS = ("csv", "json")


def to_text(frame, fmt="csv"):
    if fmt == "csv":
        return frame.to_csv(index=False, float_format="%.17g", na_rep="", lineterminator="\n")
    if fmt == "json":
        records = [
            {key: _json_value(value) for key, value in row.items()}
            for row in frame.to_dict(orient="records")
        ]
        return json.dumps(records, indent=2, allow_nan=False) + "\n"
    raise ConfigError(f"format must be one of {FORMATS}, got {fmt!r}")


def _json_value(value):
    if hasattr(value, "item"):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def write_table(frame, path, fmt="csv"):
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(to_text(frame, fmt))


def read_table(path):
    """Load a CSV written by ``write_table``; empty cells come back as NaN."""
    return pd.read_csv(path, float_precision="round_trip")
