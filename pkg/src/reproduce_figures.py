import os
import sys
from argparse import Namespace

from eomlab.cli import HANDLERS
from eomlab.config import PROCESSED_DIR, RECIPES_DIR, load_config
from eomlab.errors import TransducerError
from eomlab.sweeps import write_table

# --- CONFIG ---
# recipe file -> (command, output table)
FIGURES = {
    'fig2f_efficiency_spectrum.yaml': ('spectrum', 'fig2f_efficiency_spectrum.csv'),
    'fig3c_cooling.yaml': ('sweep', 'fig3c_cooling.csv'),
    'fig4a_noise_vs_nc.yaml': ('sweep', 'fig4a_noise_vs_nc.csv'),
    'fig4b_noise_grid.yaml': ('sweep', 'fig4b_noise_grid.csv'),
    'fig4c_efficiency_grid.yaml': ('sweep', 'fig4c_efficiency_grid.csv'),
    'fig4d_comparison.yaml': ('compare', 'fig4d_comparison.csv'),
}
WORKERS = -1  # all cores for the grids


def reproduce_figures():
    os.makedirs(PROCESSED_DIR, exist_ok=True)
    failures = 0

    for recipe, (command, table) in FIGURES.items():
        # 1. Load the recipe
        path = os.path.join(RECIPES_DIR, recipe)
        print(f"⏳ Loading {path}...")
        try:
            cfg = load_config(path)
        except TransducerError as e:
            print(f"❌ Error: {e}")
            print("Please run this script from the repository root.")
            failures += 1
            continue

        # 2. Run it through the same handler the CLI uses
        print(f"🔬 Running '{command}'...")
        try:
            frame = HANDLERS[command](cfg, Namespace(workers=WORKERS))
        except TransducerError as e:
            print(f"❌ {e.error_class}: {e}")
            failures += 1
            continue

        # 3. Save the table for the dashboard
        out_path = os.path.join(PROCESSED_DIR, table)
        write_table(frame, out_path)
        print(f"💾 Saved {len(frame)} rows to {out_path}")

    if failures:
        print(f"❌ {failures} figure(s) failed.")
        return 1
    print("✅ All figure tables reproduced. Open the dashboard to explore them.")
    return 0


if __name__ == "__main__":
    sys.exit(reproduce_figures())
