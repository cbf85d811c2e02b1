"""Wall-clock profile of the acceptance suite over several seeds.

    python3 scripts/timing.py --seeds 1 2 42
"""

import argparse

from cremona.verify import CRITERIA

ap = argparse.ArgumentParser()
ap.add_argument("--seeds", type=int, nargs="+", default=[42])
args = ap.parse_args()

for seed in args.seeds:
    print(f"seed {seed}")
    for crit in CRITERIA:
        print("  " + crit(seed).line())
