"""Print the class / dimension-bound table for Gamma_1..Gamma_N and re-check it.

    python3 scripts/nonlinearity_table.py --max-n 12
"""

import argparse
from dataclasses import dataclass

from cremona.certificates import check_certificate, gamma_class, nonlinearity_report


@dataclass
class Config:
    max_n: int = 10
    trials: int = 20
    seed: int = 42


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    report = nonlinearity_report(cfg.max_n)
    print(report.to_text())
    certs = [gamma_class(n, trials=cfg.trials, seed=cfg.seed).to_json() for n in range(1, cfg.max_n + 1)]
    failures = check_certificate(certs)
    print(f"\nre-checked {len(certs)} certificates: {'all valid' if not failures else failures}")


if __name__ == "__main__":
    main()
