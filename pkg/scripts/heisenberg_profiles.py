"""Enumerate the Heisenberg group mod p for each supported prime and print its profile."""

import time

from cremona.finite_obstruction import SUPPORTED_PRIMES, birkhoff_min_dim, heisenberg_profile, monomial_relations

for p in SUPPORTED_PRIMES:
    start = time.perf_counter()
    prof = heisenberg_profile(p)
    print(prof.to_text())
    print(f"  min degree faithful on center: {birkhoff_min_dim(p)}")
    print(f"  monomial relations: {all(monomial_relations(p).values())}")
    print(f"  ({time.perf_counter() - start:.2f}s)\n")
