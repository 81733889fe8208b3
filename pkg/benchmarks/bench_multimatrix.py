#!/usr/bin/env python3
import time

import numpy as np
from multimatrix.assign import brute_force_assign, solve_axial_map
from multimatrix.cli.generate import random_costmatrix, random_multimatrix
from multimatrix.core import Shape
from multimatrix.det import find_nonzero_monomial
from multimatrix.minimax import duality_gap

ITERATIONS = 200


def _instances(make):
    rng = np.random.default_rng(0)
    return [make(rng) for _ in range(ITERATIONS)]


def bench_assign_branch_and_bound():
    costs = _instances(lambda rng: random_costmatrix(Shape(3, 4), 0, 99, rng))
    start = time.perf_counter()
    for c in costs:
        solve_axial_map(c)
    return time.perf_counter() - start


def bench_assign_brute_force():
    costs = _instances(lambda rng: random_costmatrix(Shape(3, 4), 0, 99, rng))
    start = time.perf_counter()
    for c in costs:
        brute_force_assign(c)
    return time.perf_counter() - start


def bench_monomial_search():
    matrices = _instances(lambda rng: random_multimatrix(Shape(4, 3), 0.5, rng))
    start = time.perf_counter()
    for m in matrices:
        find_nonzero_monomial(m)
    return time.perf_counter() - start


def bench_line_gap():
    matrices = _instances(lambda rng: random_multimatrix(Shape(3, 3), 0.5, rng))
    start = time.perf_counter()
    for m in matrices:
        duality_gap(m)
    return time.perf_counter() - start


def run_all():
    results = {}
    results["assign_branch_and_bound"] = bench_assign_branch_and_bound()
    results["assign_brute_force"] = bench_assign_brute_force()
    results["monomial_search"] = bench_monomial_search()
    results["line_gap"] = bench_line_gap()
    return results


if __name__ == "__main__":
    print(f"multimatrix benchmarks ({ITERATIONS} instances)")
    print("-" * 40)
    results = run_all()
    for name, elapsed in results.items():
        per_second = ITERATIONS / elapsed
        print(f"{name}: {elapsed:.4f}s ({per_second:,.0f} instances/sec)")
