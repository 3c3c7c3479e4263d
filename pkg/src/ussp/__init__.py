"""Unbounded subset-sum solvers, exact oracles and experiment harness."""
