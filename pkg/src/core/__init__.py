"""Algorithms: word operators, thinning, engines, planner and the verification harness."""
