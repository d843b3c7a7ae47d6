#!/usr/bin/env python3
"""Regenerates src/lebedev974.cpp from scipy's Lebedev-Laikov tables.

Only the node directions are emitted; quadrature weights are dropped.
"""
import sys

from scipy.integrate import lebedev_rule

nodes, _ = lebedev_rule(53)
assert nodes.shape == (3, 974)

out = sys.stdout
out.write("// Generated by scripts/gen_lebedev974.py. Do not edit.\n\n")
out.write('#include "tramp/grid.hpp"\n\n')
out.write("namespace tramp::detail {\n\n")
out.write("const std::array<std::array<double, 3>, kLebedevNodeCount> kLebedev974 = {{\n")
for x, y, z in nodes.T:
    out.write(f"    {{{x:.17g}, {y:.17g}, {z:.17g}}},\n")
out.write("}};\n\n}  // namespace tramp::detail\n")
