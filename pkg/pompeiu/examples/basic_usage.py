"""
Example Usage of the Pompeiu Toolkit

Runs a few decisions end to end: the two-circle problem in F_2, the mean-value
criterion, a family on Z and the sign character of Z_2, each through the same
py-trees pipeline the CLI uses.

Running examples:
    python -m pompeiu.examples.basic_usage
"""

import logging

import py_trees

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

from pompeiu import (
    FiniteAbelianGroup,
    finite_abelian_pompeiu_check,
    mvp_counterexample,
    mvp_hypothesis_check,
    run_decision_tree,
    two_circle_check,
    z_pompeiu_check,
)
from pompeiu.pipeline_nodes import build_decision_tree


# =============================================================================
# Example 1: Two-circle problem in F_2
# =============================================================================

def example_two_circle():
    """Radii (1, 3) are both odd: phi_0 is annihilated by both sphere sums."""
    for r, s in [(1, 3), (2, 3)]:
        outcome = run_decision_tree(lambda: two_circle_check(2, r, s), name=f"TwoCircle{r}{s}")
        print(f"two-circle ({r}, {s}): {outcome.report.summary()}")


# =============================================================================
# Example 2: Mean-value criterion
# =============================================================================

def example_mean_value():
    """(2, 3) forces harmonicity; (2, 4) does not, phi_{-4} is the counterexample."""
    print(f"mvp (2, 3): holds={mvp_hypothesis_check(2, 2, 3).holds}, gcd {mvp_hypothesis_check(2, 2, 3).gcd}")
    counterexample = mvp_counterexample(2, 2, 4)
    print(f"mvp (2, 4): counterexample phi_z at z = {counterexample.root.exact}, harmonic={counterexample.harmonic}")


# =============================================================================
# Example 3: Abelian groups
# =============================================================================

def example_abelian():
    report = z_pompeiu_check([[0, 1, 2], [0, 2, 4]])
    print(f"Z: {report.summary()}")
    report = finite_abelian_pompeiu_check(FiniteAbelianGroup((2,)), [[0, 1]])
    print(f"Z_2: {report.summary()}, witness {dict(report.witness.terms)}")


# =============================================================================
# Tree display
# =============================================================================

def display_pipeline():
    root = build_decision_tree(lambda: two_circle_check(2, 1, 3), name="TwoCircle")
    print(py_trees.display.unicode_tree(root))


if __name__ == "__main__":
    display_pipeline()
    example_two_circle()
    example_mean_value()
    example_abelian()
