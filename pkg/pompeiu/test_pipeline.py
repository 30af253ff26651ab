#!/usr/bin/env python3
"""
Test suite for the decision pipeline

Validates the py-trees behaviours: decision storage, the verification gate,
witness export and the one-shot pipeline runner.
"""

import sys
from types import SimpleNamespace

import py_trees
import pytest
from py_trees.common import Access, Status

from pompeiu.blackboard_keys import BlackboardKeys
from pompeiu.decision import mvp_scan, two_circle_check
from pompeiu.errors import InvalidInputError
from pompeiu.free_group import BallFunction
from pompeiu.pipeline_nodes import (
    DecisionNode,
    VerificationGateNode,
    WitnessExportNode,
    build_decision_tree,
    run_decision_tree,
)
from pompeiu.radial import spherical


@pytest.fixture(autouse=True)
def clean_blackboard():
    py_trees.blackboard.Blackboard.clear()
    yield
    py_trees.blackboard.Blackboard.clear()


def reader(*keys: str) -> py_trees.blackboard.Client:
    client = py_trees.blackboard.Client(name="TestReader")
    for key in keys:
        client.register_key(key=key, access=Access.READ)
    return client


def tick(node: py_trees.behaviour.Behaviour) -> Status:
    node.setup()
    node.tick_once()
    return node.status


class TestDecisionNode:
    def test_stores_report_and_witness(self):
        node = DecisionNode("TwoCircle", lambda: two_circle_check(2, 1, 3))
        assert tick(node) == Status.SUCCESS
        bb = reader(BlackboardKeys.REPORT, BlackboardKeys.WITNESS)
        assert not bb.get(BlackboardKeys.REPORT).pompeiu
        assert bb.get(BlackboardKeys.WITNESS) == spherical(2, 0, 6)

    def test_stores_error(self):
        def failing():
            raise InvalidInputError("bad family")

        node = DecisionNode("Failing", failing)
        assert tick(node) == Status.FAILURE
        bb = reader(BlackboardKeys.ERROR)
        assert bb.get(BlackboardKeys.ERROR).message == "bad family"

    def test_named_report_key(self):
        key = BlackboardKeys.report_key("two-circle")
        assert key == "pompeiu/reports/two-circle"
        tree = py_trees.composites.Sequence(
            name="Named",
            memory=True,
            children=[
                DecisionNode("TwoCircle", lambda: two_circle_check(2, 2, 3), report_key=key),
                VerificationGateNode(report_key=key),
            ],
        )
        tree.setup_with_descendants()
        tree.tick_once()
        assert tree.status == Status.SUCCESS
        assert reader(key).get(key).pompeiu


class TestVerificationGate:
    def test_missing_report(self):
        assert tick(VerificationGateNode()) == Status.FAILURE

    def test_failed_verification(self):
        writer = py_trees.blackboard.Client(name="TestWriter")
        writer.register_key(key=BlackboardKeys.REPORT, access=Access.WRITE)
        writer.set(BlackboardKeys.REPORT, SimpleNamespace(verified=False))
        assert tick(VerificationGateNode()) == Status.FAILURE
        assert reader(BlackboardKeys.VERIFIED).get(BlackboardKeys.VERIFIED) is False

    def test_reports_without_verification_pass(self):
        writer = py_trees.blackboard.Client(name="TestWriter")
        writer.register_key(key=BlackboardKeys.REPORT, access=Access.WRITE)
        writer.set(BlackboardKeys.REPORT, mvp_scan(2, 3))
        assert tick(VerificationGateNode()) == Status.SUCCESS


class TestWitnessExport:
    def test_without_path_does_nothing(self):
        assert tick(WitnessExportNode()) == Status.SUCCESS

    def test_writes_ball_function(self, tmp_path):
        writer = py_trees.blackboard.Client(name="TestWriter")
        writer.register_key(key=BlackboardKeys.WITNESS, access=Access.WRITE)
        writer.set(BlackboardKeys.WITNESS, spherical(2, 0, 3))
        path = tmp_path / "phi0.csv"
        assert tick(WitnessExportNode(path=path)) == Status.SUCCESS
        assert BallFunction.from_csv(path, 2) == spherical(2, 0, 3)
        assert reader(BlackboardKeys.WITNESS_PATH).get(BlackboardKeys.WITNESS_PATH) == str(path)

    def test_unwritable_path(self, tmp_path):
        writer = py_trees.blackboard.Client(name="TestWriter")
        writer.register_key(key=BlackboardKeys.WITNESS, access=Access.WRITE)
        writer.set(BlackboardKeys.WITNESS, spherical(2, 0, 2))
        assert tick(WitnessExportNode(path=tmp_path / "missing" / "phi0.csv")) == Status.FAILURE


class TestRunDecisionTree:
    def test_not_pompeiu_with_export(self, tmp_path):
        path = tmp_path / "witness.csv"
        outcome = run_decision_tree(lambda: two_circle_check(2, 1, 3), path, name="two-circle")
        assert outcome.status == Status.SUCCESS
        assert outcome.verified is True
        assert outcome.error is None
        assert not outcome.report.pompeiu
        assert BallFunction.from_csv(path, 2) == outcome.report.witness
        assert outcome.witness_path == path
        key = BlackboardKeys.report_key("two-circle")
        assert reader(key).get(key) is outcome.report

    def test_pompeiu_exports_nothing(self, tmp_path):
        path = tmp_path / "witness.csv"
        outcome = run_decision_tree(lambda: two_circle_check(2, 2, 3), path)
        assert outcome.status == Status.SUCCESS
        assert outcome.report.pompeiu
        assert not path.exists()
        assert outcome.witness_path is None

    def test_error_stops_the_sequence(self):
        outcome = run_decision_tree(lambda: two_circle_check(2, 0, 3))
        assert outcome.status == Status.FAILURE
        assert isinstance(outcome.error, InvalidInputError)
        assert outcome.report is None
        assert outcome.verified is None

    def test_tree_shares_the_named_report_key(self):
        tree = build_decision_tree(lambda: None, name="two-circle")
        decide, gate, _ = tree.children
        assert decide.report_key == gate.report_key == BlackboardKeys.report_key("two-circle")

    def test_tree_shape(self):
        tree = build_decision_tree(lambda: None, name="Decide")
        assert tree.name == "DecidePipeline"
        assert [child.name for child in tree.children] == ["Decide", "VerificationGate", "WitnessExport"]


def main():
    """Main entry point"""
    sys.exit(pytest.main([__file__, "-v"]))


if __name__ == "__main__":
    main()
