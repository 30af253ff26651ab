"""
Decision Pipeline Nodes

py-trees behaviours that run a decision, gate on its verification and export
its witness. The CLI builds a memoryful Sequence [Decide, Gate, Export] and
ticks it once; every node reads and writes the shared blackboard.

Node Types:
- DecisionNode: run a decision procedure, store the report (or the error)
- VerificationGateNode: SUCCESS iff the stored report verified
- WitnessExportNode: write the witness ball function to CSV when asked to

All nodes follow the py-trees Status convention:
- SUCCESS: step completed
- FAILURE: decision raised, verification failed or export failed
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

import py_trees
from py_trees.common import Status

from .blackboard_keys import BlackboardKeys
from .errors import PompeiuError
from .free_group import BallFunction

logger = logging.getLogger(__name__)


class DecisionNode(py_trees.behaviour.Behaviour):
    """
    Runs a zero-argument decision procedure and stores its result.

    Example:
        decide = DecisionNode(
            name="TwoCircle",
            procedure=lambda: two_circle_check(2, 1, 3),
        )

    Attributes:
        procedure: Callable returning a report object
        report_key: Blackboard key for the report
    """

    def __init__(self, name: str, procedure: Callable[[], Any], report_key: Optional[str] = None):
        super().__init__(name)
        self.procedure = procedure
        self.report_key = report_key or BlackboardKeys.REPORT

        self.blackboard = self.attach_blackboard_client(name=self.name)
        self.blackboard.register_key(key=self.report_key, access=py_trees.common.Access.WRITE)
        self.blackboard.register_key(key=BlackboardKeys.ERROR, access=py_trees.common.Access.WRITE)
        self.blackboard.register_key(key=BlackboardKeys.WITNESS, access=py_trees.common.Access.WRITE)

    def update(self) -> Status:
        logger.debug(f"[{self.name}] Running decision procedure")
        try:
            report = self.procedure()
        except PompeiuError as e:
            logger.error(f"[{self.name}] Decision failed: {e.message}")
            self.blackboard.set(BlackboardKeys.ERROR, e)
            return Status.FAILURE

        self.blackboard.set(self.report_key, report)
        self.blackboard.set(BlackboardKeys.WITNESS, getattr(report, "witness", None))
        logger.info(f"[{self.name}] Decision stored under {self.report_key}")
        return Status.SUCCESS


class VerificationGateNode(py_trees.behaviour.Behaviour):
    """
    Passes only verified reports.

    Reports without a ``verified`` attribute (e.g. scan tables) pass.
    """

    def __init__(self, name: str = "VerificationGate", report_key: Optional[str] = None):
        super().__init__(name)
        self.report_key = report_key or BlackboardKeys.REPORT

        self.blackboard = self.attach_blackboard_client(name=self.name)
        self.blackboard.register_key(key=self.report_key, access=py_trees.common.Access.READ)
        self.blackboard.register_key(key=BlackboardKeys.VERIFIED, access=py_trees.common.Access.WRITE)

    def update(self) -> Status:
        try:
            report = self.blackboard.get(self.report_key)
        except KeyError:
            logger.warning(f"[{self.name}] No report under {self.report_key}")
            return Status.FAILURE

        verified = bool(getattr(report, "verified", True))
        self.blackboard.set(BlackboardKeys.VERIFIED, verified)
        if not verified:
            logger.error(f"[{self.name}] Witness verification failed")
            return Status.FAILURE
        return Status.SUCCESS


class WitnessExportNode(py_trees.behaviour.Behaviour):
    """
    Writes the stored witness to CSV.

    Does nothing (SUCCESS) when no path is configured or the report has no
    ball-function witness.

    Attributes:
        path: Output CSV path, or None
    """

    def __init__(self, name: str = "WitnessExport", path: Optional[Path] = None):
        super().__init__(name)
        self.path = Path(path) if path is not None else None

        self.blackboard = self.attach_blackboard_client(name=self.name)
        self.blackboard.register_key(key=BlackboardKeys.WITNESS, access=py_trees.common.Access.READ)
        self.blackboard.register_key(key=BlackboardKeys.WITNESS_PATH, access=py_trees.common.Access.WRITE)

    def update(self) -> Status:
        if self.path is None:
            return Status.SUCCESS
        try:
            witness = self.blackboard.get(BlackboardKeys.WITNESS)
        except KeyError:
            witness = None
        if not isinstance(witness, BallFunction):
            logger.info(f"[{self.name}] No ball-function witness to export")
            return Status.SUCCESS
        try:
            witness.to_csv(self.path)
        except OSError as e:
            logger.error(f"[{self.name}] Could not write {self.path}: {e}")
            return Status.FAILURE
        self.blackboard.set(BlackboardKeys.WITNESS_PATH, str(self.path))
        return Status.SUCCESS


@dataclass
class PipelineOutcome:
    """
    Result of one pipeline run.

    Attributes:
        status: Final status of the root Sequence
        report: The stored report, if the decision succeeded
        error: The PompeiuError raised by the decision, if any
        verified: Whether the gate passed (None if it never ran)
        witness_path: Where the witness CSV was written, if it was
    """

    status: Status
    report: Any = None
    error: Optional[PompeiuError] = None
    verified: Optional[bool] = None
    witness_path: Optional[Path] = None


def build_decision_tree(
    procedure: Callable[[], Any], witness_path: Optional[Path] = None, name: str = "Decision"
) -> py_trees.composites.Sequence:
    """
    Sequence [Decide, Gate, Export] for one decision procedure.

    The report is stored under ``BlackboardKeys.report_key(name)``.
    """
    report_key = BlackboardKeys.report_key(name)
    return py_trees.composites.Sequence(
        name=f"{name}Pipeline",
        memory=True,
        children=[
            DecisionNode(name=name, procedure=procedure, report_key=report_key),
            VerificationGateNode(report_key=report_key),
            WitnessExportNode(path=witness_path),
        ],
    )


def run_decision_tree(
    procedure: Callable[[], Any], witness_path: Optional[Path] = None, name: str = "Decision"
) -> PipelineOutcome:
    """
    Build, set up and tick the pipeline once, then read the blackboard.
    """
    py_trees.blackboard.Blackboard.clear()
    root = build_decision_tree(procedure, witness_path, name)
    root.setup_with_descendants()
    root.tick_once()

    report_key = BlackboardKeys.report_key(name)
    reader = py_trees.blackboard.Client(name="PipelineReader")
    for key in (report_key, BlackboardKeys.ERROR, BlackboardKeys.VERIFIED, BlackboardKeys.WITNESS_PATH):
        reader.register_key(key=key, access=py_trees.common.Access.READ)

    def read(key: str) -> Any:
        return reader.get(key) if reader.exists(key) else None

    exported = read(BlackboardKeys.WITNESS_PATH)
    outcome = PipelineOutcome(
        status=root.status,
        report=read(report_key),
        error=read(BlackboardKeys.ERROR),
        verified=read(BlackboardKeys.VERIFIED),
        witness_path=Path(exported) if exported is not None else None,
    )
    logger.debug(f"Pipeline {name} finished with {root.status}")
    return outcome
