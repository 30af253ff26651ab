"""
Blackboard Keys for the Decision Pipeline

Defines standardized keys for sharing reports between pipeline nodes via the
py-trees blackboard.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class BlackboardKeys:
    """
    Standardized blackboard key definitions for pipeline nodes.

    Usage:
        blackboard = py_trees.blackboard.Client(name="MyNode")
        blackboard.register_key(key=BlackboardKeys.REPORT, access=py_trees.common.Access.WRITE)
        blackboard.set(BlackboardKeys.REPORT, report)
    """

    # Decision outcome
    REPORT: str = "pompeiu/report"
    ERROR: str = "pompeiu/error"

    # Witness handling
    WITNESS: str = "pompeiu/witness"
    WITNESS_PATH: str = "pompeiu/witness_path"

    # Verification gate
    VERIFIED: str = "pompeiu/verified"

    @classmethod
    def report_key(cls, name: str) -> str:
        """
        Namespaced key for the report of a named decision.

        Example:
            BlackboardKeys.report_key("two-circle")
            # Returns: "pompeiu/reports/two-circle"
        """
        return f"pompeiu/reports/{name}"
