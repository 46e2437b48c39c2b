"""
Verification reports comparing the census against the closed-form counts.

Mismatches are report content, never exceptions: every check records what
was expected and what the census found.
"""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from app.combinatorics.counting import count_all, count_connected, count_minimal
from app.network.canonical import canonical_form
from app.network.equivalence import linear_equiv_oracle
from app.network.network import Matrix, Network, degree, is_connected, is_reduced, reduce
from app.oracle.census import OrbitCensus, cached_census
from app.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Check:
    """One expected-versus-actual comparison."""
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'expected': self.expected, 'actual': self.actual, 'pass': self.passed}


@dataclass
class VerificationReport:
    """
    Checks run for one (n, r).

    Attributes:
        n (int): Number of cells
        r (int): Degree
        checks (List[Check]): Checks in the order they ran
    """
    n: int
    r: int
    checks: List[Check] = field(default_factory=list)

    def add(self, name: str, expected: Any, actual: Any) -> Check:
        check = Check(name, expected, actual)
        self.checks.append(check)
        if not check.passed:
            logger.warning(f"({self.n},{self.r}) check failed: {name}: expected {expected}, got {actual}")
        return check

    def extend(self, other: 'VerificationReport') -> 'VerificationReport':
        """Append the checks of another report for the same (n, r)."""
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'r': self.r, 'checks': [check.to_dict() for check in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(',', ':')) + '\n'

    def to_text(self) -> str:
        lines = [f"verification n={self.n} r={self.r}"]
        for check in self.checks:
            status = 'PASS' if check.passed else 'FAIL'
            lines.append(f"  {status} {check.name}: expected {check.expected}, actual {check.actual}")
        lines.append(f"{len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed")
        return '\n'.join(lines) + '\n'


def verify_counts(
    n: int,
    r: int,
    workers: Optional[int] = None,
    budget: Optional[int] = None
) -> VerificationReport:
    """
    Compare census totals with H(n, r), K(n, r) and M(n, r).

    Args:
        n (int): Number of cells
        r (int): Degree
        workers (Optional[int]): Census worker processes
        budget (Optional[int]): Largest allowed |Omega|

    Returns:
        VerificationReport: Three checks

    Raises:
        BudgetExceededError: If the census is infeasible
    """
    result = cached_census(n, r, workers=workers, budget=budget)
    report = VerificationReport(n, r)
    report.add(f"H({n},{r})", count_all(n, r), result.total_orbits)
    report.add(f"K({n},{r})", count_connected(n, r), result.connected_orbits)
    report.add(f"M({n},{r})", count_minimal(n, r), result.minimal_connected_orbits)
    return report


def _minimal_forms(result: OrbitCensus) -> List[Matrix]:
    minimal = []
    for matrix in result.representatives:
        G = Network(matrix)
        if is_connected(G) and is_reduced(G):
            minimal.append(matrix)
    return minimal


def _format(matrix: Matrix) -> str:
    return str([list(row) for row in matrix])


def verify_class_structure(
    n: int,
    r: int,
    workers: Optional[int] = None,
    budget: Optional[int] = None
) -> VerificationReport:
    """
    Check how the connected degree-r classes fall into ODE-equivalence classes.

    Every minimal connected network of degree s < r must be the reduction of
    exactly floor(r/s) connected degree-r classes, and one of degree r only
    of itself. Also checks the aggregate the M recursion relies on, that
    reduction lowers the degree of every non-minimal class, that only the
    single cell reduces to degree 0, and that the linear decider confirms one
    sampled class per reduction.

    Args:
        n (int): Number of cells
        r (int): Degree
        workers (Optional[int]): Census worker processes
        budget (Optional[int]): Largest allowed |Omega|

    Returns:
        VerificationReport: Aggregate checks plus one itemized check per mismatch

    Raises:
        BudgetExceededError: If a census is infeasible
    """
    result = cached_census(n, r, workers=workers, budget=budget)
    breakdown = result.class_breakdown
    report = VerificationReport(n, r)
    logger.info(f"Verifying class structure of ({n},{r})")

    non_minimal = 0
    lowered = 0
    samples: Dict[Matrix, Network] = {}
    for matrix in result.representatives:
        G = Network(matrix)
        if not is_connected(G):
            continue
        reduced, _ = reduce(G)
        if not is_reduced(G):
            if degree(reduced) < r:
                lowered += 1
            if degree(reduced) >= 1:
                non_minimal += 1
        samples.setdefault(canonical_form(reduced), G)

    report.add(
        "non-minimal connected classes",
        sum((r // s) * count_minimal(n, s) for s in range(1, r)),
        non_minimal,
    )
    report.add("class breakdown total", result.connected_orbits, sum(breakdown.values()))
    report.add(
        "reductions lowering the degree",
        result.connected_orbits - result.minimal_connected_orbits,
        lowered,
    )

    accounted = set()
    for s in range(1, r + 1):
        expected = r // s if s < r else 1
        forms = _minimal_forms(cached_census(n, s, workers=workers, budget=budget))
        matching = 0
        for form in forms:
            accounted.add(form)
            actual = breakdown.get(form, 0)
            if actual == expected:
                matching += 1
            else:
                report.add(f"classes reducing to {_format(form)}", expected, actual)
        report.add(f"degree-{s} minimal networks with {expected} class(es) each", len(forms), matching)

    zero_degree = sum(count for form, count in breakdown.items() if degree(Network(form)) == 0)
    report.add("classes reducing to degree 0", 1 if n == 1 else 0, zero_degree)

    stray = [form for form in breakdown if form not in accounted and degree(Network(form)) > 0]
    report.add("reductions outside the minimal networks", 0, len(stray))

    confirmed = 0
    for form, G in samples.items():
        if linear_equiv_oracle(G, Network(form)):
            confirmed += 1
    report.add("sampled pairs confirmed by the linear decider", len(samples), confirmed)

    return report


def verify(
    n: int,
    r: int,
    workers: Optional[int] = None,
    budget: Optional[int] = None
) -> VerificationReport:
    """verify_counts followed by verify_class_structure, as one report."""
    report = verify_counts(n, r, workers=workers, budget=budget)
    return report.extend(verify_class_structure(n, r, workers=workers, budget=budget))
