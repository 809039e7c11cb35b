"""Prometheus metrics for the qtoric toolkit."""

from pathlib import Path

from prometheus_client import REGISTRY, Counter, Histogram, write_to_textfile

GRADED_PIECE_CACHE_TOTAL = Counter(
    "qtoric_graded_piece_cache_total",
    "Graded-piece cache lookups by outcome",
    ["outcome"],
)

SMITH_FORMS_TOTAL = Counter(
    "qtoric_smith_forms_total", "Total number of Smith normal forms computed"
)

CHECKS_TOTAL = Counter(
    "qtoric_checks_total",
    "Total number of structural checks run",
    ["check", "status"],
)

CLI_COMMANDS_TOTAL = Counter(
    "qtoric_cli_commands_total",
    "Total number of CLI commands by exit code",
    ["command", "exit_code"],
)

GRADED_PIECE_DURATION = Histogram(
    "qtoric_graded_piece_seconds",
    "Time spent assembling and reducing a graded piece",
    ["degree"],
    buckets=[0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 10.0, 30.0, 60.0],
)


def record_cache_lookup(outcome: str):
    """Record a graded-piece cache lookup (``memory_hit``, ``disk_hit`` or ``miss``)."""
    GRADED_PIECE_CACHE_TOTAL.labels(outcome=outcome).inc()


def record_smith_form():
    """Record one Smith normal form computation."""
    SMITH_FORMS_TOTAL.inc()


def record_graded_piece_duration(degree: int, duration: float):
    """Record how long a graded piece took to compute."""
    GRADED_PIECE_DURATION.labels(degree=str(degree)).observe(duration)


def record_check(check: str, *, passed: bool = True):
    """Record the outcome of a structural check."""
    status = "pass" if passed else "fail"
    CHECKS_TOTAL.labels(check=check, status=status).inc()


def record_cli_command(command: str, exit_code: int):
    """Record a finished CLI command."""
    CLI_COMMANDS_TOTAL.labels(command=command, exit_code=str(exit_code)).inc()


def write_metrics_file(path: Path):
    """Write the default registry to ``path`` in text exposition format."""
    path.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(path), REGISTRY)
