"""
Run configuration for one CLI invocation
"""
import hashlib
import json
import os
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional

from ..config import config

# fields that change where or how fast a run happens, never what it reports
_UNHASHED = ("out", "jobs", "metrics_out", "timings")


@dataclass(frozen=True)
class RunConfig:
    """
    Everything that determines a run's report. Two runs with equal hashes
    produce byte-identical JSON reports.
    """

    subcommand: str
    params: Dict[str, Any] = field(default_factory=dict)
    tol: Optional[float] = None
    jobs: Optional[int] = None
    seed: int = 0
    out: Optional[str] = None
    format: str = "json"
    metrics_out: Optional[str] = None
    timings: bool = False

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        """Build from an argparse namespace; unknown keys become params"""
        common = {"subcommand", "tol", "jobs", "seed", "out", "format", "metrics_out", "timings",
                  "log_level", "handler"}
        params = {
            key: value
            for key, value in sorted(vars(args).items())
            if key not in common
        }
        return cls(
            subcommand=args.subcommand,
            params=params,
            tol=args.tol,
            jobs=resolve_cli_jobs(args.jobs),
            seed=config.SEED if args.seed is None else args.seed,
            out=args.out,
            format=args.format,
            metrics_out=args.metrics_out,
            timings=args.timings,
        )

    def canonical(self) -> Dict[str, Any]:
        record = asdict(self)
        for key in _UNHASHED:
            record.pop(key)
        return record

    @property
    def config_hash(self) -> str:
        payload = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"), default=str)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def resolve_cli_jobs(jobs: Optional[int]) -> int:
    """--jobs, then SPEXLAB_JOBS, then config.JOBS"""
    if jobs is not None:
        return jobs
    env = os.getenv("SPEXLAB_JOBS")
    if env:
        return int(env)
    return config.JOBS
