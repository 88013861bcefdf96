"""Command-line harness"""
from .harness import build_parser, main, run
from .manifest import MANIFEST, ManifestEntry, render_manifest
from .reports import emit_report, round_significant
from .run_config import RunConfig

__all__ = [
    "build_parser",
    "main",
    "run",
    "MANIFEST",
    "ManifestEntry",
    "render_manifest",
    "emit_report",
    "round_significant",
    "RunConfig",
]
